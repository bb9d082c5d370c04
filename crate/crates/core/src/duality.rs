//! Non-degenerate pairings `⟨x, y⟩ = xᵀ P y` and endomorphism pairs that
//! scale them, `⟨f x, g y⟩ = λ ⟨x, y⟩`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{self, Rational};
use crate::algebra::{Matrix, Poly, PolyMatrix};
use crate::error::{Error, Result};
use crate::zeta::GradedAction;

/// `(f, g, P, λ)` with `det P ≠ 0` and `fᵀ P g = λ P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TripleRepr", into = "TripleRepr")]
pub struct PairingTriple {
    f: Matrix,
    g: Matrix,
    pairing: Matrix,
    lambda: Rational,
}

/// Wire form `{"f": [[...]], "g": [[...]], "P": [[...]], "lambda": "p/q"}`,
/// before the pairing relation is checked.
#[derive(Serialize, Deserialize)]
pub struct TripleRepr {
    pub f: Matrix,
    pub g: Matrix,
    #[serde(rename = "P")]
    pub pairing: Matrix,
    #[serde(with = "rational::serde_str")]
    pub lambda: Rational,
}

impl TripleRepr {
    pub fn into_unchecked(self) -> Result<PairingTriple> {
        PairingTriple::new_unchecked(self.f, self.g, self.pairing, self.lambda)
    }
}

impl TryFrom<TripleRepr> for PairingTriple {
    type Error = Error;
    fn try_from(r: TripleRepr) -> Result<Self> {
        PairingTriple::new(r.f, r.g, r.pairing, r.lambda)
    }
}

impl From<PairingTriple> for TripleRepr {
    fn from(t: PairingTriple) -> Self {
        TripleRepr { f: t.f, g: t.g, pairing: t.pairing, lambda: t.lambda }
    }
}

impl PairingTriple {
    pub fn new(f: Matrix, g: Matrix, pairing: Matrix, lambda: Rational) -> Result<Self> {
        let t = PairingTriple::new_unchecked(f, g, pairing, lambda)?;
        if !t.respects_pairing() {
            return Err(Error::PairingViolated);
        }
        Ok(t)
    }

    /// Checks shapes, `λ ≠ 0` and non-degeneracy, but not the pairing relation.
    /// Useful for building deliberately broken triples.
    pub fn new_unchecked(f: Matrix, g: Matrix, pairing: Matrix, lambda: Rational) -> Result<Self> {
        let n = pairing.size();
        for m in [&f, &g] {
            if m.size() != n {
                return Err(Error::DimensionMismatch { expected: n, got: m.size() });
            }
        }
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if pairing.det().is_zero() {
            return Err(Error::DegeneratePairing);
        }
        Ok(PairingTriple { f, g, pairing, lambda })
    }

    /// Completes `(f, P, λ)` with the adjoint `g` from [`pairing_adjoint`].
    pub fn complete(f: Matrix, pairing: Matrix, lambda: Rational) -> Result<Self> {
        let g = pairing_adjoint(&f, &pairing, &lambda)?;
        PairingTriple::new(f, g, pairing, lambda)
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn g(&self) -> &Matrix {
        &self.g
    }

    pub fn pairing(&self) -> &Matrix {
        &self.pairing
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.pairing.size()
    }

    /// `fᵀ P g == λ P`.
    pub fn respects_pairing(&self) -> bool {
        &(&self.f.transpose() * &self.pairing) * &self.g == self.pairing.scale(&self.lambda)
    }

    /// Replaces `g`, keeping the rest; the result may violate the pairing relation.
    pub fn with_g(&self, g: Matrix) -> Result<Self> {
        PairingTriple::new_unchecked(self.f.clone(), g, self.pairing.clone(), self.lambda.clone())
    }
}

/// The map `g = λ P⁻¹ (fᵀ)⁻¹ P` on the second factor that makes `(f, g)`
/// scale the pairing `P` by `λ`.
pub fn pairing_adjoint(f: &Matrix, pairing: &Matrix, lambda: &Rational) -> Result<Matrix> {
    if f.size() != pairing.size() {
        return Err(Error::DimensionMismatch { expected: pairing.size(), got: f.size() });
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let p_inv = pairing.inverse().ok_or(Error::DegeneratePairing)?;
    let ft_inv = f.transpose().inverse().ok_or(Error::SingularMap)?;
    Ok((&(&p_inv * &ft_inv) * pairing).scale(lambda))
}

/// `det(f) · det(g) == λ^n`.
pub fn check_det_product(t: &PairingTriple) -> bool {
    t.f.det() * t.g.det() == rational::pow(&t.lambda, t.dim() as i64)
}

/// `det(I - g t) · det f == (-1)^n λ^n t^n det(I - f/(λ t))`, compared as
/// polynomials in `t` after absorbing `t^n` into the right-hand determinant:
/// `t^n det(I - f/(λt)) = det(t I - f/λ)`.
pub fn check_char_identity(t: &PairingTriple) -> bool {
    let (lhs, rhs) = char_identity_sides(t);
    lhs == rhs
}

/// Both sides of the characteristic identity, as polynomials in `t`.
pub fn char_identity_sides(t: &PairingTriple) -> (Poly, Poly) {
    let n = t.dim();
    let lhs = t.g.det_one_minus_z().scale(&t.f.det());
    let f_over_lambda = t.f.scale(&t.lambda.recip());
    let shifted = PolyMatrix::from_fn(n, |i, j| {
        let diag = if i == j { Rational::from_integer(1.into()) } else { Rational::zero() };
        Poly::new(vec![-f_over_lambda.get(i, j).clone(), diag])
    });
    let coef = rational::sign(n as i64) * rational::pow(&t.lambda, n as i64);
    (lhs, shifted.det().scale(&coef))
}

/// The action `(A_0, A_1, A_2) = ([1], A, [λ])` of a map of degree `λ` on a
/// closed surface-like space whose middle degree carries the pairing `J`.
pub fn build_closed_duality_action(a: &Matrix, j: &Matrix, lambda: &Rational) -> Result<GradedAction> {
    if a.size() != j.size() {
        return Err(Error::DimensionMismatch { expected: j.size(), got: a.size() });
    }
    if j.det().is_zero() {
        return Err(Error::DegeneratePairing);
    }
    if &(&a.transpose() * j) * a != j.scale(lambda) {
        return Err(Error::NotIsometry);
    }
    Ok(GradedAction::new(vec![
        Matrix::identity(1),
        a.clone(),
        Matrix::scalar(lambda.clone()),
    ]))
}

/// The standard symplectic form on `Q^{2m}`.
pub fn symplectic_form(m: usize) -> Matrix {
    Matrix::from_fn(2 * m, |i, j| {
        if j == i + m {
            rational::int(1)
        } else if i == j + m {
            rational::int(-1)
        } else {
            Rational::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::RationalFunction;

    #[test]
    fn adjoint_examples() {
        let p = Matrix::from_ints(&[&[2, 1], &[0, 3]]);
        assert_eq!(pairing_adjoint(&Matrix::identity(2), &p, &int(1)).unwrap(), Matrix::identity(2));
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(pairing_adjoint(&swap, &Matrix::identity(2), &int(1)).unwrap(), swap);
        let g = pairing_adjoint(&Matrix::scalar(int(2)), &Matrix::scalar(int(1)), &int(6)).unwrap();
        assert_eq!(g, Matrix::scalar(int(3)));
    }

    #[test]
    fn adjoint_errors() {
        let sing = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            pairing_adjoint(&Matrix::identity(2), &sing, &int(1)),
            Err(Error::DegeneratePairing)
        );
        assert_eq!(pairing_adjoint(&sing, &Matrix::identity(2), &int(1)), Err(Error::SingularMap));
        assert_eq!(
            pairing_adjoint(&Matrix::identity(2), &Matrix::identity(2), &int(0)),
            Err(Error::ZeroLambda)
        );
    }

    #[test]
    fn det_product_examples() {
        for n in 0..4 {
            let i = Matrix::identity(n);
            let t = PairingTriple::new(i.clone(), i.clone(), i, int(1)).unwrap();
            assert!(check_det_product(&t));
            assert!(check_char_identity(&t));
        }
        let t = PairingTriple::new(Matrix::scalar(int(2)), Matrix::scalar(int(3)), Matrix::scalar(int(1)), int(6))
            .unwrap();
        assert!(check_det_product(&t));
        let p = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        let t = PairingTriple::complete(Matrix::from_ints(&[&[1, 1], &[-1, 2]]), p, int(2)).unwrap();
        let broken = t.with_g(t.g().scale(&int(2))).unwrap();
        assert!(!check_det_product(&broken));
    }

    #[test]
    fn char_identity_examples() {
        let i = Matrix::identity(2);
        let t = PairingTriple::new(i.clone(), i.clone(), i, int(1)).unwrap();
        let (lhs, rhs) = char_identity_sides(&t);
        assert_eq!(lhs, Poly::from_ints(&[1, -2, 1]));
        assert_eq!(rhs, Poly::from_ints(&[1, -2, 1]));

        let t = PairingTriple::new(Matrix::scalar(int(2)), Matrix::scalar(int(3)), Matrix::scalar(int(1)), int(6))
            .unwrap();
        let (lhs, rhs) = char_identity_sides(&t);
        assert_eq!(lhs, Poly::from_ints(&[2, -6]));
        assert_eq!(rhs, Poly::from_ints(&[2, -6]));
    }

    #[test]
    fn triple_validation() {
        let i = Matrix::identity(2);
        assert_eq!(
            PairingTriple::new(i.clone(), i.scale(&int(2)), i.clone(), int(1)),
            Err(Error::PairingViolated)
        );
        assert_eq!(
            PairingTriple::new(i.clone(), i.clone(), Matrix::zeros(2), int(1)),
            Err(Error::DegeneratePairing)
        );
    }

    #[test]
    fn triple_json() {
        let t = PairingTriple::new(Matrix::scalar(int(2)), Matrix::scalar(int(3)), Matrix::scalar(int(1)), int(6))
            .unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"f":[["2"]],"g":[["3"]],"P":[["1"]],"lambda":"6"}"#);
        assert_eq!(serde_json::from_str::<PairingTriple>(&s).unwrap(), t);
        let bad = r#"{"f":[["2"]],"g":[["4"]],"P":[["1"]],"lambda":"6"}"#;
        assert!(serde_json::from_str::<PairingTriple>(bad).is_err());
    }

    #[test]
    fn closed_action_examples() {
        let j = symplectic_form(1);
        let a = build_closed_duality_action(&Matrix::from_ints(&[&[1, 1], &[0, 1]]), &j, &int(1)).unwrap();
        assert!(a.zeta().value().is_one());

        let a = build_closed_duality_action(&Matrix::from_ints(&[&[2, 1], &[1, 1]]), &j, &int(1)).unwrap();
        let expected = RationalFunction::reduce(Poly::from_ints(&[1, -3, 1]), Poly::from_ints(&[1, -2, 1])).unwrap();
        assert_eq!(a.zeta().value(), &expected);

        let a = build_closed_duality_action(&Matrix::identity(2), &j, &int(1)).unwrap();
        assert!(a.zeta().value().is_one());
        assert_eq!(a.euler_characteristic(), 0);

        assert_eq!(
            build_closed_duality_action(&Matrix::from_ints(&[&[1, 1], &[0, 1]]), &j, &int(2)),
            Err(Error::NotIsometry)
        );
    }
}
