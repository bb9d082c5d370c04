//! Alexander polynomials of braid closures and their zeta functions.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use super::burau::{burau_reduced, strand_sum};
use crate::algebra::rational::{self, int, Rational};
use crate::algebra::{Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::zeta::{verify_functional_equation, FunctionalEquationReport, ZetaFunction};

/// `Δ(z) = a_0 + a_1 z + ... + a_n z^n` with `a_0 a_n ≠ 0` and `Δ(1) = ±1`.
/// `b1 = n` is the first Betti number of the infinite cyclic cover.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderPoly {
    poly: Poly,
}

impl AlexanderPoly {
    pub fn new(poly: Poly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::InvalidAlexander("zero polynomial".into()));
        }
        if poly.constant_term().is_zero() {
            return Err(Error::InvalidAlexander("constant term is zero".into()));
        }
        if !poly.eval(&Rational::one()).abs().is_one() {
            return Err(Error::InvalidAlexander(format!("Δ(1) = {} is not ±1", poly.eval(&Rational::one()))));
        }
        Ok(AlexanderPoly { poly })
    }

    pub fn from_ints(cs: &[i64]) -> Result<Self> {
        AlexanderPoly::new(Poly::from_ints(cs))
    }

    /// Multiplies by the unit `±t^k` that makes the constant term nonzero and positive.
    pub fn normalized(poly: &Poly) -> Result<Self> {
        let (p, _) = poly.strip_z();
        let p = if p.constant_term().is_negative() { -p } else { p };
        AlexanderPoly::new(p)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn coefficients(&self) -> &[Rational] {
        self.poly.coeffs()
    }

    pub fn b1(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }

    /// Euler characteristic of the infinite cyclic cover: `1 - b1`.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.b1() as i64
    }
}

#[derive(Serialize, Deserialize)]
struct AlexanderRepr {
    coefficients: Poly,
    b1: usize,
}

impl Serialize for AlexanderPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlexanderRepr { coefficients: self.poly.clone(), b1: self.b1() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlexanderPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = AlexanderRepr::deserialize(d)?;
        let a = AlexanderPoly::new(r.coefficients).map_err(D::Error::custom)?;
        if a.b1() != r.b1 {
            return Err(D::Error::custom(format!("b1 = {} but degree is {}", r.b1, a.b1())));
        }
        Ok(a)
    }
}

/// `Δ` of the closure of `b`, from `det(I - B(b)) · (1 - t) / (1 - t^n)` where
/// `B` is the reduced Burau matrix, normalized by a unit `±t^k`.
pub fn alexander_from_braid(b: &BraidWord) -> Result<AlexanderPoly> {
    b.ensure_knot()?;
    let n = b.strands();
    let det = burau_reduced(b).one_minus().det();
    // det(I - B) = Δ · (1 + t + ... + t^{n-1}) up to a unit
    let quotient = det
        .body()
        .div_exact(&strand_sum(n))?
        .ok_or_else(|| Error::InvalidAlexander("Burau determinant not divisible by 1 + t + ... + t^(n-1)".into()))?;
    AlexanderPoly::normalized(&quotient)
}

/// Palindromic coefficients: `a_i = a_{n-i}`.
pub fn is_reciprocal(d: &AlexanderPoly) -> bool {
    let c = d.coefficients();
    c.iter().eq(c.iter().rev())
}

/// `ζ_t(z) = (1/a_n) · z^{b1} Δ(1/z) / (1 - z)`.
pub fn zeta_from_alexander(d: &AlexanderPoly) -> ZetaFunction {
    let num = d.poly.reverse_to(d.b1()).scale(&d.poly.leading().recip());
    ZetaFunction::new(
        RationalFunction::reduce(num, Poly::from_ints(&[1, -1])).expect("nonzero denominator"),
    )
}

/// `Λ(t^k) = 1 - p_k` for `k = 1..=n`, where `p_k` is the `k`-th power sum
/// of the roots of `Δ`, computed with Newton's identities.
pub fn knot_lefschetz_numbers(d: &AlexanderPoly, n: usize) -> Vec<Rational> {
    power_sums(d.poly(), n)
        .into_iter()
        .map(|p| Rational::one() - p)
        .collect()
}

/// Power sums `p_1..p_n` of the roots of `poly` (over the algebraic closure).
pub fn power_sums(poly: &Poly, n: usize) -> Vec<Rational> {
    let deg = poly.degree().unwrap_or(0);
    if deg == 0 {
        return vec![Rational::zero(); n];
    }
    // monic: z^deg + c_1 z^{deg-1} + ... + c_deg
    let lead = poly.leading();
    let c: Vec<Rational> = (0..=deg).map(|i| poly.coeff(deg - i) / &lead).collect();
    let mut p: Vec<Rational> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = if k <= deg { -(&c[k] * int(k as i64)) } else { Rational::zero() };
        for i in 1..k.min(deg + 1) {
            acc -= &c[i] * &p[k - i - 1];
        }
        p.push(acc);
    }
    p
}

/// Runs the boundary-form functional equation on `ζ_t` with `ζ_∂ = 1`,
/// `λ = 1` and `χ = 1 - b1`.
pub fn verify_knot_functional_equation(d: &AlexanderPoly) -> FunctionalEquationReport {
    verify_functional_equation(
        &zeta_from_alexander(d),
        &ZetaFunction::one(),
        &rational::int(1),
        d.euler_characteristic(),
    )
    .expect("λ = 1 and ζ_∂ = 1 are valid")
}
