//! Laurent polynomials `t^low · p(t)` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{forward_owned, Poly};
use super::rational::Rational;

/// Stored as `t^low · body` where `body` has a nonzero constant term, so both
/// the first and last coefficients are nonzero. Zero is `low = 0`, empty body.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "LaurentRepr", into = "LaurentRepr")]
pub struct LaurentPoly {
    low: i64,
    body: Poly,
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    low: i64,
    coefficients: Poly,
}

impl From<LaurentRepr> for LaurentPoly {
    fn from(r: LaurentRepr) -> Self {
        LaurentPoly::new(r.low, r.coefficients)
    }
}

impl From<LaurentPoly> for LaurentRepr {
    fn from(l: LaurentPoly) -> Self {
        LaurentRepr { low: l.low, coefficients: l.body }
    }
}

impl LaurentPoly {
    pub fn new(low: i64, body: Poly) -> Self {
        let (body, v) = body.strip_z();
        if body.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: low + v as i64, body }
    }

    pub fn zero() -> Self {
        LaurentPoly { low: 0, body: Poly::zero() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::new(0, Poly::constant(c))
    }

    /// `c·t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        LaurentPoly::new(k, Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        LaurentPoly::new(0, p)
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero element).
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.body.degree().map_or(0, |d| d as i64)
    }

    /// Coefficients from `t^low` upward.
    pub fn coeffs(&self) -> &[Rational] {
        self.body.coeffs()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        if k < self.low {
            Rational::zero()
        } else {
            self.body.coeff((k - self.low) as usize)
        }
    }

    /// The polynomial part after factoring out `t^low`.
    pub fn body(&self) -> &Poly {
        &self.body
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low + k, body: self.body.clone() }
    }

    /// `Some(p)` when no negative powers occur.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        (self.low >= 0).then(|| self.body.shift(self.low as usize))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let base = self.body.eval(x);
        if self.is_zero() {
            return base;
        }
        base * super::rational::pow(x, self.low)
    }

    /// `l(1/t)`.
    pub fn invert_var(&self) -> Self {
        match self.body.degree() {
            None => LaurentPoly::zero(),
            Some(d) => LaurentPoly::new(-self.high(), self.body.reverse_to(d)),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly(t^{} · ({}))", self.low, self.body)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.low == 0 {
            write!(f, "{}", self.body)
        } else {
            write!(f, "t^{}·({})", self.low, self.body)
        }
    }
}

fn align(a: &LaurentPoly, b: &LaurentPoly) -> (i64, Poly, Poly) {
    let low = a.low.min(b.low);
    (
        low,
        a.body.shift((a.low - low) as usize),
        b.body.shift((b.low - low) as usize),
    )
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (low, a, b) = align(self, rhs);
        LaurentPoly::new(low, a + b)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.low + rhs.low, &self.body * &rhs.body)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, body: -&self.body }
    }
}

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);
