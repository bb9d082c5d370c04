//! Reduced quotients of polynomials, the home of every zeta function.

use std::fmt;
use std::ops::{Div, Mul};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::Rational;
use super::series;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
///
/// Every constructor goes through [`RationalFunction::reduce`], so two values
/// are equal as functions exactly when they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

#[derive(Deserialize)]
struct RawRatFunc {
    num: Poly,
    den: Poly,
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRatFunc::deserialize(d)?;
        RationalFunction::reduce(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl RationalFunction {
    pub fn reduce(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?.expect("gcd divides numerator");
        let den = den.div_exact(&g)?.expect("gcd divides denominator");
        let lc = den.leading().recip();
        Ok(RationalFunction { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    /// `z^k` for any integer `k`.
    pub fn z_pow(k: i64) -> Self {
        let m = Poly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RationalFunction::from_poly(m)
        } else {
            RationalFunction { num: Poly::one(), den: m }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Value at `z = 0`, `None` at a pole.
    pub fn value_at_zero(&self) -> Option<Rational> {
        let d = self.den.constant_term();
        (!d.is_zero()).then(|| self.num.constant_term() / d)
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::reduce(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction::reduce(self.num.scale(c), self.den.clone()).expect("den nonzero")
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        // A power of a coprime pair stays coprime and keeps a monic denominator.
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// `self · z^k`.
    pub fn mul_z_pow(&self, k: i64) -> Self {
        self * &RationalFunction::z_pow(k)
    }

    /// `R(1/(λz))`, by reversing both coefficient sequences to a common degree
    /// and weighting by powers of `λ`.
    pub fn recip_substitute(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let num = self.num.reverse_to(d).rescale_var(lambda);
        let den = self.den.reverse_to(d).rescale_var(lambda);
        RationalFunction::reduce(num, den)
    }

    /// Taylor coefficients of `z^0 .. z^{n-1}` at the origin.
    pub fn series_expand(&self, n: usize) -> Result<Vec<Rational>> {
        series::divide(self.num.coeffs(), self.den.coeffs(), n)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::reduce(num, &self.den * &self.den).expect("den nonzero")
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on a zero divisor; use [`RationalFunction::checked_div`] otherwise.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduce(num, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}
