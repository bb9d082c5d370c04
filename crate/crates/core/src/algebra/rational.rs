//! The scalar field. Exact rationals backed by `num-rational`, with the
//! `"p/q"` string form used by every JSON surface.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn pow(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), e.unsigned_abs() as usize)
    }
}

/// Exact square root when `r` is the square of a rational.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

pub fn sign(n: i64) -> Rational {
    if n.is_even() {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Serde adapter for a single rational as a string.
pub mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let v = StrOrInt::deserialize(d)?;
        v.into_rational().map_err(serde::de::Error::custom)
    }
}

/// Accepts `"p/q"` strings and, for convenience, bare JSON integers.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum StrOrInt {
    Str(String),
    Int(i64),
}

impl StrOrInt {
    pub(crate) fn into_rational(self) -> Result<Rational> {
        match self {
            StrOrInt::Str(s) => parse(&s),
            StrOrInt::Int(n) => Ok(int(n)),
        }
    }
}

/// Newtype used where a rational sits inside a serialized container.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalStr(pub Rational);

impl Serialize for RationalStr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_str::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RationalStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        serde_str::deserialize(d).map(RationalStr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form() {
        assert_eq!(to_string(&frac(6, -4)), "-3/2");
        assert_eq!(to_string(&int(7)), "7");
        assert_eq!(to_string(&Rational::zero()), "0");
        assert_eq!(parse(" -3/2 ").unwrap(), frac(-3, 2));
        assert_eq!(parse("4/2").unwrap(), int(2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn canonical_denominator() {
        let r = frac(3, -9);
        assert_eq!(*r.denom(), BigInt::from(3));
        assert_eq!(*r.numer(), BigInt::from(-1));
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(sqrt_exact(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow(&int(2), -3), frac(1, 8));
        assert_eq!(pow(&frac(-2, 3), 2), frac(4, 9));
    }
}
