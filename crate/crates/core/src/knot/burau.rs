//! Reduced Burau representation over `Q[t, t⁻¹]`.
//!
//! Convention: `σ_i` is the identity except row `i` (1-based), which reads
//! `t` in column `i-1`, `-t` in column `i` and `1` in column `i+1`, with the
//! out-of-range entries dropped. On two strands `σ_1 ↦ [-t]`. The inverse
//! letter has row `i` equal to `1, -t⁻¹, t⁻¹` in the same columns.

use num_traits::One;

use super::braid::BraidWord;
use crate::algebra::rational::int;
use crate::algebra::{LaurentPoly, Poly, PolyMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = LaurentPoly::one();
        }
        LaurentMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> LaurentMatrix {
        let n = self.n;
        let mut out = LaurentMatrix { n, data: vec![LaurentPoly::zero(); n * n] };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] = &out.data[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `I - self`.
    pub fn one_minus(&self) -> LaurentMatrix {
        let mut out = self.clone();
        for (idx, e) in out.data.iter_mut().enumerate() {
            let neg = -&*e;
            *e = if idx % (self.n + 1) == 0 { &LaurentPoly::one() + &neg } else { neg };
        }
        out
    }

    /// Exact determinant as a Laurent polynomial: every entry is shifted into
    /// `Q[t]` by a common power of `t`, and that power is divided back out.
    pub fn det(&self) -> LaurentPoly {
        let shift = self
            .data
            .iter()
            .filter(|e| !e.is_zero())
            .map(|e| -e.low())
            .max()
            .unwrap_or(0)
            .max(0);
        let pm = PolyMatrix::from_fn(self.n, |i, j| {
            self.get(i, j).shift(shift).to_poly().expect("shift clears negative powers")
        });
        LaurentPoly::new(-shift * self.n as i64, pm.det())
    }
}

fn t_pow(c: i64, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(int(c), k)
}

/// Reduced Burau matrix of one letter on `strands` strands.
pub fn generator(letter: i64, strands: usize) -> LaurentMatrix {
    let size = strands - 1;
    let i = letter.unsigned_abs() as usize - 1; // 0-based row
    let mut m = LaurentMatrix::identity(size);
    let (left, mid, right) = if letter > 0 {
        (t_pow(1, 1), t_pow(-1, 1), LaurentPoly::one())
    } else {
        (LaurentPoly::one(), t_pow(-1, -1), t_pow(1, -1))
    };
    if i >= 1 {
        m.set(i, i - 1, left);
    }
    m.set(i, i, mid);
    if i + 1 < size {
        m.set(i, i + 1, right);
    }
    m
}

/// Product of the generator matrices along the word, left to right.
pub fn burau_reduced(b: &BraidWord) -> LaurentMatrix {
    let n = b.strands();
    b.letters()
        .iter()
        .fold(LaurentMatrix::identity(n - 1), |acc, &l| acc.mul(&generator(l, n)))
}

/// `1 + t + ... + t^{n-1}`.
pub(crate) fn strand_sum(n: usize) -> Poly {
    Poly::new(vec![Rational::one(); n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::braid::parse_braid;

    #[test]
    fn base_cases() {
        let empty = parse_braid("4:").unwrap();
        assert_eq!(burau_reduced(&empty), LaurentMatrix::identity(3));
        let s = burau_reduced(&parse_braid("1").unwrap());
        assert_eq!(s.size(), 1);
        assert_eq!(s.get(0, 0), &t_pow(-1, 1));
        let t = burau_reduced(&parse_braid("1 1 1").unwrap());
        assert_eq!(t.get(0, 0), &t_pow(-1, 3));
    }

    #[test]
    fn inverse_letters_cancel() {
        for n in 2..6 {
            for i in 1..n as i64 {
                let p = generator(i, n).mul(&generator(-i, n));
                assert_eq!(p, LaurentMatrix::identity(n - 1), "σ_{i} on {n} strands");
                let p = generator(-i, n).mul(&generator(i, n));
                assert_eq!(p, LaurentMatrix::identity(n - 1));
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 3..6 {
            for i in 1..(n as i64 - 1) {
                let (a, b) = (generator(i, n), generator(i + 1, n));
                assert_eq!(a.mul(&b).mul(&a), b.mul(&a).mul(&b));
            }
            for i in 1..n as i64 {
                for j in (i + 2)..n as i64 {
                    let (a, b) = (generator(i, n), generator(j, n));
                    assert_eq!(a.mul(&b), b.mul(&a));
                }
            }
        }
    }

    #[test]
    fn laurent_determinant() {
        let m = generator(-1, 3);
        // det of σ_1^{-1} is -t^{-1}
        assert_eq!(m.det(), t_pow(-1, -1));
        assert_eq!(LaurentMatrix::identity(0).det(), LaurentPoly::one());
    }
}
