//! Square matrices over the rationals.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::polymatrix::PolyMatrix;
use super::rational::{self, int, Rational, RationalStr};
use crate::error::{Error, Result};

/// Row-major square matrix. Size 0 is allowed and acts on the zero space.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, len: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { n, data })
    }

    /// Panics unless `rows` is square; meant for literals in tests and examples.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("square integer matrix")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn scalar(c: Rational) -> Self {
        Matrix { n: 1, data: vec![c] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        // chunks(0) panics, so special-case the empty matrix
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: rhs.n });
        }
        Ok(Matrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        }))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = a[c * n + c].clone();
            det *= &pivot;
            for r in c + 1..n {
                let f = &a[r * n + c] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = &f * &a[c * n + j];
                    a[r * n + j] -= v;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pinv = a.get(c, c).recip();
            a.scale_row(c, &pinv);
            inv.scale_row(c, &pinv);
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                a.add_row_multiple(r, c, &-f.clone());
                inv.add_row_multiple(r, c, &-f);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.data.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &Rational) {
        for j in 0..self.n {
            self.data[r * self.n + j] *= c;
        }
    }

    /// row[dst] += c · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Rational) {
        for j in 0..self.n {
            let v = c * &self.data[src * self.n + j];
            self.data[dst * self.n + j] += v;
        }
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        Matrix::from_fn(n + other.n, |i, j| match (i < n, j < n) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - n, j - n).clone(),
            _ => Rational::zero(),
        })
    }

    /// The polynomial matrix `I - z·self`.
    pub fn one_minus_z_times(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, |i, j| {
            let c0 = if i == j { Rational::one() } else { Rational::zero() };
            Poly::new(vec![c0, -self.get(i, j).clone()])
        })
    }

    /// `det(I - z·self)`, the reversed characteristic polynomial.
    pub fn det_one_minus_z(&self) -> Poly {
        self.one_minus_z_times().det()
    }

    pub fn is_zero_size(&self) -> bool {
        self.n == 0
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix sizes agree")
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows().map(|r| r.iter().map(rational::to_string).collect::<Vec<_>>()))
            .finish()
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(
            self.rows()
                .map(|r| r.iter().map(rational::to_string).collect::<Vec<_>>()),
        )
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<RationalStr>>::deserialize(d)?;
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;

    #[test]
    fn determinant_and_inverse() {
        let a = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det(), int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(inv, Matrix::from_ints(&[&[1, -1], &[-1, 2]]));
        assert_eq!(&a * &inv, Matrix::identity(2));
        let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(), int(0));
        assert!(s.inverse().is_none());
        let h = Matrix::from_rows(vec![vec![int(0), frac(1, 2)], vec![int(3), int(0)]]).unwrap();
        assert_eq!(h.det(), frac(-3, 2));
    }

    #[test]
    fn empty_matrix_conventions() {
        let e = Matrix::zeros(0);
        assert_eq!(e.det(), int(1));
        assert_eq!(e.trace(), int(0));
        assert!(e.det_one_minus_z().is_one());
        assert_eq!(e.inverse(), Some(e.clone()));
        assert_eq!(serde_json::to_string(&e).unwrap(), "[]");
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(1)]]).is_err());
        assert!(serde_json::from_str::<Matrix>(r#"[["1","2"]]"#).is_err());
    }

    #[test]
    fn powers() {
        let a = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(5), Matrix::from_ints(&[&[1, 5], &[0, 1]]));
        assert_eq!(a.pow(0), Matrix::identity(2));
    }

    #[test]
    fn reversed_characteristic_polynomial() {
        let a = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det_one_minus_z(), Poly::from_ints(&[1, -3, 1]));
    }
}
