//! Square matrices with polynomial entries and their exact determinants.

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Matrices up to this size use cofactor expansion; larger ones use
/// fraction-free elimination.
const COFACTOR_MAX: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Poly>>", into = "Vec<Vec<Poly>>")]
pub struct PolyMatrix {
    n: usize,
    data: Vec<Poly>,
}

impl TryFrom<Vec<Vec<Poly>>> for PolyMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Poly>>) -> Result<Self> {
        PolyMatrix::from_rows(rows)
    }
}

impl From<PolyMatrix> for Vec<Vec<Poly>> {
    fn from(m: PolyMatrix) -> Self {
        (0..m.n).map(|i| m.data[i * m.n..(i + 1) * m.n].to_vec()).collect()
    }
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, len: row.len() });
            }
            data.extend(row);
        }
        Ok(PolyMatrix { n, data })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        PolyMatrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: rhs.n });
        }
        Ok(PolyMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(Poly::zero(), |acc, k| acc + self.get(i, k) * rhs.get(k, j))
        }))
    }

    /// Exact determinant; the empty matrix has determinant 1.
    pub fn det(&self) -> Poly {
        if self.n <= COFACTOR_MAX {
            cofactor_det(&self.data, self.n)
        } else {
            self.bareiss_det()
        }
    }

    /// Fraction-free Gaussian elimination: each step divides exactly by the
    /// previous pivot, so entries stay polynomials of bounded degree.
    pub fn bareiss_det(&self) -> Poly {
        let n = self.n;
        if n == 0 {
            return Poly::one();
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return Poly::zero();
                };
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&pivot * &a[i * n + j]) - &(&a[i * n + k] * &a[k * n + j]);
                    a[i * n + j] = t
                        .div_exact(&prev)
                        .expect("pivot is nonzero")
                        .expect("Bareiss step divides exactly");
                }
                a[i * n + k] = Poly::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

/// Laplace expansion along the first row.
fn cofactor_det(data: &[Poly], n: usize) -> Poly {
    match n {
        0 => Poly::one(),
        1 => data[0].clone(),
        2 => &(&data[0] * &data[3]) - &(&data[1] * &data[2]),
        _ => {
            let mut acc = Poly::zero();
            for c in 0..n {
                if data[c].is_zero() {
                    continue;
                }
                let minor: Vec<Poly> = (1..n)
                    .flat_map(|i| (0..n).filter(move |&j| j != c).map(move |j| (i, j)))
                    .map(|(i, j)| data[i * n + j].clone())
                    .collect();
                let term = &data[c] * &cofactor_det(&minor, n - 1);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}
