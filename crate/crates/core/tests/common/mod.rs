//! Independent oracles shared by the integration tests. None of these go
//! through the library routine they are used to check.

#![allow(dead_code)]

pub mod fox;

use lefschetz_zeta::algebra::rational::int;
use lefschetz_zeta::{LaurentPoly, Matrix, Poly, PolyMatrix, Rational};
use num_traits::Zero;

/// The knot corpus: name, braid word.
pub const CORPUS: &[(&str, &str)] = &[
    ("unknot", "1"),
    ("trefoil", "1 1 1"),
    ("figure-eight", "1 -2 1 -2"),
    ("5_1", "1 1 1 1 1"),
    ("5_2", "1 1 1 2 -1 2"),
    ("6_1", "1 1 2 -1 -3 2 -3"),
];

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Full Laplace expansion along the first row, no shortcuts.
pub fn laplace_det(m: &PolyMatrix) -> Poly {
    let n = m.size();
    let rows: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    laplace(&rows)
}

fn laplace<T>(rows: &[Vec<T>]) -> T
where
    T: Clone + LaplaceRing,
{
    let n = rows.len();
    if n == 0 {
        return T::one_();
    }
    let mut acc = T::zero_();
    for c in 0..n {
        let minor: Vec<Vec<T>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = rows[0][c].mul_(&laplace(&minor));
        acc = if c % 2 == 0 { acc.add_(&term) } else { acc.sub_(&term) };
    }
    acc
}

pub trait LaplaceRing {
    fn zero_() -> Self;
    fn one_() -> Self;
    fn add_(&self, o: &Self) -> Self;
    fn sub_(&self, o: &Self) -> Self;
    fn mul_(&self, o: &Self) -> Self;
}

impl LaplaceRing for Poly {
    fn zero_() -> Self {
        Poly::zero()
    }
    fn one_() -> Self {
        Poly::one()
    }
    fn add_(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_(&self, o: &Self) -> Self {
        self * o
    }
}

impl LaplaceRing for LaurentPoly {
    fn zero_() -> Self {
        LaurentPoly::zero()
    }
    fn one_() -> Self {
        LaurentPoly::one()
    }
    fn add_(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_(&self, o: &Self) -> Self {
        self * o
    }
}

pub fn laurent_laplace_det(rows: &[Vec<LaurentPoly>]) -> LaurentPoly {
    laplace(rows)
}

/// Truncated power series product.
fn series_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `exp(g)` for `g(0) = 0` by the plain Taylor sum `Σ g^m / m!`.
pub fn naive_exp(g: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    let mut term = vec![Rational::zero(); n];
    if n == 0 {
        return out;
    }
    term[0] = int(1);
    for m in 0..n {
        for k in 0..n {
            out[k] += &term[k];
        }
        term = series_mul(&term, g, n).into_iter().map(|c| c / int(m as i64 + 1)).collect();
    }
    out
}

/// Series of the zeta function straight from the definition: traces of
/// matrix powers, the weighted log series, then `naive_exp`.
pub fn zeta_series_by_definition(maps: &[Matrix], n: usize) -> Vec<Rational> {
    let mut g = vec![Rational::zero(); n];
    for (k, gk) in g.iter_mut().enumerate().skip(1) {
        let mut lambda = Rational::zero();
        for (i, a) in maps.iter().enumerate() {
            let mut p = Matrix::identity(a.size());
            for _ in 0..k {
                p = &p * a;
            }
            let tr = p.trace();
            if i % 2 == 0 {
                lambda += tr;
            } else {
                lambda -= tr;
            }
        }
        *gk = lambda / int(k as i64);
    }
    naive_exp(&g, n)
}

/// Power-series long division written out longhand.
pub fn long_division(num: &Poly, den: &Poly, n: usize) -> Vec<Rational> {
    let mut rem: Vec<Rational> = (0..n).map(|i| num.coeff(i)).collect();
    let d0 = den.coeff(0);
    let mut q = Vec::with_capacity(n);
    for k in 0..n {
        let c = &rem[k] / &d0;
        for (j, dj) in den.coeffs().iter().enumerate() {
            if k + j < n {
                rem[k + j] -= &c * dj;
            }
        }
        q.push(c);
    }
    q
}
