//! Truncated formal power series over the rationals.

use num_traits::Zero;

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// First `n` coefficients of `num / den`; needs `den(0) != 0`.
pub fn divide(num: &[Rational], den: &[Rational], n: usize) -> Result<Vec<Rational>> {
    let d0 = match den.first() {
        Some(d) if !d.is_zero() => d.recip(),
        _ => return Err(Error::PoleAtOrigin),
    };
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=k.min(den.len().saturating_sub(1)) {
            acc -= &den[j] * &out[k - j];
        }
        out.push(acc * &d0);
    }
    Ok(out)
}

/// Coefficients of `exp(Σ_{k≥1} a_k z^k / k)` up to `z^{n-1}`, given
/// `a_1, a_2, ...`. Uses `m f_m = Σ_{k=1}^{m} a_k f_{m-k}`.
pub fn exp_of_weighted(a: &[Rational], n: usize) -> Vec<Rational> {
    let mut f: Vec<Rational> = Vec::with_capacity(n);
    if n == 0 {
        return f;
    }
    f.push(int(1));
    for m in 1..n {
        let mut acc = Rational::zero();
        for k in 1..=m {
            if let Some(ak) = a.get(k - 1) {
                acc += ak * &f[m - k];
            }
        }
        f.push(acc / int(m as i64));
    }
    f
}

/// Coefficients `c_1 .. c_n` of `z · f'(z) / f(z)` for a series with `f(0) != 0`.
pub fn log_derivative(f: &[Rational], n: usize) -> Result<Vec<Rational>> {
    // z f' has coefficients k f_k.
    let zf: Vec<Rational> = (0..=n)
        .map(|k| f.get(k).map_or_else(Rational::zero, |c| c * int(k as i64)))
        .collect();
    let q = divide(&zf, f, n + 1)?;
    Ok(q.into_iter().skip(1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_ones_is_geometric() {
        let a = vec![int(1); 6];
        assert_eq!(exp_of_weighted(&a, 6), vec![int(1); 6]);
        assert!(exp_of_weighted(&a, 0).is_empty());
    }

    #[test]
    fn log_derivative_inverts_exp() {
        let a = vec![int(0), int(2), int(3), int(2), int(0), int(-1)];
        let f = exp_of_weighted(&a, 8);
        assert_eq!(log_derivative(&f, 6).unwrap(), a);
    }

    #[test]
    fn division_needs_unit_constant() {
        assert_eq!(divide(&[int(1)], &[int(0), int(1)], 2), Err(Error::PoleAtOrigin));
        assert_eq!(divide(&[int(1)], &[], 2), Err(Error::PoleAtOrigin));
    }
}
