//! Seeded random fixtures for property checks and the example programs.
//! Singular draws are rejected and redrawn, at most [`MAX_ATTEMPTS`] times.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::rational::int;
use crate::algebra::{Matrix, Rational};
use crate::duality::{self, PairingTriple};
use crate::error::{Error, Result};
use crate::zeta::GradedAction;

pub const MAX_ATTEMPTS: usize = 1000;

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    Matrix::from_fn(n, |_, _| int(rng.gen_range(-bound..=bound)))
}

pub fn random_nonsingular<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Result<Matrix> {
    for _ in 0..MAX_ATTEMPTS {
        let m = random_matrix(rng, n, bound);
        if !m.det().is_zero() {
            return Ok(m);
        }
    }
    Err(Error::FixtureExhausted(MAX_ATTEMPTS))
}

/// Top degree in `0..=max_dim`, each `b_i` in `0..=max_betti`, integer
/// entries in `[-bound, bound]`.
pub fn random_action<R: Rng>(rng: &mut R, max_dim: usize, max_betti: usize, bound: i64) -> GradedAction {
    let dim = rng.gen_range(0..=max_dim);
    GradedAction::new(
        (0..=dim)
            .map(|_| {
                let b = rng.gen_range(0..=max_betti);
                random_matrix(rng, b, bound)
            })
            .collect(),
    )
}

/// A triple completed by [`duality::pairing_adjoint`] from random `f`, `P`
/// (both nonsingular, dimension `1..=max_n`) and `λ` drawn from `lambdas`.
pub fn random_pairing_triple<R: Rng>(
    rng: &mut R,
    max_n: usize,
    bound: i64,
    lambdas: &[Rational],
) -> Result<PairingTriple> {
    let n = rng.gen_range(1..=max_n);
    let f = random_nonsingular(rng, n, bound)?;
    let p = random_nonsingular(rng, n, bound)?;
    let lambda = lambdas[rng.gen_range(0..lambdas.len())].clone();
    PairingTriple::complete(f, p, lambda)
}

/// A random `2×2` integer matrix with nonzero determinant, together with that
/// determinant: every such matrix scales the symplectic form by its determinant.
pub fn random_planar_similitude<R: Rng>(rng: &mut R, bound: i64) -> Result<(Matrix, Rational)> {
    let a = random_nonsingular(rng, 2, bound)?;
    let d = a.det();
    Ok((a, d))
}

/// A `2m × 2m` matrix scaling the symplectic form by `λ`, assembled from
/// block generators `[[I, S], [0, I]]`, `[[I, 0], [S, I]]` (`S` symmetric),
/// `diag(B, B^{-T})` and `diag(I, λ I)`.
pub fn random_symplectic_similitude<R: Rng>(rng: &mut R, m: usize, lambda: &Rational, steps: usize) -> Result<Matrix> {
    let n = 2 * m;
    let j = duality::symplectic_form(m);
    let mut acc = Matrix::from_fn(n, |i, k| {
        if i == k {
            if i >= m { lambda.clone() } else { int(1) }
        } else {
            Rational::zero()
        }
    });
    for _ in 0..steps {
        let g = match rng.gen_range(0..3) {
            0 | 1 => {
                let s = random_symmetric(rng, m, 2);
                let upper = rng.gen_bool(0.5);
                Matrix::from_fn(n, |i, k| {
                    if i == k {
                        int(1)
                    } else if upper && i < m && k >= m {
                        s.get(i, k - m).clone()
                    } else if !upper && i >= m && k < m {
                        s.get(i - m, k).clone()
                    } else {
                        Rational::zero()
                    }
                })
            }
            _ => {
                let b = random_nonsingular(rng, m, 2)?;
                let bt_inv = b.transpose().inverse().expect("nonsingular");
                b.block_diag(&bt_inv)
            }
        };
        debug_assert_eq!(&(&g.transpose() * &j) * &g, j);
        acc = &g * &acc;
    }
    Ok(acc)
}

fn random_symmetric<R: Rng>(rng: &mut R, m: usize, bound: i64) -> Matrix {
    let mut s = Matrix::zeros(m);
    for i in 0..m {
        for k in i..m {
            let v = int(rng.gen_range(-bound..=bound));
            s.set(i, k, v.clone());
            s.set(k, i, v);
        }
    }
    s
}
