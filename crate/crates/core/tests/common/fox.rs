//! Alexander polynomials of braid closures by Fox calculus on the
//! presentation `⟨x_1..x_n | β(x_j) x_j⁻¹⟩` given by the Artin action.

use lefschetz_zeta::algebra::rational::int;
use lefschetz_zeta::{LaurentPoly, Poly};
use num_traits::Signed;

type Word = Vec<(usize, i8)>;

fn reduce(w: Word) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for l in w {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

fn inverse(w: &Word) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Image of generator `g` under the Artin automorphism of one braid letter.
fn artin_image(letter: i64, g: usize) -> Word {
    let i = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        if g == i {
            vec![(i, 1), (i + 1, 1), (i, -1)]
        } else if g == i + 1 {
            vec![(i, 1)]
        } else {
            vec![(g, 1)]
        }
    } else if g == i {
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        vec![(i + 1, 1)]
    } else if g == i + 1 {
        vec![(i + 1, -1), (i, 1), (i + 1, 1)]
    } else {
        vec![(g, 1)]
    }
}

fn substitute(letter: i64, w: &Word) -> Word {
    let mut out = Word::new();
    for &(g, e) in w {
        let img = artin_image(letter, g);
        if e > 0 {
            out.extend(img);
        } else {
            out.extend(inverse(&img));
        }
    }
    reduce(out)
}

/// Fox derivative `∂w/∂x_k` pushed to `Q[t^±]` by `x_j ↦ t`.
fn fox_derivative(w: &Word, k: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut prefix = 0i64;
    for &(g, e) in w {
        if g == k {
            acc = if e > 0 {
                &acc + &LaurentPoly::monomial(int(1), prefix)
            } else {
                &acc - &LaurentPoly::monomial(int(1), prefix - 1)
            };
        }
        prefix += e as i64;
    }
    acc
}

/// Normalized Alexander polynomial (constant term positive, no `t` factor).
pub fn alexander(strands: usize, letters: &[i64]) -> Poly {
    let n = strands;
    if n == 1 {
        return Poly::one();
    }
    let relations: Vec<Word> = (0..n)
        .map(|j| {
            let mut w: Word = vec![(j, 1)];
            for &l in letters.iter().rev() {
                w = substitute(l, &w);
            }
            w.push((j, -1));
            reduce(w)
        })
        .collect();
    let rows: Vec<Vec<LaurentPoly>> = relations[..n - 1]
        .iter()
        .map(|r| (0..n - 1).map(|k| fox_derivative(r, k)).collect())
        .collect();
    let det = super::laurent_laplace_det(&rows);
    let body = det.body().clone();
    if body.constant_term().is_negative() {
        -body
    } else {
        body
    }
}
