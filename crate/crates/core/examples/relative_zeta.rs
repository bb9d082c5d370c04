//! The total zeta function of a pair factors as relative times restricted.
//!
//!     cargo run --example relative_zeta

use lefschetz_zeta::{zeta_multiplicativity, GradedAction, Matrix};

fn main() -> lefschetz_zeta::Result<()> {
    // Action on the subspace A and on the pair (M, A).
    let on_subspace = GradedAction::new(vec![Matrix::from_ints(&[&[1]]), Matrix::from_ints(&[&[2]])]);
    let relative = GradedAction::new(vec![
        Matrix::zeros(0),
        Matrix::from_ints(&[&[0, -1], &[1, 1]]),
        Matrix::from_ints(&[&[1]]),
    ]);
    let total = on_subspace.block_sum(&relative);

    let recovered = zeta_multiplicativity(&total.zeta(), &on_subspace.zeta())?;
    println!("ζ_f      = {}", total.zeta().value());
    println!("ζ_(f|A)  = {}", on_subspace.zeta().value());
    println!("ζ_f^rel  = {}", recovered.value());
    assert_eq!(recovered.value(), relative.zeta().value());
    Ok(())
}
