//! Zeta function of a graded action, computed both as a rational function
//! and as an exponentiated series of Lefschetz numbers.
//!
//!     cargo run --example zeta_of_action

use lefschetz_zeta::algebra::rational::to_string;
use lefschetz_zeta::{GradedAction, Matrix};

fn main() -> lefschetz_zeta::Result<()> {
    // Hyperbolic toral automorphism: degree 1 acts by the cat map.
    let torus = GradedAction::new(vec![
        Matrix::from_ints(&[&[1]]),
        Matrix::from_ints(&[&[2, 1], &[1, 1]]),
        Matrix::from_ints(&[&[1]]),
    ]);
    let zeta = torus.zeta();
    println!("Betti numbers: {:?}, χ = {}", torus.betti_numbers(), torus.euler_characteristic());
    for f in zeta.factors().unwrap_or_default() {
        println!("  factor ({})^{}", f.poly, f.exponent);
    }
    println!("ζ(z) = {}", zeta.value());

    let from_series = torus.zeta_series(10);
    let from_rational = zeta.series(10)?;
    assert_eq!(from_series, from_rational);
    println!("series: [{}]", from_series.iter().map(to_string).collect::<Vec<_>>().join(", "));

    let lefschetz = zeta.lefschetz_numbers(8)?;
    println!("Λ(f^k), k = 1..8: [{}]", lefschetz.iter().map(to_string).collect::<Vec<_>>().join(", "));
    Ok(())
}
