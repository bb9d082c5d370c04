//! Lefschetz numbers of the iterated covering translation of a knot's
//! infinite cyclic cover, from Newton's identities and from the zeta function.
//!
//!     cargo run --example knot_lefschetz [-- "<braid word>" N]

use lefschetz_zeta::algebra::rational::to_string;
use lefschetz_zeta::{alexander_from_braid, knot_lefschetz_numbers, parse_braid, zeta_from_alexander};

fn main() -> lefschetz_zeta::Result<()> {
    let mut args = std::env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "1 1 1".to_string());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);

    let d = alexander_from_braid(&parse_braid(&word)?)?;
    let zeta = zeta_from_alexander(&d);
    println!("Δ(z) = {}", d.poly());
    println!("ζ(z) = {}", zeta.value());

    let newton = knot_lefschetz_numbers(&d, n);
    let logder = zeta.lefschetz_numbers(n)?;
    assert_eq!(newton, logder);
    for (k, v) in newton.iter().enumerate() {
        println!("Λ(t^{:<2}) = {}", k + 1, to_string(v));
    }
    Ok(())
}
