//! Alexander polynomials of braid closures via the reduced Burau
//! representation, with the reciprocity and functional-equation checks.
//!
//!     cargo run --example alexander_from_braid [-- "<braid word>"]

use lefschetz_zeta::{alexander_from_braid, is_reciprocal, parse_braid, verify_knot_functional_equation};

const KNOTS: &[(&str, &str)] = &[
    ("unknot", "1"),
    ("3_1", "1 1 1"),
    ("4_1", "1 -2 1 -2"),
    ("5_1", "1 1 1 1 1"),
    ("5_2", "1 1 1 2 -1 2"),
    ("6_1", "1 1 2 -1 -3 2 -3"),
];

fn main() -> lefschetz_zeta::Result<()> {
    let user: Vec<String> = std::env::args().skip(1).collect();
    let words: Vec<(String, String)> = if user.is_empty() {
        KNOTS.iter().map(|(n, w)| (n.to_string(), w.to_string())).collect()
    } else {
        user.into_iter().map(|w| (w.clone(), w)).collect()
    };
    for (name, word) in words {
        let braid = parse_braid(&word)?;
        let d = alexander_from_braid(&braid)?;
        let fe = verify_knot_functional_equation(&d);
        println!(
            "{name:8} {:24} Δ = {:20} b1={} reciprocal={} functional equation={}",
            braid.to_string(),
            d.poly().to_string(),
            d.b1(),
            is_reciprocal(&d),
            fe.holds
        );
    }
    Ok(())
}
