//! Completing an endomorphism to a pair that scales a bilinear pairing, then
//! checking the two determinant identities such pairs satisfy.
//!
//!     cargo run --example pairing_duality

use lefschetz_zeta::algebra::rational::int;
use lefschetz_zeta::duality::{char_identity_sides, check_char_identity, check_det_product};
use lefschetz_zeta::fixtures::random_pairing_triple;
use lefschetz_zeta::{Matrix, PairingTriple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> lefschetz_zeta::Result<()> {
    let f = Matrix::from_ints(&[&[1, 2, 0], &[0, 1, -1], &[1, 0, 3]]);
    let p = Matrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 2]]);
    let t = PairingTriple::complete(f, p, int(-3))?;
    println!("g = {:?}", t.g());
    println!("det f · det g = λ^n: {}", check_det_product(&t));
    let (lhs, rhs) = char_identity_sides(&t);
    println!("det(I - g t) det f     = {lhs}");
    println!("(-λ)^n det(t I - f/λ)  = {rhs}");

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ok = (0..50)
        .map(|_| random_pairing_triple(&mut rng, 6, 4, &[int(1), int(2), int(-3)]))
        .collect::<lefschetz_zeta::Result<Vec<_>>>()?
        .iter()
        .all(|t| check_det_product(t) && check_char_identity(t));
    println!("50 random triples pass both identities: {ok}");
    Ok(())
}
