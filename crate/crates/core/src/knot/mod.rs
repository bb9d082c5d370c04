//! Braid words, the reduced Burau representation and Alexander polynomials.

pub mod alexander;
pub mod braid;
pub mod burau;

pub use alexander::{
    alexander_from_braid, is_reciprocal, knot_lefschetz_numbers, verify_knot_functional_equation,
    zeta_from_alexander, AlexanderPoly,
};
pub use braid::{parse_braid, BraidWord};
pub use burau::burau_reduced;
