//! Exact Lefschetz zeta functions of graded actions on rational homology.
//!
//! The crate computes zeta functions both as exponentiated generating series
//! of Lefschetz numbers and as alternating products of characteristic
//! polynomials, checks the functional equation relating `ζ(1/λz)` to `ζ(z)`
//! for maps of degree `λ` on spaces with a duality pairing, and applies the
//! machinery to knots: the zeta function of the covering translation of the
//! infinite cyclic cover is read off the Alexander polynomial, which is
//! computed from a braid word through the reduced Burau representation.
//!
//! All arithmetic is over exact rationals; equality of rational functions is
//! structural equality of reduced forms.

pub mod algebra;
pub mod cli;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod knot;
pub mod zeta;

pub use algebra::{LaurentPoly, Matrix, Poly, PolyMatrix, Rational, RationalFunction};
pub use duality::{
    build_closed_duality_action, check_char_identity, check_det_product, pairing_adjoint, PairingTriple,
};
pub use error::{Error, Result};
pub use knot::{
    alexander_from_braid, burau_reduced, is_reciprocal, knot_lefschetz_numbers, parse_braid,
    verify_knot_functional_equation, zeta_from_alexander, AlexanderPoly, BraidWord,
};
pub use zeta::{
    verify_closed_functional_equation, verify_functional_equation, zeta_multiplicativity,
    FunctionalEquationReport, GradedAction, ZetaFactor, ZetaFunction,
};
