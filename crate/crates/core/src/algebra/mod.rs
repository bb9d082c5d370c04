//! Exact scalars, polynomials, rational functions and matrices.

pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod polymatrix;
pub mod ratfunc;
pub mod rational;
pub mod series;

pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use poly::Poly;
pub use polymatrix::PolyMatrix;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
