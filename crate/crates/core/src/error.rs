use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at origin")]
    PoleAtOrigin,

    #[error("not a normalized zeta: value at 0 is not 1")]
    NotNormalizedZeta,

    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("iterate exponent must be positive, got {0}")]
    NonPositiveIterate(i64),

    #[error("matrix is not square: {rows} rows, row of length {len}")]
    NotSquare { rows: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate pairing")]
    DegeneratePairing,

    #[error("λ ≠ 0 forces f invertible, but f is singular")]
    SingularMap,

    #[error("pairing condition fᵀPg = λP violated")]
    PairingViolated,

    #[error("not a λ-isometry: AᵀJA ≠ λJ")]
    NotIsometry,

    #[error("braid letter 0 at position {0}")]
    ZeroLetter(usize),

    #[error("braid letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },

    #[error("closure is a link, not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("not an Alexander polynomial: {0}")]
    InvalidAlexander(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("random fixture generation gave up after {0} singular draws")]
    FixtureExhausted(usize),
}
