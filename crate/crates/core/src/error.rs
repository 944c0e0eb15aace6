use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} values do not form a square")]
    NotSquareCount(usize),
    #[error("a square must have order at least 1")]
    EmptySquare,
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("matrix power must be at least 1")]
    ZeroPower,
    #[error("square is not doubly-affine")]
    NotDoublyAffine,
    #[error("linesum is zero")]
    ZeroLinesum,
    #[error("square has negative entries")]
    NegativeEntries,
    #[error("square is all zeros")]
    ZeroSquare,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("square does not have exactly one nonzero eigenvalue")]
    NotOneEv,
    #[error("Frenicle form is defined for order 4 only, got order {0}")]
    NotOrderFour(usize),
    #[error("Frenicle form is not unique for this square")]
    FrenicleTie,
    #[error("not a classic order-4 magic square")]
    NotClassicMagic4,
    #[error("Frenicle index {0} is outside 1..=880")]
    IndexOutOfRange(usize),
    #[error("unknown square `{0}`")]
    UnknownName(String),
    #[error("compound precondition failed: {0}")]
    CompoundPrecondition(String),
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
}
