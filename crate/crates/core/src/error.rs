use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix has {actual} columns, expected {expected}")]
    ColumnMismatch { expected: usize, actual: usize },

    #[error("matrix must be nonempty")]
    EmptyMatrix,

    #[error("index {0} is out of range, expected 1, 2 or 3")]
    InvalidIndex(usize),

    #[error("element {element} is not in a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("subset is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("point is not a fixed point of γ₁γ₂γ₃")]
    NotAFixedPoint,

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("not a Burniat configuration: {0} triple points")]
    NotBurniat(usize),

    #[error("need at least two triple points, found {0}")]
    TooFewTriplePoints(usize),

    #[error("not a (1,1,1) point: {0}")]
    NotOneOneOne(String),

    #[error("expected K² = {expected}, arrangement has K² = {actual}")]
    ClassMismatch { expected: i64, actual: i64 },

    #[error("K² must lie in 2..=6, got {0}")]
    InvalidKSquared(i64),

    #[error("zero line or point: all coordinates vanish")]
    ZeroVector,

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("{0}")]
    NotRepresentable(String),
}
