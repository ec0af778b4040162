use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate lattice")]
    DegenerateLattice,
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("lattice is not even: diagonal entry {0} is odd")]
    NotEven(usize),
    #[error("gram matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("vector not primitive")]
    NotPrimitive,
    #[error("enumeration requires definite lattice")]
    NotDefinite,
    #[error("norm must be a negative even integer, got {0}")]
    BadNorm(i64),
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("glue is not integral")]
    GlueNotIntegral,
    #[error("glue is not even")]
    GlueNotEven,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("unknown lattice name: {0}")]
    UnknownLattice(String),
    #[error("invalid signature pair ({0},{1})")]
    InvalidSignature(usize, usize),
    #[error("N out of range: {0}")]
    OutOfRange(i64),
    #[error("Bruinier formula inconsistency: {0}")]
    Bruinier(String),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("space mismatch: expected {expected}, got {got}")]
    SpaceMismatch { expected: String, got: String },
    #[error("map {map} is not defined for N={n}")]
    InvalidMap { map: String, n: i64 },
    #[error("pullback coefficient of {basis} under {map} is not determined")]
    Undetermined { map: String, basis: String },
    #[error("class has a nonzero {0} coefficient with no image")]
    NoImage(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("stratum not in tower")]
    NotInTower,
}

pub type Result<T> = std::result::Result<T, Error>;
