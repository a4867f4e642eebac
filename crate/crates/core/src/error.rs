use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("pole at t = 0 (valuation {order})")]
    PoleAtZero { order: i32 },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("form is not a cocycle: {0}")]
    NotACocycle(String),

    #[error("matrix is not an automorphism")]
    NotAnAutomorphism,

    #[error("parametric basis is singular over Q(t)")]
    SingularBasis,

    #[error("pole at t = 0 in constant c^{k}_{{{i}{j}}} (valuation {order})")]
    PoleInLimit { i: usize, j: usize, k: usize, order: i32 },

    #[error("claim {source_id} -> {target_id} is not verified")]
    UnverifiedClaim { source_id: String, target_id: String },

    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error("syntax error at line {line}, column {col}: {msg}")]
    SyntaxError { line: usize, col: usize, msg: String },

    #[error("product e{i}e{j} conflicts with skew-symmetry")]
    SkewConflict { i: usize, j: usize },

    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("diagonal form d{0}{0} is not skew")]
    DiagonalDelta(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
