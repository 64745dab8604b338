use thiserror::Error;

/// Errors produced by geometric constructors and solvers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("spatial dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("coordinates must be finite")]
    NonFinite,

    #[error("shell radius must be nonnegative, got {0}")]
    NegativeDelta(f64),

    #[error("points coincide")]
    CoincidentPoints,

    #[error("bodies {i} and {j} overlap (penetration {penetration:.3e})")]
    Overlap { i: usize, j: usize, penetration: f64 },

    #[error("ball {index} crosses the wall (penetration {penetration:.3e})")]
    WallCrossing { index: usize, penetration: f64 },

    #[error("centers are collinear; use the degenerate path")]
    CollinearCenters,

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
