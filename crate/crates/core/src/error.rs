//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {details}")]
    DimensionMismatch { op: &'static str, details: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite value at ({row}, {col}) in {op}")]
    NonFinite {
        op: &'static str,
        row: usize,
        col: usize,
    },

    #[error("matrix is not lower triangular: nonzero entry at ({row}, {col})")]
    NotLowerTriangular { row: usize, col: usize },

    #[error("diagonal entry {value:e} at row {row} is below the positivity threshold {min:e}")]
    DiagonalTooSmall { row: usize, value: f64, min: f64 },

    #[error("gamma must lie in [0, 1), got {0}")]
    GammaOutOfRange(f64),

    #[error("top-k pruning requires k >= 1")]
    ZeroK,

    #[error("block size must satisfy 1 <= m <= n, got m = {m}, n = {n}")]
    InvalidBlockSize { m: usize, n: usize },

    #[error("{op} requires a StrictCausal attention matrix")]
    StrictCausalRequired { op: &'static str },

    #[error("residual matrix has a nonzero diagonal-tile entry at ({row}, {col})")]
    NonzeroDiagonalTile { row: usize, col: usize },

    #[error("invalid attention matrix: {0}")]
    InvalidAttention(String),

    #[error("invalid task parameters: {0}")]
    InvalidTask(String),

    #[error("allocation of {bytes} bytes failed while {context}")]
    Allocation { bytes: usize, context: &'static str },

    #[error("cost model fit failed: {0}")]
    DegenerateFit(String),

    #[error("{0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("bad matrix file: {0}")]
    Format(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
