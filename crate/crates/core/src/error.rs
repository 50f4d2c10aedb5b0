//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Lattice parameters do not define a valid periodic Gabor system.
    #[error("lattice incompatible: {reason} (a={a}, M={m}, L={l})")]
    LatticeIncompatible { a: usize, m: usize, l: usize, reason: String },

    /// Frame lower bound fell below the detection tolerance.
    #[error("window does not generate a frame: lower bound {lower:.3e} < tolerance {tolerance:.3e}")]
    NotAFrame { lower: f64, tolerance: f64 },

    /// Array shape or length does not match expectation.
    #[error("shape mismatch in {what}: expected {expected}, got {got}")]
    ShapeMismatch { what: &'static str, expected: String, got: String },

    /// Window failed validation (empty, non-finite, or zero energy).
    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// Parameter outside its admissible range.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The ADMM solver aborted mid-run.
    #[error("solver aborted at iteration {iteration}: {reason}")]
    SolverAbort {
        iteration: usize,
        reason: String,
        /// Primal residual history up to the abort, for post-mortem inspection.
        residual_history: Vec<f64>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("wav error: {0}")]
    Wav(#[from] hound::Error),

    /// Malformed window/signal/record file contents.
    #[error("file format error in {path}: {reason}")]
    FileFormat { path: String, reason: String },
}

impl Error {
    pub(crate) fn invalid_param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }

    pub(crate) fn shape(what: &'static str, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Error::ShapeMismatch { what, expected: expected.into(), got: got.into() }
    }
}
