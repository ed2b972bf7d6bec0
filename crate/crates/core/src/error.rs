//! Error type shared by all modules.

use std::path::PathBuf;

/// Everything that can go wrong inside the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A vector or matrix did not have the dimensions the operation requires.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// Caller handed in data that violates a precondition (empty input,
    /// out-of-range parameter, missing label class, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configuration value is out of its documented range or inconsistent.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An operation was called on an object in the wrong state
    /// (e.g. scoring with an unfitted centroid).
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A numeric invariant broke (non-finite parameter or metric).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Failure while reading or parsing a data file.
    #[error("data error in {path}: {message}")]
    Data { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn data(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Data {
            path: path.into(),
            message: message.into(),
        }
    }
}
