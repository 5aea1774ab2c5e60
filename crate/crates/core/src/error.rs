use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` errors mean the inputs are well formed but the requested
/// quantity is undefined or unavailable there (a point outside the open
/// torus, an indeterminate approximate signature, a missing metadata
/// field). `Dimension`/`Parse`/`Schema` errors mean malformed inputs.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("missing metadata: {0}")]
    MissingMetadata(String),

    #[error("point outside the domain: {0}")]
    Domain(String),

    #[error("indeterminate signature: eigenvalue magnitude {magnitude:e} too close to the tolerance {tolerance:e}")]
    Indeterminate { magnitude: f64, tolerance: f64 },

    #[error("division by zero: {0}")]
    ZeroDivision(String),

    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),

    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("resource limit: {0}")]
    Limit(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
