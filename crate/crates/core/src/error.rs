use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// [`Error::Postcondition`], [`Error::Recursion`] and [`Error::NoFiller`] mean
/// that well-formed data failed a mathematical identity; the CLI reports them
/// as failed checks and everything else as bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("horn element is not in the horn space: {0}")]
    NotInHornSpace(String),
    #[error("no filler exists: {0}")]
    NoFiller(String),
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error("recursive horn construction aborted: {0}")]
    Recursion(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    /// Only the error kind is kept, so the message reads the same on every
    /// platform.
    #[error("cannot read {path}: {kind}")]
    Io { path: String, kind: std::io::ErrorKind },
}

pub type Result<T> = std::result::Result<T, Error>;
