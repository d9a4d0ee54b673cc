//! Error type shared by every module in the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated a stated precondition (index out of range,
    /// grid mismatch, dimension mismatch, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive search or enumeration would exceed its size cap.
    #[error("size cap exceeded while {what} (cap: {cap})")]
    Size { what: String, cap: usize },

    /// An unsupported configuration was requested (unknown fiber
    /// functor, unknown law suite, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Input could not be parsed against its schema.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn size(what: impl Into<String>, cap: usize) -> Self {
        Error::Size {
            what: what.into(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
