use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid segment [{a},{b}]: left endpoint exceeds right endpoint")]
    InvalidSegment { a: i32, b: i32 },

    #[error("multisegment {0} is not regular")]
    NotRegular(String),

    #[error("{0}")]
    Precondition(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("backend disagreement on {quantity}: {details}")]
    Disagreement { quantity: String, details: String },

    #[error("battery failure: {0}")]
    Battery(String),
}

pub type Result<T> = std::result::Result<T, Error>;
