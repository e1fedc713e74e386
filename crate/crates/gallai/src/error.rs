use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter violated a precondition (bad vertex, duplicate color, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation that requires a rainbow-triangle-free coloring was given
    /// one containing a rainbow triangle.
    #[error("coloring is not rainbow-triangle-free: triangle {{{0}, {1}, {2}}} uses three colors")]
    RainbowTriangle(u8, u8, u8),

    /// The requested size is beyond what the operation supports.
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    /// Malformed textual input; positions are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn too_big(msg: impl Into<String>) -> Self {
        Error::UnsupportedSize(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: msg.into(),
        }
    }
}
