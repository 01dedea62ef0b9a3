use thiserror::Error;

/// Errors raised by the engine.
///
/// The three families map one-to-one onto the command-line exit codes:
/// bad input (1), a size guard (2), and a violated integrality contract (3).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// A quantity that must be an integer polynomial was not one. This always
    /// indicates a bug in the engine, never bad user input.
    #[error("integrality failure: {0}")]
    Integrality(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 1,
            Error::SizeGuard(_) => 2,
            Error::Integrality(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
