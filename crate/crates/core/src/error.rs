use thiserror::Error;

/// Errors surfaced by the engine. The CLI maps these onto process exit
/// codes: validation 1, data 2, numeric 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration, window, or argument.
    #[error("validation: {0}")]
    Validation(String),

    /// Bad or missing input data / artifacts.
    #[error("data: {0}")]
    Data(String),

    /// Numeric failure (divergence, non-finite values).
    #[error("numeric: {0}")]
    Numeric(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
