use thiserror::Error;

/// Errors raised by the library.
///
/// `InvalidInput` and `InvalidConfig` are caller mistakes; `Parse` and `Io`
/// come from the file loaders.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::InvalidConfig(msg.into())
    }

    /// True for errors caused by bad user input (files, flags, data), as
    /// opposed to internal failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Json(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
