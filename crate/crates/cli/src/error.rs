use std::path::PathBuf;

use sdtest_core::SdError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: row {row}, column '{column}': {message}")]
    Parse {
        path: PathBuf,
        row: usize,
        column: String,
        message: String,
    },

    #[error("group column '{column}' must have exactly 2 levels (at least 2 for maximality), found {levels}")]
    GroupArity { column: String, levels: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("machine record: {0}")]
    Record(String),

    #[error(transparent)]
    Core(#[from] SdError),
}

impl CliError {
    /// Process exit code: 2 for usage/configuration problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
