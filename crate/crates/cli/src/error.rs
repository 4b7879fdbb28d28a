use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A configuration value is missing or out of range; `field` names it.
    #[error("invalid config field `{field}`: {message}")]
    Config { field: &'static str, message: String },

    #[error("cannot read config {path}: {source}")]
    ConfigRead { path: String, source: io::Error },

    #[error("cannot parse config {path}: {source}")]
    ConfigParse { path: String, source: serde_json::Error },

    #[error("numerical error: {0}")]
    Numeric(#[from] bessel_means_core::Error),

    #[error("output error: {0}")]
    Output(String),

    #[error("{failed} of {total} verification checks failed")]
    VerificationFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn config(field: &'static str, message: impl Into<String>) -> Self {
        CliError::Config {
            field,
            message: message.into(),
        }
    }

    /// 1 for a failed verification, 2 for everything the user can fix in the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerificationFailed { .. } => 1,
            _ => 2,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}
