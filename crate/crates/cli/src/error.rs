use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read config {path}: {source}")]
    ReadConfig {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("config {path}: {message}")]
    ParseConfig { path: String, message: String },

    #[error("invalid parameter: {0}")]
    Invalid(#[from] firewsn_core::Error),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Process exit status: every error here is an input or I/O problem.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
