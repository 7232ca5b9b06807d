use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] shapespline::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
