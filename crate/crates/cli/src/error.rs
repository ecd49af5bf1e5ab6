use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown experiment `{0}` (expected grover, wave, lattice, spatial, solve-n or table)")]
    UnknownExperiment(String),
    #[error("unknown mode `{mode}` for experiment `{experiment}`")]
    UnknownMode { experiment: String, mode: String },
    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Core(#[from] wavesearch_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::UnknownExperiment(_) => "unknown-experiment",
            CliError::UnknownMode { .. } => "unknown-mode",
            CliError::MissingParameter(_) => "missing-parameter",
            CliError::InvalidConfig(_) => "invalid-config",
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "io",
        }
    }

    /// `error kind=<kind> message=<json string>` on a single line.
    pub fn one_line(&self) -> String {
        let msg = serde_json::to_string(&self.to_string()).expect("string serializes");
        format!("error kind={} message={msg}", self.kind())
    }
}
