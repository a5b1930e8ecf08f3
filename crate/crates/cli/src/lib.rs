//! Command-line front end for `monok-core`: verification, solving,
//! constructions and the reproduction suites.

pub mod args;
mod commands;
pub mod input;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use thiserror::Error;

pub use commands::run;

/// Process exit status; the numeric values are a stable contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    /// Verification false or theorem mismatch.
    Failed = 1,
    /// Unreadable input or violated precondition.
    Input = 2,
    Budget = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Budget(_) => ExitCode::Budget,
            _ => ExitCode::Input,
        }
    }
}

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: ExitCode,
}
