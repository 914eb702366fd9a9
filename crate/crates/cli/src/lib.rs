//! File formats and subcommands of the `galilei` binary.

pub mod commands;
pub mod output;
pub mod scenario;

use thiserror::Error;

/// Failures of a subcommand, each with a fixed process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or syntactically invalid input, or bad arguments.
    #[error("{0}")]
    Malformed(String),
    /// Well-formed input that violates a domain constraint (e.g. `m <= 0`).
    #[error("constraint violation: {0}")]
    Constraint(#[from] galilei_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Malformed(_) | CliError::Io(_) => 2,
            CliError::Constraint(_) => 3,
        }
    }
}

/// Exit code of `verify` when some check fails.
pub const EXIT_CHECK_FAILED: u8 = 1;
