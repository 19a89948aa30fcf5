//! Command implementations behind the `sympsnf` binary.
//!
//! Each command takes file contents (not paths) and returns the text to print
//! together with the process exit code, so the whole tool can be driven
//! in-process.

pub mod commands;
pub mod format;
pub mod report;

use thiserror::Error;

/// Exit code for a failed verification or a double-coset mismatch.
pub const EXIT_SEMANTIC: i32 = 1;
/// Exit code for unreadable or malformed input.
pub const EXIT_INPUT: i32 = 2;
/// Exit code for input outside the domain (not symplectic).
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NotSymplectic(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::NotSymplectic(_) => EXIT_DOMAIN,
            CliError::Internal(_) => EXIT_SEMANTIC,
        }
    }
}

impl From<sympsnf::Error> for CliError {
    fn from(e: sympsnf::Error) -> Self {
        use sympsnf::Error as E;
        match e {
            E::NotSymplectic => CliError::NotSymplectic(e.to_string()),
            E::InvalidDimension(_) | E::InvalidArgument(_) | E::NotInMp(_) => CliError::Input(e.to_string()),
            E::PreconditionViolation(_) | E::InvalidGenerator(_) | E::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Output selection shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    pub fn success(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}
