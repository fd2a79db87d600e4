use std::path::PathBuf;

use polyloop_core::Error as CoreError;

/// Failures of a command, each mapped to a stable process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Ceiling(CoreError),
    #[error("oracle precondition failed: {0}")]
    Precondition(CoreError),
    #[error("{0}")]
    HochsterCeiling(CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(CoreError),
}

impl CliError {
    /// 2 invalid input, 3 sphere ceiling too low, 4 oracle precondition,
    /// 5 enumeration ceiling. Success is 0 and an oracle mismatch is 1; both
    /// are reports, not errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Io { .. } | CliError::Core(_) => 2,
            CliError::Ceiling(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::HochsterCeiling(_) => 5,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CeilingTooLow { .. } => CliError::Ceiling(e),
            CoreError::NotFlag => CliError::Precondition(e),
            CoreError::TooManyVertices { .. } => CliError::HochsterCeiling(e),
            other => CliError::Core(other),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
