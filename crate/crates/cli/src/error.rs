use edgesquare_core::Error as CoreError;

use crate::io::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}:{error}")]
    Parse { source_name: String, error: ParseError },
    #[error("cannot read {path}: {error}")]
    Io { path: String, error: std::io::Error },
    #[error("{0}")]
    Spec(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("output failed: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status: 2 for bad input, 3 for internal inconsistencies
    /// (including route mismatches), 4 for resource caps, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::Inconsistency(_)) => 3,
            CliError::Core(CoreError::TooLarge { .. }) => 4,
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Spec(_) | CliError::Core(_) => 2,
            CliError::Output(_) => 1,
        }
    }
}
