use thiserror::Error;

/// Failure of a CLI run, carrying its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input data.
    #[error("input error: {0}")]
    Input(String),
    /// Flags or settings that cannot be satisfied.
    #[error("configuration error: {0}")]
    Config(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Config(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<kselect::Error> for CliError {
    fn from(e: kselect::Error) -> Self {
        use kselect::Error::*;
        match e {
            Empty | ShapeMismatch { .. } | NonFinite { .. } | ConstantColumn(_) | DegenerateData { .. } | AllDegenerate => {
                CliError::Input(e.to_string())
            }
            KTooLarge { .. } | InvalidArgument(_) | RejectionFailure(_) | ZeroResidual { .. } | LengthMismatch(..) => {
                CliError::Config(e.to_string())
            }
            NonpositiveIdeal(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
