use qlat_core::QlatError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
        }
    }
}

impl From<QlatError> for CliError {
    fn from(e: QlatError) -> Self {
        match e {
            QlatError::InvalidTolerance { .. } => CliError::Usage(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<qlat_core::ParseError> for CliError {
    fn from(e: qlat_core::ParseError) -> Self {
        CliError::Input(format!("formula: {e}"))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
