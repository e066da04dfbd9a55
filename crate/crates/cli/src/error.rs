use std::path::PathBuf;

use polariton_core::PolaritonError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),

    #[error("tolerance: {0}")]
    Tolerance(String),

    #[error("numerical failure")]
    Numerics(#[source] PolaritonError),

    #[error("{}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Tolerance(_) | CliError::Numerics(_) => 2,
            CliError::Io { .. } => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<PolaritonError> for CliError {
    fn from(e: PolaritonError) -> Self {
        match e {
            PolaritonError::InvalidParameter { .. } | PolaritonError::EmptyRange { .. } => {
                CliError::Config(e.to_string())
            }
            other => CliError::Numerics(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
