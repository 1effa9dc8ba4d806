use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or flag values; exit code 1.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or invalid input data; exit code 2.
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }
}

impl From<sgt_core::SgtError> for CliError {
    fn from(e: sgt_core::SgtError) -> Self {
        use sgt_core::SgtError;
        match e {
            SgtError::InvalidArgument(_) | SgtError::State(_) => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<sgt_mining::MiningError> for CliError {
    fn from(e: sgt_mining::MiningError) -> Self {
        match e {
            sgt_mining::MiningError::Core(inner) => inner.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<sgt_theory::TheoryError> for CliError {
    fn from(e: sgt_theory::TheoryError) -> Self {
        match e {
            sgt_theory::TheoryError::Core(inner) => inner.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<sgt_bench::BenchError> for CliError {
    fn from(e: sgt_bench::BenchError) -> Self {
        match e {
            sgt_bench::BenchError::Core(inner) => inner.into(),
            sgt_bench::BenchError::Mining(inner) => inner.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
