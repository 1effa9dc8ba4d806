use thiserror::Error;

pub type Result<T> = std::result::Result<T, BenchError>;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Core(#[from] sgt_core::SgtError),

    #[error(transparent)]
    Mining(#[from] sgt_mining::MiningError),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(BenchError::InvalidArgument(msg.into()))
}
