use thiserror::Error;

pub type Result<T> = std::result::Result<T, MiningError>;

#[derive(Debug, Error)]
pub enum MiningError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Core(#[from] sgt_core::SgtError),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(MiningError::InvalidArgument(msg.into()))
}
