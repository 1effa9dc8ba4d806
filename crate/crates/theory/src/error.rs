use thiserror::Error;

pub type Result<T> = std::result::Result<T, TheoryError>;

#[derive(Debug, Error)]
pub enum TheoryError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The closed form is singular at these parameters.
    #[error("closed form undefined: {0}")]
    Domain(String),

    #[error(transparent)]
    Core(#[from] sgt_core::SgtError),
}
