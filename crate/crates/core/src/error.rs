use thiserror::Error;

pub type Result<T> = std::result::Result<T, SgtError>;

#[derive(Debug, Error)]
pub enum SgtError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation needs state the value does not carry, e.g. undirected
    /// recombination on a matrix without accumulators.
    #[error("invalid state: {0}")]
    State(String),

    #[error("sequence {id:?}: token {token:?} is not in the alphabet")]
    UnknownToken { id: String, token: String },

    #[error("input contains no sequences")]
    EmptyInput,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl SgtError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        SgtError::InvalidArgument(msg.into())
    }

    /// True for errors caused by the content of the input data rather than
    /// by how the library was called or by the environment.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            SgtError::UnknownToken { .. } | SgtError::EmptyInput | SgtError::Malformed(_) | SgtError::Csv(_)
        )
    }
}
