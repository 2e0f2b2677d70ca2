use thiserror::Error;

/// Errors surfaced by the library. `Validation` covers bad inputs and
/// infeasible requests; `Numerics` covers internal consistency failures
/// (identity violations, non-convergence) that indicate the computation
/// cannot be trusted.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("validation: {0}")]
    Validation(String),
    #[error("numerics: {0}")]
    Numerics(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CoreError {
    pub fn validation(msg: impl Into<String>) -> Self {
        CoreError::Validation(msg.into())
    }
    pub fn numerics(msg: impl Into<String>) -> Self {
        CoreError::Numerics(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
