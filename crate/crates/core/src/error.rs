use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("precision failure: {0}")]
    Precision(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("mathematical check failed: {0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;
