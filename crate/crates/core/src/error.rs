use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("invalid diagram: {0}")]
    Structural(String),

    #[error("degree {0} is not supported (available degrees: {1})")]
    Capability(usize, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("missing linking number for pair ({0}, {1})")]
    MissingLinking(String, String),

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("malformed input: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
