use thiserror::Error;

use crate::lambda::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    /// A value was handed to an applicative or morphism it does not belong to.
    #[error("applicative mismatch: expected a value of {expected}, got one of {found}")]
    TagMismatch { expected: String, found: String },
    #[error("payload {value} does not have the shape of {expected}")]
    Shape { expected: String, value: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid JSON term: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
