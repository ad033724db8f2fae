use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("Der_(0,0,0) is all of End S; there is no defining equation")]
    UnboundedSpace,

    #[error("delta must be a rational outside {{0, 1}}, got {0}")]
    BadDelta(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
