use thiserror::Error;

/// Failure modes shared by every module.
///
/// Each variant maps onto one of the reason codes reported by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A schema violation while decoding JSON; `pointer` is a JSON pointer to the offending field.
    #[error("invalid input at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error("precision error: {0}")]
    Precision(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn precision(msg: impl Into<String>) -> Self {
        Error::Precision(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { pointer: pointer.into(), message: message.into() }
    }

    /// Machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::Schema { .. } => "invalid-input",
            Error::Precision(_) => "precision-error",
            Error::ResourceLimit(_) => "resource-limit",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
