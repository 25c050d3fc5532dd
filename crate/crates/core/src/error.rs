use thiserror::Error;

/// Failure classes shared by every module.
///
/// The split mirrors how callers react: bad input is the caller's problem, a
/// consistency failure means an identity that must hold did not, and a resource
/// failure means a configured guard refused the work.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("structural mismatch: {0}")]
    Structural(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("resource guard exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Structural(_) => "structural",
            Error::Consistency(_) => "consistency",
            Error::Resource(_) => "resource",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
