use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants line up with the CLI exit codes: parse failures exit 1,
/// domain and validation failures exit 2, failed verification checks exit 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text (JSON, set lists, order specifiers, flags).
    #[error("parse error: {0}")]
    Parse(String),
    /// A well-formed value outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configuration that breaks arrow conservation or a boundary rule at a vertex.
    #[error("invalid configuration at vertex ({i},{j}): {reason}")]
    Vertex { i: usize, j: usize, reason: String },
    /// One or more verification checks failed.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::Domain(_) | Error::Vertex { .. } => 2,
            Error::Verification(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
