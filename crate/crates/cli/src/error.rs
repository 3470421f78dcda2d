use std::fmt;

use chowkit_core::Error as CoreError;

/// A failed run, classified by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable files, malformed JSON or polynomial text.
    Usage(String),
    /// Polynomial text or a ring declaration the library rejected.
    Parse(CoreError),
    /// A mathematical domain error reported by the library.
    Domain(CoreError),
    /// An invariant violation; always a bug.
    Internal(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(e) | CliError::Domain(e) => e.code(),
            CliError::Internal(_) => "internal",
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        if e.is_parse_error() {
            CliError::Parse(e)
        } else if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Domain(e)
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => f.write_str(m),
            CliError::Parse(e) | CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}
