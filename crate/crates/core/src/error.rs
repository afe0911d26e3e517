//! Error type shared by every module of the crate.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// An argument fell outside the domain of the operation. The message
    /// names the offending value and the valid range.
    Domain(String),
    /// A statistic was requested on an empty sample.
    EmptySample,
    /// A statistic was requested on a sample below its minimum size.
    InsufficientSample { min: usize, len: usize },
    /// An iterative expansion failed to converge within its iteration cap.
    Convergence(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::EmptySample => write!(f, "empty sample"),
            Error::InsufficientSample { min, len } => {
                write!(f, "sample of length {len} is below the minimum of {min}")
            }
            Error::Convergence(what) => write!(f, "{what} failed to converge"),
        }
    }
}

impl std::error::Error for Error {}
