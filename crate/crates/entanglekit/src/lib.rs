//! IO companion to [`entanglekit_core`]: state files, report
//! serialisation and CSV dataset emitters.

pub mod csvout;
pub mod report;
pub mod statefile;

pub use statefile::{read_state, write_state, StateFile};

/// Errors surfaced by the IO layer, split by exit-code class.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    /// Malformed input: bad file, failed state invariant, unknown
    /// parameter (exit code 2).
    #[error("{0}")]
    Input(String),
    /// Unexpected numeric failure inside the library (exit code 3).
    #[error("internal numeric failure: {0}")]
    Internal(String),
}

impl From<std::io::Error> for IoError {
    fn from(e: std::io::Error) -> Self {
        IoError::Input(format!("io error: {e}"))
    }
}

impl From<entanglekit_core::Error> for IoError {
    fn from(e: entanglekit_core::Error) -> Self {
        IoError::Input(e.to_string())
    }
}

pub type IoResult<T> = Result<T, IoError>;
