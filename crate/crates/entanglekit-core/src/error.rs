//! Crate-wide error type.

use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Hermiticity violated beyond the allowed tolerance.
    NotHermitian { deviation: f64 },
    /// An eigenvalue fell below the allowed negative floor.
    NotPsd { min_eigenvalue: f64 },
    /// Matrix or vector with no entries.
    Empty,
    /// A NaN or infinite entry was encountered.
    NonFinite,
    /// Operand shapes or subsystem dimensions do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// A state vector with (numerically) zero norm cannot be normalised.
    ZeroVector,
    /// Trace differs from one beyond tolerance.
    TraceNotUnit { trace: f64 },
    /// A family or search parameter lies outside its documented range.
    ParameterOutOfRange { name: &'static str, value: f64 },
    /// A spectrum argument is not descending, nonnegative and unit-sum.
    MalformedSpectrum,
    /// A degeneracy profile violates its constraints.
    MalformedProfile,
    /// Unknown measure identifier or measure/ensemble combination.
    UnknownMeasure,
    /// The operation is undefined for the given state (e.g. unequal
    /// subsystem dimensions where N = K is required).
    NotApplicable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max deviation {deviation:.3e})")
            }
            Error::NotPsd { min_eigenvalue } => {
                write!(f, "matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")
            }
            Error::Empty => write!(f, "empty matrix or vector"),
            Error::NonFinite => write!(f, "non-finite entry"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::ZeroVector => write!(f, "state vector has zero norm"),
            Error::TraceNotUnit { trace } => write!(f, "trace is {trace}, expected 1"),
            Error::ParameterOutOfRange { name, value } => {
                write!(f, "parameter {name} = {value} out of range")
            }
            Error::MalformedSpectrum => write!(f, "spectrum is not a descending probability vector"),
            Error::MalformedProfile => write!(f, "invalid degeneracy profile"),
            Error::UnknownMeasure => write!(f, "unknown measure or ensemble combination"),
            Error::NotApplicable => write!(f, "operation not applicable to this state"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
