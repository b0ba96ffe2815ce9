use std::error;
use std::fmt;

use crate::family::TransformFamily;

/// Errors reported by builders, validation and signal application.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A transform size of zero was requested.
    ZeroSize,
    /// A parameter that must be a positive integer was zero.
    ZeroParam(&'static str),
    /// A kernel angle numerator left the exactly representable integer
    /// range (|numerator| > 2^53), so the angle could not be formed
    /// without rounding the integer part.
    AngleOverflow,
    /// The operation requires a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Parameters were supplied for a family that takes none.
    NotParameterized(TransformFamily),
    /// The family requires parameters that were not supplied.
    MissingParams(TransformFamily),
    /// A vector or image length does not match the matrix shape.
    ShapeMismatch { expected: usize, actual: usize },
    /// The inverse gate rejected a matrix whose measured Gram deviation
    /// exceeds the orthogonality tolerance.
    NotOrthogonal { deviation: f64 },
    /// A signal contained a non-finite value or was empty.
    InvalidSignal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroSize => write!(f, "transform size must be at least 1"),
            Error::ZeroParam(name) => write!(f, "parameter {name} must be a positive integer"),
            Error::AngleOverflow => {
                write!(f, "kernel angle numerator exceeds 2^53 and cannot be represented exactly")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::NotParameterized(family) => {
                write!(f, "family {family} is not parameterized (takes no p, q, r)")
            }
            Error::MissingParams(family) => {
                write!(f, "family {family} requires parameters")
            }
            Error::ShapeMismatch { expected, actual } => {
                write!(f, "length mismatch: expected {expected}, got {actual}")
            }
            Error::NotOrthogonal { deviation } => {
                write!(f, "matrix is not orthogonal (measured Gram deviation {deviation:e})")
            }
            Error::InvalidSignal(reason) => write!(f, "invalid signal: {reason}"),
        }
    }
}

impl error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
