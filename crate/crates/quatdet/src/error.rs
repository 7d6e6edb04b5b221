//! Error type shared across the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed quaternion literal. `position` is the 1-based character
    /// offset of the offending input.
    Parse { position: usize, message: String },
    /// Operand dimensions are incompatible with the requested operation.
    ShapeMismatch(String),
    /// A 1-based row/column/anchor index fell outside `1..=bound`.
    IndexOutOfRange { index: usize, bound: usize },
    /// Row/column deletion on a 1x1 matrix.
    DegenerateSize,
    /// Matrix order exceeds the configured permutation-sum cap.
    SizeCapExceeded { n: usize, cap: usize },
    /// The double determinant of the named operand is zero.
    Singular { which: &'static str },
    /// The operation requires a Hermitian matrix.
    NotHermitian,
    /// Multiplicative inverse of the zero quaternion.
    ZeroDivisor,
    /// The sequence passed as a permutation is not a bijection on `{1..n}`.
    InvalidPermutation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 1..={bound}")
            }
            Error::DegenerateSize => write!(f, "cannot delete a row and column of a 1x1 matrix"),
            Error::SizeCapExceeded { n, cap } => {
                write!(f, "matrix order {n} exceeds the size cap {cap}")
            }
            Error::Singular { which } => {
                write!(f, "matrix {which} is singular (zero determinant)")
            }
            Error::NotHermitian => write!(f, "matrix is not Hermitian"),
            Error::ZeroDivisor => write!(f, "zero quaternion has no inverse"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
