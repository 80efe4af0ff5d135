use thiserror::Error;

/// Errors raised by the library.
///
/// Input errors (malformed text, invalid shapes) are distinguished from data
/// errors (parameter window exhaustion, degenerate nodes) by [`Error::is_data_error`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),
    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),
    #[error("invalid parameter sequence: {0}")]
    InvalidParams(String),
    #[error("invalid rational: {0}")]
    InvalidRational(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("skew shape contains a 2x2 block")]
    Contains2x2,
    #[error("skew shape is not connected")]
    NotConnected,
    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("parameter index {index} lies outside the custom window {lo}..={hi}")]
    WindowExceeded { index: i64, lo: i64, hi: i64 },
    #[error("interpolation degenerate: {0}")]
    InterpolationDegenerate(String),
    #[error("degenerate point, use another evaluator: {0}")]
    DegeneratePoint(String),
}

impl Error {
    /// Window exhaustion and degenerate parameters/points are data errors;
    /// everything else is an input (usage) error.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::WindowExceeded { .. }
                | Error::InterpolationDegenerate(_)
                | Error::DegeneratePoint(_)
                | Error::DegreeCap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
