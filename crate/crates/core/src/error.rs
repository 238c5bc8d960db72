use thiserror::Error;

/// Errors raised by the library.
///
/// Outcomes of a check (a Jacobi violation, a non-commuting slice pair) are
/// reported through the check's own report type. This enum covers malformed
/// input, violated preconditions and internal inconsistencies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size {size} exceeds the configured cap {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("brackets are not compatible")]
    Incompatible,

    #[error("numeric zero count {numeric} disagrees with exact count {exact}")]
    SpectrumMismatch { numeric: usize, exact: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
