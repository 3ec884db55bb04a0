use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("malformed symbol: {0}")]
    MalformedSymbol(String),

    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: u64 },

    #[error("group generation exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("Dixon's method failed: {0}")]
    Dixon(String),

    #[error("inconsistent model: {0}")]
    Inconsistent(String),
}
