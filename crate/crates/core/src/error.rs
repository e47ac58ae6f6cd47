use thiserror::Error;

use crate::formula::ParseError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QlatError {
    #[error("{what} index {value} out of range (allowed {allowed})")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        allowed: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero vector where a nonzero state is required")]
    ZeroVector,

    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not square or has dimension 0")]
    BadShape,

    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not idempotent (deviation {deviation:.3e})")]
    NotIdempotent { deviation: f64 },

    #[error("projector trace {trace} is not within tolerance of an integer rank")]
    FractionalRank { trace: f64 },

    #[error("tolerance {name} = {value} must lie strictly between 0 and 1")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("generator must be nontrivial (0 < rank < dim), got rank {rank} in dim {dim}")]
    TrivialGenerator { rank: usize, dim: usize },

    #[error("element is not a member of the lattice")]
    ElementNotInLattice,

    #[error("lattice closure exceeded {limit} elements")]
    LatticeTooLarge { limit: usize },

    #[error("unbound atom `{0}`")]
    UnboundAtom(String),

    #[error("connective `{connective}` is not supported in {mode} mode")]
    UnsupportedConnective {
        connective: &'static str,
        mode: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, QlatError>;
