use thiserror::Error;

use crate::ssreal::Reason;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: String, found: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear system has no solution")]
    InconsistentSystem,
    #[error("matrix is singular")]
    Singular,
    #[error("group {group} is not compatible with algebra {algebra}")]
    IncompatibleContext { algebra: String, group: String },
    #[error("malformed canonical form: {0}")]
    MalformedCanonical(String),
    #[error("element does not belong to the algebra of the context")]
    AlgebraMismatch,
    #[error("element is not semisimple")]
    NotSemisimple,
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("element is zero")]
    ZeroElement,
    #[error("requested reversal is not realizable ({0:?})")]
    NotRealizable(Reason),
    #[error("spectrum does not split over Q(i); the decision stands but no witness can be built")]
    SpectrumNotSplit,
    #[error("construction needs a square root outside Q(i)")]
    FieldExtensionRequired,
    #[error("semisimple part does not lie in the centralizer of the sl2-triple")]
    NotInCentralizer,
    #[error("internal construction failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
