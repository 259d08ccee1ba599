use thiserror::Error;

use crate::lattice::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("coordinate {0} exceeds the supported range")]
    CoordinateOutOfRange(LatticePoint),
    #[error("matrix determinant is {0}, expected +1 or -1")]
    NotUnimodular(i128),
    #[error("input set is not digital convex")]
    NotDigitalConvex,
    #[error("vector ({0}, {1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("topmost point lies on the diameter row")]
    DegenerateTop,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("verification failed after step `{0}`")]
    FallbackEngaged(&'static str),
    #[error("no almost 4-connected image found within the search budget")]
    NormalizationFailed,
    #[error("invalid generator parameters: {0}")]
    BadParams(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
