use thiserror::Error;

/// Errors raised by the library. All of them are domain errors: the input was
/// well-formed but violates a precondition of the requested operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("vector {0} is not primitive")]
    NotPrimitive(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("empty polytope")]
    EmptyPolytope,
    #[error("expected {expected} polytopes, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("function is not linear on cone {0}")]
    NotLinear(String),
    #[error("fan is not balanced at face {0}")]
    NotBalanced(String),
    #[error("support mismatch: {0}")]
    SupportMismatch(String),
    #[error("ray {0} is not in the support of the fan")]
    RayNotInSupport(String),
    #[error("function {index} is undefined on the intermediate cycle: {detail}")]
    UndefinedFunction { index: usize, detail: String },
    #[error("tropical complete intersection is degenerate")]
    Degenerate,
    #[error("majorant {index} does not dominate the function at ray {ray}")]
    DominationViolated { index: usize, ray: String },
    #[error("non-integer result {0}")]
    NonInteger(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
