use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("subset is not spherical")]
    NotSpherical,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("element is not a reflection")]
    NotAReflection,
    #[error("elements belong to different groups")]
    GraphMismatch,
    #[error("search radius {radius} exhausted")]
    RadiusExhausted { radius: usize },
    #[error("node cap {cap} exhausted")]
    CapExhausted { cap: usize },
    #[error("chamber set meets both sides of the wall")]
    NotSeparated,
    #[error("walls intersect (product of reflections has order {order})")]
    WallsIntersect { order: u32 },
    #[error("no complete orbit inside the ball of radius {radius}")]
    InconclusiveRadius { radius: usize },
    #[error("not a marking: support together with the marker is spherical")]
    NotAMarking,
    #[error("fundamental domain selection failed: {0}")]
    DomainSelectionFailed(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CoxError>;
