use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unsupported polygon size {0}: proven cases are 3, 5, 6, and powers of two")]
    UnsupportedPolygon(usize),

    #[error("vertex {vertex} has degree {degree}; the caterpillar labeler requires degree <= 5")]
    DegreeTooLarge { vertex: usize, degree: usize },

    #[error("no odd prime labeling exists: independence number {beta} < required {bound}")]
    ProvablyInfeasible { beta: usize, bound: usize },

    #[error("no perfect coprime matching for n={n}, a={a}, b={b}")]
    MatchingFailure { n: usize, a: u64, b: u64 },

    #[error("a={a} and b={b} share an odd prime divisor less than {limit}")]
    HypothesisViolated { a: u64, b: u64, limit: u64 },

    #[error("target {target} is not in the sequence {start}, {start}+2, ... of length {count}")]
    TargetNotInSequence {
        start: u64,
        count: usize,
        target: u64,
    },

    #[error("vertex {0} has no label")]
    PartialLabeling(usize),

    #[error("order {0} is outside the table range 1..=50")]
    OrderOutOfRange(usize),

    #[error("not a prime labeling: violating edges {0:?}")]
    NotAPrimeLabeling(Vec<(usize, usize, u64)>),

    #[error("graph order {order} exceeds the configured limit {limit}")]
    OrderLimitExceeded { order: usize, limit: usize },

    #[error("no constructive labeler is known for {0}")]
    NoKnownLabeler(String),
}

pub type Result<T> = std::result::Result<T, Error>;
