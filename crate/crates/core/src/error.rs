use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclic indices with different moduli ({left} vs {right})")]
    ModulusMismatch { left: usize, right: usize },

    #[error("C_{m} x C_{n} needs m >= 3 and n >= 3")]
    InvalidSize { m: usize, n: usize },

    #[error("{what} {value} out of range (bound {bound})")]
    OutOfRange { what: &'static str, value: usize, bound: usize },

    #[error("open blue path P(i,{j},{k}) is empty")]
    EmptyPath { j: usize, k: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed drawing: {0}")]
    Malformed(String),

    #[error("drawing is not valid: {0}")]
    Invalid(String),

    #[error("red cycle R({j}) is disjoint from no other red cycle")]
    NoDisjointPartner { j: usize },

    #[error("red cycle R({k}) misses the outer region of R({j})")]
    OuterRegionMissed { j: usize, k: usize },

    #[error("{0} lies on the curve")]
    OnCurve(String),

    #[error("{0}")]
    Precondition(String),

    #[error("index {what} undefined for R({j})")]
    Undefined { what: &'static str, j: usize },

    #[error("falsified: {0}")]
    Falsified(String),

    #[error("drawing is not robust")]
    NotRobust,

    #[error("neither robust nor has a heavy red cycle")]
    DichotomyFailure,

    #[error("n = {n} is below the threshold {threshold}")]
    BelowThreshold { n: usize, threshold: String },

    #[error("search budget of {budget} planarity tests exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
