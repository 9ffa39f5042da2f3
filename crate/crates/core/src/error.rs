use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("derivative of order {requested} requested but at most {max} is served")]
    OrderExceeded { requested: usize, max: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("node x = {x} outside admissible range [{lo}, {hi}]")]
    NodeRange { x: f64, lo: f64, hi: f64 },

    #[error("reflection not representable: {0}")]
    Unrepresentable(String),

    #[error("invalid harmonic sequence: {0}")]
    InvalidSequence(String),

    #[error("adaptive integration did not reach tolerance {tol:e} within {depth} bisection levels (estimate {estimate:e})")]
    MaxDepth { tol: f64, depth: usize, estimate: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("inconsistent statistics: {0}")]
    InconsistentStats(String),

    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),

    #[error("exact evaluation unavailable: {0}")]
    NotExact(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
