use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("degenerate interval: expected a < b, got [{a}, {b}]")]
    DegenerateInterval { a: f64, b: f64 },

    #[error("invalid compact set: {0}")]
    InvalidSet(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("exchange did not converge: certified gap {gap:.3e} above tolerance {tol:.3e} after {iters} iterations")]
    NoConvergence { gap: f64, tol: f64, iters: usize },

    #[error("capacity of the set is at least 1; no integer polynomial of sup-norm < 1 exists")]
    CapacityAtLeastOne,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("target is not interpolable on the Fekete kernel: {0}")]
    NotInterpolable(String),

    #[error("kernel enumeration incomplete: {0}")]
    KernelIncomplete(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),
}
