use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The inner argument of a composition has a constant term while the
    /// outer series is only known up to a bound.
    #[error("composition does not converge: inner series has a nonzero constant term and the outer series is truncated")]
    NonConvergentComposition,

    #[error("{0} requires an exact polynomial (a strictly finite species)")]
    NotPolynomial(&'static str),

    #[error("insufficient {what} bound: need at least {required}, got {given}")]
    InsufficientBound {
        what: &'static str,
        required: usize,
        given: usize,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("sort error: {0}")]
    Sort(String),

    #[error("species `{0}` is not strictly finite")]
    NotStrictlyFinite(String),

    #[error("count is not a nonnegative integer: {value} ({context})")]
    NonIntegral { value: String, context: String },

    #[error("oracle budget exceeded: {needed} elementary checks > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid input: {0}")]
    Invalid(String),
}
