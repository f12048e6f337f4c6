use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A cost specification is malformed or failed validation.
    #[error("invalid cost function: {0}")]
    InvalidCost(String),

    /// A signal's posterior mean does not match the prior.
    #[error("signal violates Bayes plausibility: mean {mean} vs prior {prior}")]
    BayesPlausibility { mean: f64, prior: f64 },

    /// The hypothesis of a constructive result is not satisfied.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// A bounded scan ended without finding what it was asked for.
    #[error("search failed: {0}")]
    SearchFailure(String),
}
