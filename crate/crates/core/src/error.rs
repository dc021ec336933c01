use num_bigint::BigUint;
use thiserror::Error;

use crate::count::CountResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Trial division would need a divisor above the configured bound.
    #[error("cannot factor {value}: trial division bound {bound} exceeded")]
    FactorBound { value: BigUint, bound: u64 },

    /// Exhaustive enumeration produced more items than allowed.
    #[error("enumeration cap {cap} exceeded after {partial} items")]
    EnumerationCap { cap: u64, partial: u64 },

    /// The Dirichlet coefficient array would be longer than allowed.
    #[error("Dirichlet coefficient index {index} exceeds the limit {limit}")]
    DirichletLimit { index: BigUint, limit: usize },

    /// Two counting methods returned different values.
    #[error("counting methods disagree: {}", render_results(.0))]
    Discrepancy(Vec<CountResult>),

    /// An internal consistency check failed. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by a resource bound rather than a bad argument.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::FactorBound { .. } | Error::EnumerationCap { .. } | Error::DirichletLimit { .. }
        )
    }
}

fn render_results(results: &[CountResult]) -> String {
    results
        .iter()
        .map(|r| format!("{}={}", r.method, r.value))
        .collect::<Vec<_>>()
        .join(", ")
}
