//! Closed-form lower bounds on rendezvous failure probability, the
//! frequent/rare step classifier, the expected-time integrals, and the
//! submodularity machinery behind them.
//!
//! Every asymptotic bound is implemented without its vanishing correction
//! term; callers comparing against finite-n measurements must budget an
//! explicit allowance.

mod bounds;
mod classify;
mod integrals;
mod submodular;

pub use bounds::{
    abcd_lower_bound, abcd_min_bound, detailed_failure, four_n_lower_bound, pair_profile,
    two_wait_failure, uniform_bound_equal_wait, uniform_bound_general, ABCDProfile,
    DetailedProfile,
};
pub use classify::classify_steps;
pub use integrals::{adaptive_simpson, expected_time_lower_bound};
pub use submodular::{lovasz_chain_distribution, lovasz_extension_sample, submodular_f, StepSet};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundsError {
    #[error("{0}")]
    Domain(String),
}

pub(crate) fn domain(msg: impl Into<String>) -> BoundsError {
    BoundsError::Domain(msg.into())
}
