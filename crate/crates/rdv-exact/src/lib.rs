//! Exact probability engine for the "Reduce The Permanent" view of the
//! rendezvous game: permanents of residual 0/1 matrices, exact pair and
//! strategy failure probabilities as rationals, and a permutation-sampling
//! estimator for dimensions beyond the exact cutoff.

mod permanent;
mod residual;
mod strategy;

pub use permanent::{permanent, EXACT_PERMANENT_MAX_M};
pub use residual::{avoidance_probability_estimate, residual_matrix, ResidualMatrix};
pub use strategy::{exact_pair_failure, exact_strategy_failure, FiniteSupportDist};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("m = {0} exceeds the exact-permanent cutoff {max}; use avoidance_probability_estimate", max = EXACT_PERMANENT_MAX_M)]
    TooLarge(usize),
    #[error("index ({row}, {col}) out of range for m = {m}")]
    IndexOutOfRange { row: usize, col: usize, m: usize },
    #[error("horizon T = {t} exceeds a schedule length {len}")]
    HorizonOutOfRange { t: usize, len: usize },
    #[error("support probabilities do not sum to 1")]
    BadDistribution,
    #[error("{0}")]
    Core(#[from] rdv_core::CoreError),
}

/// An exact probability `numerator / denominator` with a derived float view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactProbability {
    numerator: BigUint,
    denominator: BigUint,
}

impl ExactProbability {
    pub fn new(numerator: BigUint, denominator: BigUint) -> Self {
        debug_assert!(numerator <= denominator);
        ExactProbability {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// Exact rational value, reduced.
    pub fn value(&self) -> BigRational {
        BigRational::new(
            self.numerator.clone().into(),
            self.denominator.clone().into(),
        )
    }

    /// Derived floating view; never authoritative.
    pub fn to_f64(&self) -> f64 {
        self.value().to_f64().unwrap_or(f64::NAN)
    }
}

impl std::fmt::Display for ExactProbability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}
