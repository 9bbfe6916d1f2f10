use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rdv_core::{factorial, WalkSchedule};

use crate::{permanent, residual_matrix, ExactError, ExactProbability};

/// Exact probability that schedules `x` and `y` fail to meet within the
/// first `t_horizon` steps, over a uniform relabeling:
/// `Perm(residual(x, y, T)) / n!`.
pub fn exact_pair_failure(
    x: &WalkSchedule,
    y: &WalkSchedule,
    t_horizon: usize,
) -> Result<ExactProbability, ExactError> {
    let matrix = residual_matrix(x, y, t_horizon)?;
    let perm = permanent(&matrix)?;
    Ok(ExactProbability::new(perm, factorial(x.n())))
}

/// A finite-support distribution over walk schedules with exact rational
/// probabilities summing to one.
#[derive(Debug, Clone)]
pub struct FiniteSupportDist {
    schedules: Vec<WalkSchedule>,
    probs: Vec<BigRational>,
}

impl FiniteSupportDist {
    pub fn new(
        schedules: Vec<WalkSchedule>,
        probs: Vec<BigRational>,
    ) -> Result<Self, ExactError> {
        if schedules.is_empty() || schedules.len() != probs.len() {
            return Err(ExactError::BadDistribution);
        }
        let total: BigRational = probs.iter().cloned().sum();
        if !total.is_one() || probs.iter().any(|p| p < &BigRational::zero()) {
            return Err(ExactError::BadDistribution);
        }
        let n = schedules[0].n();
        if schedules.iter().any(|s| s.n() != n) {
            return Err(ExactError::BadDistribution);
        }
        Ok(FiniteSupportDist { schedules, probs })
    }

    /// Uniform distribution over the given schedules.
    pub fn uniform(schedules: Vec<WalkSchedule>) -> Result<Self, ExactError> {
        let s = schedules.len();
        let p = BigRational::new(1.into(), (s as u64).into());
        Self::new(schedules, vec![p; s])
    }

    pub fn schedules(&self) -> &[WalkSchedule] {
        &self.schedules
    }

    pub fn probs(&self) -> &[BigRational] {
        &self.probs
    }

    pub fn n(&self) -> usize {
        self.schedules[0].n()
    }
}

/// Exact failure probability of the symmetric strategy `D x D`:
/// `sum_{x,y} p_x p_y Perm(residual(x,y,T)) / n!`, as an exact rational.
pub fn exact_strategy_failure(
    dist: &FiniteSupportDist,
    t_horizon: usize,
) -> Result<ExactProbability, ExactError> {
    let n = dist.n();
    let nfact: BigRational = BigRational::from_integer(factorial(n).into());
    let mut total = BigRational::zero();
    for (x, px) in dist.schedules().iter().zip(dist.probs()) {
        for (y, py) in dist.schedules().iter().zip(dist.probs()) {
            let perm = permanent(&residual_matrix(x, y, t_horizon)?)?;
            let fail = BigRational::from_integer(perm.into()) / &nfact;
            total += px * py * fail;
        }
    }
    // total is in [0, 1]; express over a common positive denominator.
    let (num, den) = (total.numer().clone(), total.denom().clone());
    let num: BigUint = num.try_into().map_err(|_| ExactError::BadDistribution)?;
    let den: BigUint = den.try_into().map_err(|_| ExactError::BadDistribution)?;
    Ok(ExactProbability::new(num, den))
}
