//! Closed forms for the one-round wait-or-wander strategy in the
//! asymptotic regime: failure probability at horizon T <= n, the
//! minimizing wait bias, and the minimized failure.

use crate::StrategyError;

/// Series switchover; below this value of u = T/n the direct quotients
/// are 0/0 up to cancellation and lose all precision.
const SERIES_THRESHOLD: f64 = 1e-4;

fn check_horizon(t: usize, n: usize, allow_zero: bool) -> Result<f64, StrategyError> {
    if n == 0 || t > n || (!allow_zero && t == 0) {
        return Err(StrategyError::BadHorizon { t, max: n });
    }
    Ok(t as f64 / n as f64)
}

/// Failure probability of one wait-or-wander round with bias `theta`
/// after T of n steps: `theta^2 + 2 theta (1-theta)(1 - T/n) +
/// (1-theta)^2 e^{-T/n}`, asymptotic in n.
pub fn aw_failure_formula(t: usize, n: usize, theta: f64) -> Result<f64, StrategyError> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(StrategyError::BadTheta(theta));
    }
    let u = check_horizon(t, n, true)?;
    Ok(theta * theta
        + 2.0 * theta * (1.0 - theta) * (1.0 - u)
        + (1.0 - theta) * (1.0 - theta) * (-u).exp())
}

/// Bias minimizing the one-round failure at horizon T <= n:
/// `(1 - (1-u)e^u) / (1 - (1-2u)e^u)` with u = T/n.
pub fn optimal_theta(t: usize, n: usize) -> Result<f64, StrategyError> {
    let u = check_horizon(t, n, false)?;
    if u < SERIES_THRESHOLD {
        // num = sum_{k>=2} (k-1)/k! u^k, den = sum_{k>=1} (2k-1)/k! u^k.
        let num = series(u, 2, |k, kfact| (k - 1.0) / kfact);
        let den = series(u, 1, |k, kfact| (2.0 * k - 1.0) / kfact);
        return Ok(num / den);
    }
    let eu = u.exp();
    Ok((1.0 - (1.0 - u) * eu) / (1.0 - (1.0 - 2.0 * u) * eu))
}

/// Minimized one-round failure at horizon T <= n:
/// `(1 - (1-u)^2 e^u) / (1 - (1-2u)e^u)`.
pub fn aw_optimal_failure(t: usize, n: usize) -> Result<f64, StrategyError> {
    let u = check_horizon(t, n, false)?;
    Ok(optimal_failure_ratio(u))
}

/// The minimized failure as a function of the time ratio u = T/n in
/// [0, 1]; the 0/0 form at u = 0 takes its limit value 1.
pub fn optimal_failure_ratio(u: f64) -> f64 {
    if u == 0.0 {
        return 1.0;
    }
    if u < SERIES_THRESHOLD {
        // num = u + u^2/2 - sum_{k>=3} (k^2 - 3k + 1)/k! u^k.
        let mut num = u + u * u / 2.0;
        num -= series(u, 3, |k, kfact| (k * k - 3.0 * k + 1.0) / kfact);
        let den = series(u, 1, |k, kfact| (2.0 * k - 1.0) / kfact);
        return num / den;
    }
    let eu = u.exp();
    (1.0 - (1.0 - u) * (1.0 - u) * eu) / (1.0 - (1.0 - 2.0 * u) * eu)
}

/// `sum_{k >= k0} coeff(k, k!) u^k`, truncated once terms stop mattering.
fn series(u: f64, k0: u32, coeff: impl Fn(f64, f64) -> f64) -> f64 {
    let mut kfact = (1..=k0).map(f64::from).product::<f64>();
    let mut upow = u.powi(k0 as i32);
    let mut total = 0.0;
    for k in k0..40 {
        let term = coeff(k as f64, kfact) * upow;
        total += term;
        if term.abs() < 1e-30 * total.abs().max(1e-300) {
            break;
        }
        upow *= u;
        kfact *= (k + 1) as f64;
    }
    total
}
