use serde::{Deserialize, Serialize};

/// A Monte Carlo point estimate with a 95% confidence interval and the
/// master seed that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub point: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub trials: u64,
    pub seed: u64,
}

impl Estimate {
    pub fn half_width(&self) -> f64 {
        ((self.ci_high - self.point).abs()).max((self.point - self.ci_low).abs())
    }

    /// Standard error of a proportion at the observed point.
    pub fn proportion_se(&self) -> f64 {
        (self.point * (1.0 - self.point) / self.trials as f64).sqrt()
    }
}

const Z95: f64 = 1.959963984540054;

/// 95% Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let spread = Z95 * ((p * (1.0 - p) + z2 / (4.0 * n)) / n).sqrt() / denom;
    // center - spread is exactly 0 at p = 0 (and 1 at p = 1) on paper;
    // pin the endpoints so rounding noise cannot leak past them.
    let lo = if successes == 0 {
        0.0
    } else {
        (center - spread).max(0.0)
    };
    let hi = if successes == trials {
        1.0
    } else {
        (center + spread).min(1.0)
    };
    (lo, hi)
}

/// Proportion estimate with Wilson interval.
pub fn proportion_estimate(successes: u64, trials: u64, seed: u64) -> Estimate {
    let (lo, hi) = wilson_interval(successes, trials);
    Estimate {
        point: if trials == 0 {
            f64::NAN
        } else {
            successes as f64 / trials as f64
        },
        ci_low: lo,
        ci_high: hi,
        trials,
        seed,
    }
}

/// Mean with a normal 95% interval, from a sample sum and sum of squares.
pub fn mean_estimate(sum: f64, sum_sq: f64, trials: u64, seed: u64) -> Estimate {
    let n = trials as f64;
    let mean = sum / n;
    let var = ((sum_sq - sum * sum / n) / (n - 1.0).max(1.0)).max(0.0);
    let half = Z95 * (var / n).sqrt();
    Estimate {
        point: mean,
        ci_low: mean - half,
        ci_high: mean + half,
        trials,
        seed,
    }
}
