use rdv_core::WalkSchedule;

use crate::{classify_steps, domain, BoundsError};

/// Joint wait/wander step counts of a schedule pair over a horizon of
/// `a + b + c + d` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ABCDProfile {
    /// Both waiting.
    pub a: usize,
    /// First wandering, second waiting.
    pub b: usize,
    /// First waiting, second wandering.
    pub c: usize,
    /// Both wandering.
    pub d: usize,
}

impl ABCDProfile {
    pub fn t(&self) -> usize {
        self.a + self.b + self.c + self.d
    }
}

/// Profile of a schedule pair over the first `t` steps, using the
/// frequent-label classifier on each side.
pub fn pair_profile(x: &WalkSchedule, y: &WalkSchedule, t: usize) -> ABCDProfile {
    let fx = classify_steps(x, t);
    let fy = classify_steps(y, t);
    let mut p = ABCDProfile {
        a: 0,
        b: 0,
        c: 0,
        d: 0,
    };
    for (&wx, &wy) in fx.iter().zip(&fy) {
        match (wx, wy) {
            (true, true) => p.a += 1,
            (false, true) => p.b += 1,
            (true, false) => p.c += 1,
            (false, false) => p.d += 1,
        }
    }
    p
}

/// Failure lower bound `(1 - b/n)^+ (1 - c/n)^+ e^{-d/n}` for a pair
/// with the given profile; asymptotic, waiting-only steps are free.
pub fn abcd_lower_bound(p: &ABCDProfile, n: usize) -> f64 {
    let n = n as f64;
    let pos = |v: f64| v.max(0.0);
    pos(1.0 - p.b as f64 / n) * pos(1.0 - p.c as f64 / n) * (-(p.d as f64) / n).exp()
}

/// Minimum of the abcd bound over all profiles with `b + c + d <= t`:
/// load `b`, then `c`, then `d`, each up to its saturation point.
pub fn abcd_min_bound(t: usize, n: usize) -> f64 {
    let b = t.min(n);
    let c = (t - b).min(n);
    let d = t - b - c;
    abcd_lower_bound(&ABCDProfile { a: 0, b, c, d }, n)
}

/// Refined profile: `b_i` distinct rare labels one player spends against
/// the other's i-th frequent label, and symmetrically `c_j`; `d_prime`
/// distinct wandering label pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetailedProfile {
    pub b_i: Vec<usize>,
    pub c_j: Vec<usize>,
    pub d_prime: usize,
}

/// `prod (1 - b_i/n) prod (1 - c_j/n) e^{-d'/n}`; requires every count
/// to be at most n.
pub fn detailed_failure(p: &DetailedProfile, n: usize) -> Result<f64, BoundsError> {
    if p.b_i.iter().chain(&p.c_j).any(|&v| v > n) {
        return Err(domain("distinct-label counts cannot exceed n"));
    }
    let nf = n as f64;
    let prod = |vs: &[usize]| vs.iter().map(|&v| 1.0 - v as f64 / nf).product::<f64>();
    Ok(prod(&p.b_i) * prod(&p.c_j) * (-(p.d_prime as f64) / nf).exp())
}

/// `max(0, e^{-T/n}(1 - T/2n))`: horizon bound for strategies whose wait
/// decisions are i.i.d. uniform; vacuous past T = 2n.
pub fn uniform_bound_general(t: usize, n: usize) -> f64 {
    let u = t as f64 / n as f64;
    ((-u).exp() * (1.0 - u / 2.0)).max(0.0)
}

/// `e^{-T/n} ((1 - T/4n)^+)^2`: stronger horizon bound when both players
/// wait on the same number of steps.
pub fn uniform_bound_equal_wait(t: usize, n: usize) -> f64 {
    let u = t as f64 / n as f64;
    let p = (1.0 - u / 4.0).max(0.0);
    (-u).exp() * p * p
}

/// Failure lower bound at horizon T = (4 - delta) n:
/// `e^{-4}/4096 * e^{delta/2} * delta^4`, valid for delta in [0, 4].
pub fn four_n_lower_bound(delta: f64) -> Result<f64, BoundsError> {
    if !(0.0..=4.0).contains(&delta) {
        return Err(domain(format!("delta = {delta} outside [0, 4]")));
    }
    Ok((-4.0f64).exp() / 4096.0 * (delta / 2.0).exp() * delta.powi(4))
}

/// Failure probability factor for two single-wait players whose waits end
/// at t1 and t2: `(1 - |t1-t2|/n) e^{(max(t1,t2) - T)/n}`.
pub fn two_wait_failure(t1: usize, t2: usize, t: usize, n: usize) -> Result<f64, BoundsError> {
    if t1 > t || t2 > t || t > n {
        return Err(domain(format!(
            "need t1, t2 <= T <= n, got ({t1}, {t2}, {t}, {n})"
        )));
    }
    let nf = n as f64;
    let gap = t1.abs_diff(t2) as f64;
    Ok((1.0 - gap / nf) * ((t1.max(t2) as f64 - t as f64) / nf).exp())
}
