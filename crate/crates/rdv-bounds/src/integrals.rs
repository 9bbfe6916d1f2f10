use rdv_strategies::optimal_failure_ratio;

const QUAD_TOL: f64 = 1e-9;

/// Adaptive Simpson quadrature with interval bisection to an absolute
/// tolerance.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, 50)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// Expected-time lower-bound constants for symmetric strategies, in units
/// of n: the integral of the minimized single-round failure over one time
/// unit, and the improved total adding the post-horizon triangle piece up
/// to (e+2)/(e+1).
pub fn expected_time_lower_bound() -> (f64, f64) {
    let first = adaptive_simpson(&optimal_failure_ratio, 0.0, 1.0, QUAD_TOL);
    let upper = (std::f64::consts::E + 2.0) / (std::f64::consts::E + 1.0);
    let second = adaptive_simpson(&|t| upper - t, 1.0, upper, QUAD_TOL);
    (first, first + second)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_on_known_integrals() {
        let sq = adaptive_simpson(&|x| x * x, 0.0, 1.0, 1e-12);
        assert!((sq - 1.0 / 3.0).abs() < 1e-12);
        let s = adaptive_simpson(&f64::sin, 0.0, std::f64::consts::PI, 1e-10);
        assert!((s - 2.0).abs() < 1e-9);
        let e = adaptive_simpson(&f64::exp, 0.0, 1.0, 1e-10);
        assert!((e - (std::f64::consts::E - 1.0)).abs() < 1e-9);
    }

    #[test]
    fn expected_time_constants() {
        let (first, total) = expected_time_lower_bound();
        assert!((first - 0.6027).abs() < 1e-4, "first = {first}");
        assert!((total - 0.6389).abs() < 1e-4, "total = {total}");
        // The added piece is the closed-form triangle 1/(2(e+1)^2).
        let e1 = std::f64::consts::E + 1.0;
        assert!((total - first - 0.5 / (e1 * e1)).abs() < 1e-8);
    }

    #[test]
    fn integrand_endpoint_behavior() {
        assert_eq!(optimal_failure_ratio(0.0), 1.0);
        let e = std::f64::consts::E;
        assert!((optimal_failure_ratio(1.0) - 1.0 / (1.0 + e)).abs() < 1e-12);
    }
}
