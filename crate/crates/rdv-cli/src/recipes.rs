//! Prebuilt experiments with built-in pass/fail checks.

use rdv_bounds::expected_time_lower_bound;
use rdv_sim::{estimate_expected_time, sweep, SimConfig, SweepAxis};
use rdv_strategies::{aw_optimal_failure, optimal_theta, Strategy};
use serde_json::json;

use crate::output::{csv_artifact, fmt_f64, json_artifact};

pub const RECIPES: &[&str] = &["phase-transition", "aw-constants"];

pub struct RecipeOutcome {
    pub artifact: String,
    pub pass: bool,
}

pub fn run(name: &str, seed: u64) -> Result<RecipeOutcome, String> {
    match name {
        "phase-transition" => phase_transition(seed),
        "aw-constants" => aw_constants(seed),
        _ => Err(format!(
            "unknown recipe {name:?}; available: {}",
            RECIPES.join(", ")
        )),
    }
}

/// Failure of the doubling code on n = 256 across T/n in {0.5, 1, ..., 4}.
/// Passes iff the T = 4n point is at most 1/rows + 4 sigma.
fn phase_transition(seed: u64) -> Result<RecipeOutcome, String> {
    let n = 256usize;
    let rows_in_code = 10.0; // d + 2 for d = 8
    let template = SimConfig::symmetric(n, 1, 20_000, seed, Strategy::Binary { d: 8 });
    let grid: Vec<usize> = (1..=8).map(|i| i * n / 2).collect();
    let points =
        sweep(&template, &SweepAxis::Horizon(grid.clone())).map_err(|e| e.to_string())?;

    let last = points.last().expect("grid is nonempty");
    let threshold = 1.0 / rows_in_code + 4.0 * last.estimate.proportion_se();
    let pass = last.estimate.point <= threshold;

    let config = json!({
        "recipe": "phase-transition",
        "template": template,
        "grid_T": grid,
    });
    let rows: Vec<String> = points
        .iter()
        .map(|p| {
            let e = &p.estimate;
            format!(
                "T,{},{},{},{},{},{}",
                fmt_f64(p.param),
                fmt_f64(e.point),
                fmt_f64(e.ci_low),
                fmt_f64(e.ci_high),
                e.trials,
                e.seed
            )
        })
        .collect();
    let mut artifact = csv_artifact(
        &config,
        Some(seed),
        "param,point,ci_low,ci_high,trials,seed",
        &rows,
    );
    artifact.push_str(&format!(
        "# check: failure(T=4n) = {} <= {} -> {}\n",
        fmt_f64(last.estimate.point),
        fmt_f64(threshold),
        if pass { "pass" } else { "fail" }
    ));
    Ok(RecipeOutcome { artifact, pass })
}

/// The headline closed-form and simulated constants of the wait/wander
/// strategy: theta* and the optimal one-round failure (both 1/(1+e)),
/// the two expected-time quadrature constants, and E[tau]/n near 0.829
/// for repeated rounds at theta = 0.249.
fn aw_constants(seed: u64) -> Result<RecipeOutcome, String> {
    let e = std::f64::consts::E;
    let theta = optimal_theta(1000, 1000).map_err(|x| x.to_string())?;
    let failure = aw_optimal_failure(1000, 1000).map_err(|x| x.to_string())?;
    let (partial_integral, full_bound) = expected_time_lower_bound();

    let n = 2000usize;
    let cfg = SimConfig::symmetric(
        n,
        n,
        20_000,
        seed,
        Strategy::AndersonWeber {
            theta: 0.249,
            rounds: 0,
        },
    );
    let et = estimate_expected_time(&cfg).map_err(|x| x.to_string())?;
    let ratio = et.estimate.point / n as f64;

    let checks = [
        ("optimal_theta", theta, 1.0 / (1.0 + e), 1e-9),
        ("optimal_failure", failure, 1.0 / (1.0 + e), 1e-9),
        ("quadrature_partial", partial_integral, 0.6027, 1e-4),
        ("quadrature_full", full_bound, 0.6389, 1e-4),
        ("repeated_mean_time_ratio", ratio, 0.829, 0.02),
    ];
    let results: Vec<_> = checks
        .iter()
        .map(|(name, got, want, tol)| {
            json!({
                "check": name,
                "measured": got,
                "expected": want,
                "tolerance": tol,
                "pass": (got - want).abs() <= *tol,
            })
        })
        .collect();
    let pass = checks
        .iter()
        .all(|(_, got, want, tol)| (got - want).abs() <= *tol);

    let artifact = json_artifact(
        json!({ "recipe": "aw-constants", "sim": cfg }),
        Some(seed),
        json!({ "checks": results, "censored": et.censored, "pass": pass }),
    );
    Ok(RecipeOutcome { artifact, pass })
}
