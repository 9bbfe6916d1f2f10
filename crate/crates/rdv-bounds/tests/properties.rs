//! Enumerated property suites for the submodularity machinery and the
//! consistency of the closed-form bounds against the exact engine.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rdv_bounds::{
    abcd_lower_bound, lovasz_chain_distribution, pair_profile, submodular_f, two_wait_failure,
    StepSet,
};
use rdv_codes::build_padded_code;
use rdv_core::WalkSchedule;
use rdv_exact::exact_pair_failure;

const TOL: f64 = 1e-12;

#[test]
fn f_is_submodular_in_each_argument() {
    let t = 8;
    let n = 10;
    let mask: u64 = (1 << t) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let f = |x, y| submodular_f(x, y, t, n).unwrap();
    for _ in 0..500 {
        let x: StepSet = rng.gen::<u64>() & mask;
        let xp: StepSet = rng.gen::<u64>() & mask;
        let y: StepSet = rng.gen::<u64>() & mask;
        assert!(f(x & xp, y) + f(x | xp, y) <= f(x, y) + f(xp, y) + TOL);
        assert!(f(y, x & xp) + f(y, x | xp) <= f(y, x) + f(y, xp) + TOL);
    }
}

/// Expected f over an independent pair of draws from one distribution,
/// by full enumeration of the support.
fn product_expectation(dist: &[(StepSet, f64)], t: usize, n: usize) -> f64 {
    let mut total = 0.0;
    for &(x, px) in dist {
        for &(y, py) in dist {
            total += px * py * submodular_f(x, y, t, n).unwrap();
        }
    }
    total
}

#[test]
fn chain_distribution_minimizes_the_product_expectation() {
    let t = 5;
    let n = 8;
    let mask: u64 = (1 << t) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        // A random finite-support distribution over subsets.
        let support: Vec<StepSet> = (0..4).map(|_| rng.gen::<u64>() & mask).collect();
        let raw: Vec<f64> = (0..4).map(|_| rng.gen::<f64>() + 0.01).collect();
        let z: f64 = raw.iter().sum();
        let phi: Vec<(StepSet, f64)> = support
            .iter()
            .zip(&raw)
            .map(|(&s, &w)| (s, w / z))
            .collect();
        // Its marginals, and the chain distribution with the same ones.
        let mut marginals = vec![0.0; t];
        for &(s, p) in &phi {
            for (i, m) in marginals.iter_mut().enumerate() {
                if s & (1 << i) != 0 {
                    *m += p;
                }
            }
        }
        let psi = lovasz_chain_distribution(&marginals);
        let total: f64 = psi.iter().map(|&(_, p)| p).sum();
        assert!((total - 1.0).abs() < TOL);
        assert!(
            product_expectation(&psi, t, n) <= product_expectation(&phi, t, n) + TOL,
            "marginals {marginals:?}"
        );
    }
}

#[test]
fn extreme_two_point_distributions_minimize_two_wait_failure() {
    let t = 20;
    let n = 20;
    let g = |t1: usize, t2: usize| two_wait_failure(t1, t2, t, n).unwrap();
    let expectation = |p: &[f64]| -> f64 {
        let mut total = 0.0;
        for (t1, &p1) in p.iter().enumerate() {
            for (t2, &p2) in p.iter().enumerate() {
                total += p1 * p2 * g(t1, t2);
            }
        }
        total
    };
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let raw: Vec<f64> = (0..=t).map(|_| rng.gen::<f64>()).collect();
        let z: f64 = raw.iter().sum();
        let p: Vec<f64> = raw.iter().map(|w| w / z).collect();
        let mean: f64 = p.iter().enumerate().map(|(v, &q)| v as f64 * q).sum();
        // Mean-preserving two-point distribution on {0, T}.
        let mut extreme = vec![0.0; t + 1];
        extreme[t] = mean / t as f64;
        extreme[0] = 1.0 - extreme[t];
        assert!(expectation(&extreme) <= expectation(&p) + TOL);
    }
}

#[test]
fn two_wait_failure_is_concave_in_each_argument() {
    let t = 50;
    let n = 50;
    let g = |t1: usize, t2: usize| two_wait_failure(t1, t2, t, n).unwrap();
    for t1 in 0..=t {
        for t2 in 1..t {
            let dd = g(t1, t2 - 1) + g(t1, t2 + 1) - 2.0 * g(t1, t2);
            assert!(dd <= TOL, "second arg at ({t1}, {t2}): {dd}");
            let dd = g(t2 - 1, t1) + g(t2 + 1, t1) - 2.0 * g(t2, t1);
            assert!(dd <= TOL, "first arg at ({t2}, {t1}): {dd}");
        }
    }
}

#[test]
fn abcd_bound_stays_below_exact_failure_with_slack() {
    // The bound drops its vanishing correction, so a fixed slack absorbs
    // the finite-n gap at n = 12.
    let slack = 0.15;
    let n = 12;
    let code = build_padded_code(n).unwrap();
    for x in code.rows() {
        for y in code.rows() {
            for t in (0..=code.t_len()).step_by(8) {
                let bound = abcd_lower_bound(&pair_profile(x, y, t), n);
                let exact = exact_pair_failure(x, y, t).unwrap().to_f64();
                assert!(bound <= exact + slack, "t = {t}: {bound} vs {exact}");
            }
        }
    }
    // Same check on uniformly random wandering pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..50 {
        let steps = |rng: &mut ChaCha8Rng| -> WalkSchedule {
            WalkSchedule::new(n, (0..n).map(|_| rng.gen_range(1..=n as u32)).collect()).unwrap()
        };
        let x = steps(&mut rng);
        let y = steps(&mut rng);
        let t = rng.gen_range(0..=n);
        let bound = abcd_lower_bound(&pair_profile(&x, &y, t), n);
        let exact = exact_pair_failure(&x, &y, t).unwrap().to_f64();
        assert!(bound <= exact + slack, "t = {t}: {bound} vs {exact}");
    }
}
