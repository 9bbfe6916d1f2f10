//! Sampler consistency against the closed forms and the asymmetric
//! baseline, via direct seeded simulation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rdv_core::{rendezvous_time, sample_uniform_permutation};
use rdv_strategies::{aw_failure_formula, optimal_theta, Role, Sampler, Strategy};

#[test]
fn one_round_failure_tracks_the_closed_form() {
    let n = 1000;
    let theta = optimal_theta(n, n).unwrap();
    let strategy = Strategy::AndersonWeber { theta, rounds: 1 };
    let sampler = Sampler::new(&strategy, n).unwrap();
    let trials = 100_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_001);
    let mut failures = 0u64;
    for _ in 0..trials {
        let x = sampler.sample(n, &mut rng);
        let y = sampler.sample(n, &mut rng);
        let pi = sample_uniform_permutation(n, &mut rng);
        if !rendezvous_time(&x, &y, &pi).unwrap().met() {
            failures += 1;
        }
    }
    let measured = failures as f64 / trials as f64;
    let predicted = aw_failure_formula(n, n, theta).unwrap();
    let se = (predicted * (1.0 - predicted) / trials as f64).sqrt();
    // Closed form is asymptotic; allow 4 standard errors plus a 1/n band.
    assert!(
        (measured - predicted).abs() < 4.0 * se + 0.01,
        "measured {measured}, predicted {predicted}"
    );
}

#[test]
fn waiter_wanderer_pair_meets_by_n_with_mean_half() {
    let n = 500;
    let waiter = Sampler::new(&Strategy::WaitForMommy { role: Role::Waiter }, n).unwrap();
    let wanderer = Sampler::new(
        &Strategy::WaitForMommy {
            role: Role::Wanderer,
        },
        n,
    )
    .unwrap();
    let trials = 100_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut sum = 0u64;
    for _ in 0..trials {
        let x = waiter.sample(n, &mut rng);
        let y = wanderer.sample(n, &mut rng);
        let pi = sample_uniform_permutation(n, &mut rng);
        let tau = rendezvous_time(&x, &y, &pi)
            .unwrap()
            .tau()
            .expect("the pair always meets within n steps");
        sum += tau as u64;
    }
    let mean = sum as f64 / trials as f64;
    let expected = (n as f64 + 1.0) / 2.0;
    assert!(
        (mean - expected).abs() < 0.01 * expected,
        "mean {mean}, expected {expected}"
    );
}
