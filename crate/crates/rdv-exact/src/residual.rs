use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rdv_core::stats::proportion_estimate;
use rdv_core::{sample_uniform_permutation, Estimate, WalkSchedule};

use crate::ExactError;

/// The 0/1 occupancy matrix from the "Reduce The Permanent" game, stored
/// as its zero set. Entry `(x, y)` is zeroed when the players have jointly
/// played row label `x` against column label `y` (0-indexed canonical).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualMatrix {
    m: usize,
    zeroes: BTreeSet<(usize, usize)>,
}

impl ResidualMatrix {
    pub fn new(m: usize, zeroes: BTreeSet<(usize, usize)>) -> Result<Self, ExactError> {
        if let Some(&(r, c)) = zeroes.iter().find(|&&(r, c)| r >= m || c >= m) {
            return Err(ExactError::IndexOutOfRange { row: r, col: c, m });
        }
        Ok(ResidualMatrix { m, zeroes })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn zeroes(&self) -> &BTreeSet<(usize, usize)> {
        &self.zeroes
    }

    pub fn num_zeroes(&self) -> usize {
        self.zeroes.len()
    }

    /// Max zero count over any single row or column.
    pub fn kappa(&self) -> usize {
        let mut per_row = vec![0usize; self.m];
        let mut per_col = vec![0usize; self.m];
        for &(r, c) in &self.zeroes {
            per_row[r] += 1;
            per_col[c] += 1;
        }
        per_row
            .into_iter()
            .chain(per_col)
            .max()
            .unwrap_or(0)
    }
}

/// Residual matrix of a schedule pair after `t_horizon` joint steps:
/// `Z = {(canonical(x_t), canonical(y_t)) : 1 <= t <= T}`, 0-indexed.
pub fn residual_matrix(
    x: &WalkSchedule,
    y: &WalkSchedule,
    t_horizon: usize,
) -> Result<ResidualMatrix, ExactError> {
    if x.n() != y.n() {
        return Err(rdv_core::CoreError::MismatchedN {
            left: x.n(),
            right: y.n(),
        }
        .into());
    }
    if t_horizon > x.len() || t_horizon > y.len() {
        return Err(ExactError::HorizonOutOfRange {
            t: t_horizon,
            len: x.len().min(y.len()),
        });
    }
    let mut zeroes = BTreeSet::new();
    for t in 0..t_horizon {
        zeroes.insert((x.canonical_step(t) - 1, y.canonical_step(t) - 1));
    }
    ResidualMatrix::new(x.n(), zeroes)
}

/// Monte Carlo surrogate for `Perm(M)/m!` at large `m`: the fraction of
/// uniform permutations avoiding every zeroed cell, with a 95% Wilson
/// interval. Deterministic given the seed, independent of thread count.
pub fn avoidance_probability_estimate(
    matrix: &ResidualMatrix,
    samples: u64,
    seed: u64,
) -> Estimate {
    let m = matrix.m();
    // Forbidden rows per column for O(m + |Z|) checks.
    let mut forbidden: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(r, c) in matrix.zeroes() {
        forbidden[c].push(r);
    }

    let avoided: u64 = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i.wrapping_mul(0x9E3779B97F4A7C15)));
            let pi = sample_uniform_permutation(m, &mut rng);
            let ok = forbidden.iter().enumerate().all(|(col, rows)| {
                let image = pi.apply(col + 1) - 1;
                !rows.contains(&image)
            });
            u64::from(ok)
        })
        .sum();
    proportion_estimate(avoided, samples, seed)
}
