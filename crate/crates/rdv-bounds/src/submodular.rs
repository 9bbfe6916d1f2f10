use rand::Rng;

use crate::{domain, BoundsError};

/// A subset of the step set {1, ..., T}; bit i holds step i+1. Keeps the
/// enumeration suites allocation-free.
pub type StepSet = u64;

/// `f(X, Y) = (1 - b/n)(1 - c/n) e^{-d/n}` with b = |X̄ ∩ Y|,
/// c = |X ∩ Ȳ|, d = |X ∩ Y|, unclamped; requires T <= n, where the
/// expression stays a probability.
pub fn submodular_f(x: StepSet, y: StepSet, t: usize, n: usize) -> Result<f64, BoundsError> {
    if t > n {
        return Err(domain(format!("requires T <= n, got T = {t}, n = {n}")));
    }
    if t > 63 {
        return Err(domain("step sets limited to T <= 63".to_string()));
    }
    let mask: u64 = (1u64 << t) - 1;
    if x & !mask != 0 || y & !mask != 0 {
        return Err(domain("set contains steps beyond T".to_string()));
    }
    let nf = n as f64;
    let b = (!x & y & mask).count_ones() as f64;
    let c = (x & !y & mask).count_ones() as f64;
    let d = (x & y).count_ones() as f64;
    Ok((1.0 - b / nf) * (1.0 - c / nf) * (-d / nf).exp())
}

/// One draw from the chain distribution with the given marginals:
/// sample a uniform threshold and keep the elements at or above it.
pub fn lovasz_extension_sample(marginals: &[f64], rng: &mut impl Rng) -> StepSet {
    let lambda = rng.gen::<f64>();
    marginals
        .iter()
        .enumerate()
        .filter(|&(_, &p)| p >= lambda)
        .fold(0u64, |acc, (i, _)| acc | (1 << i))
}

/// The full chain distribution the sampler draws from: nested sets with
/// probabilities given by consecutive gaps between the sorted marginals.
pub fn lovasz_chain_distribution(marginals: &[f64]) -> Vec<(StepSet, f64)> {
    let mut levels: Vec<f64> = marginals.to_vec();
    levels.sort_by(|a, b| b.partial_cmp(a).unwrap());
    levels.dedup();
    let mut out = Vec::new();
    let top = levels.first().copied().unwrap_or(0.0);
    if top < 1.0 {
        out.push((0u64, 1.0 - top));
    }
    for (i, &v) in levels.iter().enumerate() {
        let next = levels.get(i + 1).copied().unwrap_or(0.0);
        let set = marginals
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p >= v)
            .fold(0u64, |acc, (j, _)| acc | (1 << j));
        let prob = v - next;
        if prob > 0.0 {
            out.push((set, prob));
        }
    }
    out
}
