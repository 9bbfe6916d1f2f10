use rdv_core::WalkSchedule;

/// Flags each of the first `t` steps as waiting (true) or wandering
/// (false): a step is waiting iff its canonical label occurs more than
/// n^{2/3} times within the first `t` steps.
pub fn classify_steps(x: &WalkSchedule, t: usize) -> Vec<bool> {
    let t = t.min(x.len());
    let n = x.n();
    let mut counts = vec![0usize; n + 1];
    for i in 0..t {
        counts[x.canonical_step(i)] += 1;
    }
    let threshold = (n as f64).powf(2.0 / 3.0);
    (0..t)
        .map(|i| counts[x.canonical_step(i)] as f64 > threshold)
        .collect()
}
