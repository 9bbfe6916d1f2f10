//! Ground-truth data model for the symmetric rendezvous game on the
//! complete graph: labels, walk schedules, permutations, rendezvous
//! times, and exact derangement counts.
//!
//! Vertices are labeled `1..=n`; label `0` is an alias for label `n`.
//! All types here are immutable values and safe to share across workers.

mod derange;
mod permutation;
mod schedule;
pub mod stats;

pub use derange::{count_derangements, derangement_ratio, factorial};
pub use permutation::{sample_uniform_permutation, Permutation};
pub use schedule::{canonical, Label, MeetingRecord, WalkSchedule};
pub use stats::Estimate;

/// Errors from the core data model.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("label {label} out of range for n = {n}")]
    LabelOutOfRange { label: u64, n: usize },
    #[error("vertex counts differ: {left} vs {right}")]
    MismatchedN { left: usize, right: usize },
    #[error("images of length {len} do not form a permutation of 1..={len}")]
    NotAPermutation { len: usize },
    #[error("{0}")]
    Domain(String),
}

/// Finds the first step `t` (1-based) at which `x_t = pi(y_t)`, comparing
/// canonical labels; `tau` is absent if no such step exists within the
/// shorter of the two schedules.
pub fn rendezvous_time(
    x: &WalkSchedule,
    y: &WalkSchedule,
    pi: &Permutation,
) -> Result<MeetingRecord, CoreError> {
    if x.n() != y.n() {
        return Err(CoreError::MismatchedN {
            left: x.n(),
            right: y.n(),
        });
    }
    if x.n() != pi.n() {
        return Err(CoreError::MismatchedN {
            left: x.n(),
            right: pi.n(),
        });
    }
    let horizon = x.len().min(y.len());
    for t in 0..horizon {
        if x.canonical_step(t) == pi.apply(y.canonical_step(t)) {
            return Ok(MeetingRecord::met_at(t + 1));
        }
    }
    Ok(MeetingRecord::not_met())
}
