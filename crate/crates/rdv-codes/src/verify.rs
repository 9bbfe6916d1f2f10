use rayon::prelude::*;
use rdv_core::WalkSchedule;

use crate::RendezvousCode;

/// Outcome of checking one ordered row pair (x, y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairCheck {
    /// `steps` are n 0-based step indices on which x covers every
    /// canonical label exactly once while y holds `waiting_label`.
    Witness {
        steps: Vec<usize>,
        waiting_label: usize,
    },
    /// No constant-waiting label of y is fully covered by x;
    /// `missing_label` is a canonical label of x never paired with the
    /// best waiting candidate.
    Violation { missing_label: usize },
    /// The two rows are identical as sequences.
    DuplicateRows,
}

impl PairCheck {
    pub fn is_witness(&self) -> bool {
        matches!(self, PairCheck::Witness { .. })
    }
}

/// Exhaustive verification result over all ordered distinct row pairs.
#[derive(Debug, Clone)]
pub struct CodeWitness {
    pairs: Vec<((usize, usize), PairCheck)>,
}

impl CodeWitness {
    pub fn is_valid(&self) -> bool {
        self.pairs.iter().all(|(_, c)| c.is_witness())
    }

    pub fn pairs(&self) -> &[((usize, usize), PairCheck)] {
        &self.pairs
    }

    pub fn first_violation(&self) -> Option<&((usize, usize), PairCheck)> {
        self.pairs.iter().find(|(_, c)| !c.is_witness())
    }
}

/// Checks the rendezvous-code property for every ordered pair of distinct
/// rows, exhaustively. Violations are reported as data, not errors.
pub fn verify_rendezvous_code(code: &RendezvousCode) -> CodeWitness {
    let size = code.size();
    let index_pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let pairs: Vec<((usize, usize), PairCheck)> = index_pairs
        .into_par_iter()
        .map(|(i, j)| ((i, j), check_pair(code.row(i), code.row(j), code.n())))
        .collect();
    CodeWitness { pairs }
}

fn check_pair(x: &WalkSchedule, y: &WalkSchedule, n: usize) -> PairCheck {
    if x.steps() == y.steps() {
        return PairCheck::DuplicateRows;
    }
    let t_len = x.len().min(y.len());

    // Canonical label frequencies of y; candidates are labels held on >= n
    // steps, scanned most frequent first.
    let mut counts = vec![0usize; n + 1];
    for t in 0..t_len {
        counts[y.canonical_step(t)] += 1;
    }
    let mut candidates: Vec<usize> = (1..=n).filter(|&l| counts[l] >= n).collect();
    candidates.sort_by_key(|&l| std::cmp::Reverse(counts[l]));

    let mut best_missing: Option<usize> = None;
    for &wait_label in &candidates {
        // First step (if any) at which y holds wait_label and x shows each
        // canonical label.
        let mut first_step = vec![usize::MAX; n + 1];
        for t in 0..t_len {
            if y.canonical_step(t) == wait_label {
                let xl = x.canonical_step(t);
                if first_step[xl] == usize::MAX {
                    first_step[xl] = t;
                }
            }
        }
        match (1..=n).find(|&l| first_step[l] == usize::MAX) {
            None => {
                let steps: Vec<usize> = (1..=n).map(|l| first_step[l]).collect();
                return PairCheck::Witness {
                    steps,
                    waiting_label: wait_label,
                };
            }
            Some(missing) => {
                if best_missing.is_none() {
                    best_missing = Some(missing);
                }
            }
        }
    }
    PairCheck::Violation {
        missing_label: best_missing.unwrap_or(1),
    }
}
