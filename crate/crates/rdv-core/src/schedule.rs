use serde::{Deserialize, Serialize};

use crate::CoreError;

/// A vertex label in `{0, 1, ..., n}`; `0` is notation for label `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Label(pub u32);

impl Label {
    /// Canonical form: `0` maps to `n`, everything else is unchanged.
    pub fn canonical(self, n: usize) -> Result<Label, CoreError> {
        if self.0 as usize > n {
            return Err(CoreError::LabelOutOfRange {
                label: self.0 as u64,
                n,
            });
        }
        Ok(if self.0 == 0 { Label(n as u32) } else { self })
    }
}

/// Canonicalizes a raw label value, resolving the `0 = n` alias.
pub fn canonical(label: Label, n: usize) -> Result<Label, CoreError> {
    label.canonical(n)
}

/// A finite sequence of labels a player visits step by step.
///
/// Steps are 1-indexed in the game; internally stored 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WalkSchedule {
    n: usize,
    steps: Vec<u32>,
}

impl WalkSchedule {
    pub fn new(n: usize, steps: Vec<u32>) -> Result<Self, CoreError> {
        if let Some(&bad) = steps.iter().find(|&&s| s as usize > n) {
            return Err(CoreError::LabelOutOfRange {
                label: bad as u64,
                n,
            });
        }
        Ok(WalkSchedule { n, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Raw (possibly 0-aliased) label at 0-based index `t`.
    pub fn step(&self, t: usize) -> u32 {
        self.steps[t]
    }

    /// Canonical label at 0-based index `t`, as a 1-based vertex in `1..=n`.
    pub fn canonical_step(&self, t: usize) -> usize {
        let s = self.steps[t] as usize;
        if s == 0 {
            self.n
        } else {
            s
        }
    }

    pub fn steps(&self) -> &[u32] {
        &self.steps
    }

    /// First `t` steps as a new schedule.
    pub fn truncated(&self, t: usize) -> WalkSchedule {
        WalkSchedule {
            n: self.n,
            steps: self.steps[..t.min(self.steps.len())].to_vec(),
        }
    }
}

/// Outcome of one play of the rendezvous game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetingRecord {
    tau: Option<usize>,
}

impl MeetingRecord {
    pub fn met_at(tau: usize) -> Self {
        MeetingRecord { tau: Some(tau) }
    }

    pub fn not_met() -> Self {
        MeetingRecord { tau: None }
    }

    pub fn met(&self) -> bool {
        self.tau.is_some()
    }

    /// 1-based step of the first meeting, if any.
    pub fn tau(&self) -> Option<usize> {
        self.tau
    }
}
