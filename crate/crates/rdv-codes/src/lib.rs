//! Rendezvous codes: construction (binary, padded, base-B, concatenated)
//! and exhaustive verification of the rendezvous-code property.
//!
//! A rendezvous code is a set of equal-length walk schedules such that for
//! every ordered pair of distinct rows `(x, y)` there is a set of `n` steps
//! on which `x` takes every canonical label exactly once while `y` holds a
//! single label throughout.

mod build;
mod verify;

pub use build::{
    build_base_b_code, build_binary_code, build_padded_code, build_padded_code_with,
    concatenate_codes,
};
pub use verify::{verify_rendezvous_code, CodeWitness, PairCheck};

use rdv_core::WalkSchedule;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("d must be >= 1, got {0}")]
    BadBinaryParam(u32),
    #[error("padded code requires n >= 4, got {0}")]
    BadPaddedParam(usize),
    #[error("base-B code requires 0 < A < B and k >= 2, got A={a}, B={b}, k={k}")]
    BadBaseBParam { a: u32, b: u32, k: u32 },
    #[error("cannot concatenate codes with different vertex counts: {0} vs {1}")]
    MismatchedN(usize, usize),
    #[error("rows have inconsistent lengths or vertex counts")]
    RaggedRows,
    #[error("{0}")]
    Core(#[from] rdv_core::CoreError),
}

/// Construction descriptor carried alongside a code for provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CodeMeta {
    Binary { d: u32 },
    Padded { n: usize, d: u32, k: u32 },
    BaseB { a: u32, b: u32, k: u32, shuffle_seed: Option<u64> },
    Concat,
    Custom,
}

/// A finite set of equal-length walk schedules over `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CodeJson", into = "CodeJson")]
pub struct RendezvousCode {
    n: usize,
    t_len: usize,
    rows: Vec<WalkSchedule>,
    meta: CodeMeta,
}

impl RendezvousCode {
    pub fn from_rows(
        n: usize,
        rows: Vec<WalkSchedule>,
        meta: CodeMeta,
    ) -> Result<Self, CodeError> {
        let t_len = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != t_len || r.n() != n) {
            return Err(CodeError::RaggedRows);
        }
        Ok(RendezvousCode { n, t_len, rows, meta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Common schedule length T.
    pub fn t_len(&self) -> usize {
        self.t_len
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[WalkSchedule] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &WalkSchedule {
        &self.rows[i]
    }

    pub fn meta(&self) -> &CodeMeta {
        &self.meta
    }

    /// Number of waiting (label 0) steps in each row.
    pub fn waits_per_row(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.steps().iter().filter(|&&s| s == 0).count())
            .collect()
    }
}

/// JSON shape: {"n": .., "T": .., "rows": [[..]], "meta": {..}}
#[derive(Serialize, Deserialize)]
struct CodeJson {
    n: usize,
    #[serde(rename = "T")]
    t: usize,
    rows: Vec<Vec<u32>>,
    meta: CodeMeta,
}

impl TryFrom<CodeJson> for RendezvousCode {
    type Error = CodeError;
    fn try_from(j: CodeJson) -> Result<Self, CodeError> {
        let rows = j
            .rows
            .into_iter()
            .map(|steps| WalkSchedule::new(j.n, steps))
            .collect::<Result<Vec<_>, _>>()?;
        let code = RendezvousCode::from_rows(j.n, rows, j.meta)?;
        if code.t_len() != j.t && !code.rows.is_empty() {
            return Err(CodeError::RaggedRows);
        }
        Ok(code)
    }
}

impl From<RendezvousCode> for CodeJson {
    fn from(c: RendezvousCode) -> CodeJson {
        CodeJson {
            n: c.n,
            t: c.t_len,
            rows: c.rows.iter().map(|r| r.steps().to_vec()).collect(),
            meta: c.meta,
        }
    }
}
