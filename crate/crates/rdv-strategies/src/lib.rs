//! Strategy descriptors and samplers for the symmetric rendezvous game,
//! plus the closed-form Anderson-Weber failure formulas.
//!
//! A strategy is a distribution over walk schedules. Descriptors are
//! serializable values; `Sampler` compiles a descriptor once and then
//! draws schedules block by block.

mod formulas;
mod sample;

pub use formulas::{aw_failure_formula, aw_optimal_failure, optimal_failure_ratio, optimal_theta};
pub use sample::{sample_schedule, Sampler};

use rdv_core::WalkSchedule;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StrategyError {
    #[error("theta = {0} outside [0, 1]")]
    BadTheta(f64),
    #[error("horizon T = {t} outside the valid range (0, {max}]")]
    BadHorizon { t: usize, max: usize },
    #[error("strategy is defined on n = {expected} vertices, got n = {got}")]
    MismatchedN { expected: usize, got: usize },
    #[error("finite-support strategy is empty or malformed: {0}")]
    BadSupport(String),
    #[error("cannot parse strategy descriptor {0:?}")]
    Parse(String),
    #[error("{0}")]
    Code(#[from] rdv_codes::CodeError),
}

/// Which side of the asymmetric waiter/wanderer baseline a player takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Waiter,
    Wanderer,
}

/// A named distribution over walk schedules.
///
/// `rounds = 0` means unlimited repetition; a positive value caps the
/// number of randomized blocks, after which the player waits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Strategy {
    #[serde(rename = "aw")]
    AndersonWeber {
        theta: f64,
        #[serde(default)]
        rounds: usize,
    },
    Binary {
        d: u32,
    },
    Padded {
        n: usize,
    },
    #[serde(rename = "baseb")]
    BaseB {
        a: u32,
        b: u32,
        k: u32,
        #[serde(default)]
        shuffle_seed: Option<u64>,
    },
    Uniform,
    #[serde(rename = "finite")]
    FiniteSupport {
        schedules: Vec<WalkSchedule>,
        probabilities: Vec<f64>,
    },
    #[serde(rename = "wfm")]
    WaitForMommy {
        role: Role,
    },
}

impl Strategy {
    /// Vertex count the descriptor pins down, if any.
    pub fn implied_n(&self) -> Option<usize> {
        match self {
            Strategy::Binary { d } => Some(1usize << d),
            Strategy::Padded { n } => Some(*n),
            Strategy::BaseB { a, b, k, .. } => {
                Some((*b - *a) as usize * (*b as usize).pow(k.saturating_sub(1)))
            }
            Strategy::FiniteSupport { schedules, .. } => schedules.first().map(|s| s.n()),
            _ => None,
        }
    }

    /// True for the asymmetric baseline, which symmetric-game entry
    /// points must reject.
    pub fn is_asymmetric(&self) -> bool {
        matches!(self, Strategy::WaitForMommy { .. })
    }

    /// Parses either a JSON descriptor or the colon shorthand:
    /// `aw:0.2689`, `code:binary:d=2`, `code:padded:n=100`,
    /// `code:baseb:a=1:b=2:k=9[:shuffle=SEED]`, `uniform`, `wfm:waiter`.
    pub fn parse(text: &str) -> Result<Strategy, StrategyError> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| StrategyError::Parse(e.to_string()));
        }
        let parts: Vec<&str> = text.split(':').collect();
        let field = |key: &str| -> Option<&str> {
            parts
                .iter()
                .find_map(|p| p.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        };
        match parts.as_slice() {
            ["uniform"] => Ok(Strategy::Uniform),
            ["wfm", role] => match *role {
                "waiter" => Ok(Strategy::WaitForMommy { role: Role::Waiter }),
                "wanderer" => Ok(Strategy::WaitForMommy {
                    role: Role::Wanderer,
                }),
                _ => Err(StrategyError::Parse(text.into())),
            },
            ["aw", theta] => {
                let theta: f64 = theta
                    .parse()
                    .map_err(|_| StrategyError::Parse(text.into()))?;
                Ok(Strategy::AndersonWeber { theta, rounds: 0 })
            }
            ["aw", theta, rounds] => {
                let theta: f64 = theta
                    .parse()
                    .map_err(|_| StrategyError::Parse(text.into()))?;
                let rounds: usize = rounds
                    .strip_prefix("rounds=")
                    .unwrap_or(rounds)
                    .parse()
                    .map_err(|_| StrategyError::Parse(text.into()))?;
                Ok(Strategy::AndersonWeber { theta, rounds })
            }
            ["code", "binary", ..] => {
                let d = field("d")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| StrategyError::Parse(text.into()))?;
                Ok(Strategy::Binary { d })
            }
            ["code", "padded", ..] => {
                let n = field("n")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| StrategyError::Parse(text.into()))?;
                Ok(Strategy::Padded { n })
            }
            ["code", "baseb", ..] => {
                let get = |key| {
                    field(key)
                        .and_then(|v| v.parse().ok())
                        .ok_or_else(|| StrategyError::Parse(text.to_string()))
                };
                Ok(Strategy::BaseB {
                    a: get("a")?,
                    b: get("b")?,
                    k: get("k")?,
                    shuffle_seed: field("shuffle").and_then(|v| v.parse().ok()),
                })
            }
            _ => Err(StrategyError::Parse(text.into())),
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = StrategyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::parse(s)
    }
}
