//! Seeded, reproducible Monte Carlo engine for rendezvous failure
//! probabilities and expected meeting times.
//!
//! Every trial derives its own rng streams from (master seed, trial
//! index, stream tag), and aggregation uses integer accumulators, so a
//! run is bit-for-bit deterministic no matter how many workers execute
//! it.

mod engine;
mod seeds;

pub use engine::{
    estimate_expected_time, estimate_failure, sweep, ExpectedTime, SweepAxis, SweepPoint,
    EXPECTED_TIME_CAP_FACTOR,
};
pub use seeds::{stream_key, stream_rng, Stream};

pub use rdv_core::stats::{mean_estimate, proportion_estimate, wilson_interval};
pub use rdv_core::Estimate;

use rdv_graphs::{Graph, GraphStrategy};
use rdv_strategies::Strategy;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("bad simulation config: {0}")]
    Config(String),
    #[error("{0}")]
    Strategy(#[from] rdv_strategies::StrategyError),
    #[error("{0}")]
    Graph(#[from] rdv_graphs::GraphError),
    #[error("{0}")]
    Core(#[from] rdv_core::CoreError),
}

pub(crate) fn config_err(msg: impl Into<String>) -> SimError {
    SimError::Config(msg.into())
}

/// Where the game is played and what the players do there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "setting", rename_all = "lowercase")]
pub enum Setting {
    /// Complete graph on n labels. `strategy2` lets an asymmetric pair
    /// (e.g. waiter vs wanderer) play; when absent both players draw
    /// from `strategy`.
    Complete {
        strategy: Strategy,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        strategy2: Option<Strategy>,
    },
    /// A named graph family with a graph walk strategy; the adversary
    /// picks a uniform graph automorphism. `edge_meeting` also counts
    /// players crossing on an edge.
    Graph {
        graph: Graph,
        strategy: GraphStrategy,
        #[serde(default)]
        edge_meeting: bool,
    },
}

/// One simulation run: n vertices, horizon T steps, trial count, and a
/// master seed from which all randomness is derived.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub n: usize,
    pub t: usize,
    pub trials: u64,
    pub seed: u64,
    #[serde(flatten)]
    pub setting: Setting,
}

impl SimConfig {
    /// Symmetric complete-graph run.
    pub fn symmetric(n: usize, t: usize, trials: u64, seed: u64, strategy: Strategy) -> SimConfig {
        SimConfig {
            n,
            t,
            trials,
            seed,
            setting: Setting::Complete {
                strategy,
                strategy2: None,
            },
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if self.trials == 0 {
            return Err(config_err("trials must be at least 1"));
        }
        if self.t == 0 {
            return Err(config_err("horizon T must be at least 1"));
        }
        if self.n < 2 {
            return Err(config_err("need at least 2 vertices"));
        }
        match &self.setting {
            Setting::Complete {
                strategy,
                strategy2,
            } => {
                if strategy.is_asymmetric() && strategy2.is_none() {
                    return Err(config_err(
                        "an asymmetric strategy needs an explicit partner strategy",
                    ));
                }
            }
            Setting::Graph { graph, .. } => {
                if graph.num_vertices() != self.n {
                    return Err(config_err(format!(
                        "graph has {} vertices but config says n = {}",
                        graph.num_vertices(),
                        self.n
                    )));
                }
            }
        }
        Ok(())
    }
}
