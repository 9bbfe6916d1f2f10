use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{
    alpern_cycle_schedule, circulant_velocity_schedule, default_hamiltonian_rows, domain, Graph,
    GraphError, GraphWalk, HamiltonianCodeStrategy,
};

/// The named walk strategies for the graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphStrategy {
    /// Random direction per half-cycle block (cycles only).
    Alpern,
    /// Constant random velocity (circulants only).
    Velocity,
    /// Code rows over the Hamiltonian order; `rows = None` picks the
    /// size heuristic.
    Hamiltonian { rows: Option<u32> },
}

impl GraphStrategy {
    /// Parses `alpern`, `velocity`, `hamiltonian`, `hamiltonian:k=5`.
    pub fn parse(text: &str) -> Result<GraphStrategy, GraphError> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        match parts.as_slice() {
            ["alpern"] => Ok(GraphStrategy::Alpern),
            ["velocity"] => Ok(GraphStrategy::Velocity),
            ["hamiltonian"] => Ok(GraphStrategy::Hamiltonian { rows: None }),
            ["hamiltonian", k] => {
                let rows = k
                    .strip_prefix("k=")
                    .unwrap_or(k)
                    .parse()
                    .map_err(|_| domain(format!("bad row count in {text:?}")))?;
                Ok(GraphStrategy::Hamiltonian { rows: Some(rows) })
            }
            _ => Err(domain(format!("cannot parse graph strategy {text:?}"))),
        }
    }
}

impl std::str::FromStr for GraphStrategy {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphStrategy::parse(s)
    }
}

/// A graph strategy compiled against a graph and horizon, ready to draw
/// walks.
#[derive(Debug, Clone)]
pub struct GraphSampler {
    graph: Graph,
    kind: SamplerKind,
}

#[derive(Debug, Clone)]
enum SamplerKind {
    Alpern { horizon: usize },
    Velocity { k: usize },
    Hamiltonian(HamiltonianCodeStrategy),
}

impl GraphSampler {
    pub fn new(
        graph: &Graph,
        strategy: &GraphStrategy,
        horizon: usize,
    ) -> Result<Self, GraphError> {
        let kind = match (strategy, graph) {
            (GraphStrategy::Alpern, Graph::Cycle { .. }) => SamplerKind::Alpern { horizon },
            (GraphStrategy::Velocity, Graph::Circulant { k, .. }) => {
                SamplerKind::Velocity { k: *k }
            }
            (GraphStrategy::Hamiltonian { rows }, _) => {
                let k = rows.unwrap_or_else(|| default_hamiltonian_rows(graph));
                SamplerKind::Hamiltonian(HamiltonianCodeStrategy::new(graph, k)?)
            }
            (s, g) => {
                return Err(domain(format!("strategy {s:?} does not run on {g:?}")));
            }
        };
        Ok(GraphSampler {
            graph: *graph,
            kind,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Length in moves of the walks this sampler draws.
    pub fn walk_len(&self) -> usize {
        match &self.kind {
            SamplerKind::Alpern { horizon } => *horizon,
            SamplerKind::Velocity { .. } => self.graph.num_vertices() - 1,
            SamplerKind::Hamiltonian(h) => h.walk_len(),
        }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> GraphWalk {
        match &self.kind {
            SamplerKind::Alpern { horizon } => {
                alpern_cycle_schedule(self.graph.num_vertices(), *horizon, rng)
                    .expect("validated at construction")
            }
            SamplerKind::Velocity { k } => {
                circulant_velocity_schedule(self.graph.num_vertices(), *k, rng)
                    .expect("validated at construction")
            }
            SamplerKind::Hamiltonian(h) => h.sample(rng),
        }
    }
}
