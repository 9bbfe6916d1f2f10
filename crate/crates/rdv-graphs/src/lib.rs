//! Rendezvous on vertex-transitive graphs: cycles, circulants, and
//! hypercubes, with automorphism sampling, the cycle and velocity
//! strategies, a code-over-Hamiltonian-cycle strategy, and the sector
//! projection behind the cycle lower bound.

mod auto;
mod graph;
mod gstrategy;
mod strategies;
mod walk;

pub use auto::{sample_automorphism, GraphAutomorphism};
pub use graph::Graph;
pub use gstrategy::{GraphSampler, GraphStrategy};
pub use strategies::{
    alpern_cycle_schedule, circulant_velocity_schedule, cycle_lower_bound,
    default_hamiltonian_rows, exact_circulant_failure, hamiltonian_code_schedule,
    spanning_tree_schedule, strobe_map, HamiltonianCodeStrategy,
};
pub use walk::{graph_rendezvous_time, GraphWalk};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Core(#[from] rdv_core::CoreError),
}

pub(crate) fn domain(msg: impl Into<String>) -> GraphError {
    GraphError::Domain(msg.into())
}
