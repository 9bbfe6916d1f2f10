use rdv_core::MeetingRecord;

use crate::{domain, Graph, GraphAutomorphism, GraphError};

/// A stay-or-move walk: a vertex sequence where each consecutive pair is
/// equal or adjacent. A walk of T moves has T + 1 positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphWalk {
    graph: Graph,
    vertices: Vec<usize>,
}

impl GraphWalk {
    pub fn new(graph: Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(domain("a walk needs at least a starting vertex"));
        }
        let n = graph.num_vertices();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(domain(format!("vertex {v} out of range for {graph:?}")));
        }
        if let Some(w) = vertices
            .windows(2)
            .find(|w| w[0] != w[1] && !graph.adjacent(w[0], w[1]))
        {
            return Err(domain(format!("illegal move {} -> {}", w[0], w[1])));
        }
        Ok(GraphWalk { graph, vertices })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of moves, one less than the number of positions.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// First meeting time of two walks, with the second player's frame mapped
/// through `phi`. Position i counts as step i + 1, so walks starting on
/// the same vertex meet at step 1. With `edge_meeting`, passing each
/// other across a single edge also counts.
pub fn graph_rendezvous_time(
    wx: &GraphWalk,
    wy: &GraphWalk,
    phi: &GraphAutomorphism,
    edge_meeting: bool,
) -> Result<MeetingRecord, GraphError> {
    if wx.graph() != wy.graph() {
        return Err(domain(format!(
            "walks live on different graphs: {:?} vs {:?}",
            wx.graph(),
            wy.graph()
        )));
    }
    let graph = wx.graph();
    let steps = wx.vertices().len().min(wy.vertices().len());
    let mut prev: Option<(usize, usize)> = None;
    for t in 0..steps {
        let a = wx.vertices()[t];
        let b = phi.apply(wy.vertices()[t]);
        if a == b {
            return Ok(MeetingRecord::met_at(t + 1));
        }
        if edge_meeting {
            if let Some((pa, pb)) = prev {
                if a == pb && b == pa && graph.adjacent(pa, a) {
                    return Ok(MeetingRecord::met_at(t + 1));
                }
            }
        }
        prev = Some((a, b));
    }
    Ok(MeetingRecord::not_met())
}
