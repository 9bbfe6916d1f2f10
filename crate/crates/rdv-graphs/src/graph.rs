use serde::{Deserialize, Serialize};

use crate::{domain, GraphError};

/// The vertex-transitive graph families the rendezvous strategies run on.
/// Vertices are 0-based: 0..n-1 around a cycle, bit vectors for the cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Graph {
    Cycle { n: usize },
    Circulant { n: usize, k: usize },
    Hypercube { dim: u32 },
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

impl Graph {
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(domain(format!("cycle needs n >= 3, got {n}")));
        }
        Ok(Graph::Cycle { n })
    }

    /// Cycle plus chords to everything within cyclic distance k. The
    /// velocity strategy needs nonzero chord sums invertible mod n, so n
    /// must be prime.
    pub fn circulant(n: usize, k: usize) -> Result<Graph, GraphError> {
        if !is_prime(n) {
            return Err(domain(format!("circulant needs prime n, got {n}")));
        }
        if k == 0 || k >= n / 2 {
            return Err(domain(format!("circulant needs 1 <= k < n/2, got k = {k}")));
        }
        Ok(Graph::Circulant { n, k })
    }

    pub fn hypercube(dim: u32) -> Result<Graph, GraphError> {
        if dim == 0 || dim > 30 {
            return Err(domain(format!("hypercube dim {dim} out of range")));
        }
        Ok(Graph::Hypercube { dim })
    }

    pub fn num_vertices(&self) -> usize {
        match self {
            Graph::Cycle { n } | Graph::Circulant { n, .. } => *n,
            Graph::Hypercube { dim } => 1usize << dim,
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        match self {
            Graph::Cycle { n } => cyclic_distance(u, v, *n) == 1,
            Graph::Circulant { n, k } => cyclic_distance(u, v, *n) <= *k,
            Graph::Hypercube { .. } => (u ^ v).count_ones() == 1,
        }
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        match self {
            Graph::Cycle { n } => vec![(u + 1) % n, (u + n - 1) % n],
            Graph::Circulant { n, k } => (1..=*k)
                .flat_map(|j| [(u + j) % n, (u + n - j) % n])
                .collect(),
            Graph::Hypercube { dim } => (0..*dim).map(|b| u ^ (1 << b)).collect(),
        }
    }

    /// Graph diameter; equals the eccentricity of any vertex by
    /// transitivity, computed by breadth-first search from 0.
    pub fn diameter(&self) -> usize {
        let dist = self.distances_from(0);
        dist.into_iter().max().unwrap_or(0)
    }

    /// BFS distances from a source vertex.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let n = self.num_vertices();
        let mut dist = vec![usize::MAX; n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Parses `cycle:N`, `circulant:N:K`, `hypercube:D`.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| domain(format!("bad number {s:?} in graph {text:?}")))
        };
        match parts.as_slice() {
            ["cycle", n] => Graph::cycle(num(n)?),
            ["circulant", n, k] => Graph::circulant(num(n)?, num(k)?),
            ["hypercube", d] => Graph::hypercube(num(d)? as u32),
            _ => Err(domain(format!("cannot parse graph descriptor {text:?}"))),
        }
    }
}

impl std::str::FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

pub(crate) fn cyclic_distance(u: usize, v: usize, n: usize) -> usize {
    let d = (u as isize - v as isize).rem_euclid(n as isize) as usize;
    d.min(n - d)
}
