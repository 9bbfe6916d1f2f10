use rand::Rng;
use rdv_codes::build_binary_code;

use crate::{domain, Graph, GraphError, GraphWalk};

/// Cycle walk that commits to a random direction for each half-cycle
/// block: as soon as the two players pick opposite directions they must
/// cross. `horizon` counts moves.
pub fn alpern_cycle_schedule(
    n: usize,
    horizon: usize,
    rng: &mut impl Rng,
) -> Result<GraphWalk, GraphError> {
    if n % 2 != 0 {
        return Err(domain(format!("needs even n, got {n}")));
    }
    let graph = Graph::cycle(n)?;
    let block = n / 2;
    let mut vertices = Vec::with_capacity(horizon + 1);
    let mut v = 0usize;
    let mut dir = 1usize;
    vertices.push(v);
    for t in 0..horizon {
        if t % block == 0 {
            dir = if rng.gen::<bool>() { 1 } else { n - 1 };
        }
        v = (v + dir) % n;
        vertices.push(v);
    }
    GraphWalk::new(graph, vertices)
}

/// Constant-velocity walk on the circulant: velocity j uniform in
/// {-k, ..., k}, position jt mod n at time t, for t < n. Players with
/// different effective velocities meet within n steps because n is prime.
pub fn circulant_velocity_schedule(
    n: usize,
    k: usize,
    rng: &mut impl Rng,
) -> Result<GraphWalk, GraphError> {
    let graph = Graph::circulant(n, k)?;
    let j = rng.gen_range(-(k as i64)..=k as i64);
    velocity_walk(graph, n, j)
}

fn velocity_walk(graph: Graph, n: usize, j: i64) -> Result<GraphWalk, GraphError> {
    let vertices = (0..n as i64)
        .map(|t| (j * t).rem_euclid(n as i64) as usize)
        .collect();
    GraphWalk::new(graph, vertices)
}

/// Exact failure probability of the velocity strategy by enumeration of
/// every (velocity, velocity, automorphism) triple.
pub fn exact_circulant_failure(n: usize, k: usize) -> Result<f64, GraphError> {
    let graph = Graph::circulant(n, k)?;
    let walks: Vec<GraphWalk> = (-(k as i64)..=k as i64)
        .map(|j| velocity_walk(graph, n, j))
        .collect::<Result<_, _>>()?;
    let mut failures = 0u64;
    let mut total = 0u64;
    for wx in &walks {
        for wy in &walks {
            for shift in 0..n {
                for flip in [false, true] {
                    let phi = crate::GraphAutomorphism::Dihedral { n, shift, flip };
                    total += 1;
                    if !crate::graph_rendezvous_time(wx, wy, &phi, false)?.met() {
                        failures += 1;
                    }
                }
            }
        }
    }
    Ok(failures as f64 / total as f64)
}

/// The code-over-a-Hamiltonian-cycle strategy: each player plays one of
/// the top `k` rows of the doubling code, mapped onto the graph's
/// Hamiltonian order, with `diameter` repositioning columns before each
/// of the 2^k time blocks. Total length 4n + 2^k * diameter moves.
#[derive(Debug, Clone)]
pub struct HamiltonianCodeStrategy {
    walks: Vec<GraphWalk>,
}

impl HamiltonianCodeStrategy {
    pub fn new(graph: &Graph, k: u32) -> Result<Self, GraphError> {
        let n = graph.num_vertices();
        if !n.is_power_of_two() {
            return Err(domain(format!(
                "the underlying code needs a power-of-two vertex count, got {n}"
            )));
        }
        let d = n.trailing_zeros();
        let code = build_binary_code(d).map_err(|e| domain(e.to_string()))?;
        if k == 0 || k as usize > code.size() {
            return Err(domain(format!(
                "k = {k} outside 1..={} code rows",
                code.size()
            )));
        }
        let ham = hamiltonian_order(graph);
        let delta = graph.diameter();
        let t_len = code.t_len();
        let block_len = t_len >> k;
        let wait_vertex = ham[n - 1];

        let mut walks = Vec::with_capacity(k as usize);
        for row in code.rows().iter().take(k as usize) {
            let mut vertices = Vec::with_capacity(1 + t_len + (delta << k));
            vertices.push(wait_vertex);
            for b in 0..(1usize << k) {
                let start = b * block_len;
                let target = ham[row.canonical_step(start) - 1];
                extend_toward(graph, &mut vertices, target, delta);
                for t in start..start + block_len {
                    vertices.push(ham[row.canonical_step(t) - 1]);
                }
            }
            walks.push(GraphWalk::new(*graph, vertices)?);
        }
        Ok(HamiltonianCodeStrategy { walks })
    }

    pub fn rows(&self) -> &[GraphWalk] {
        &self.walks
    }

    pub fn walk_len(&self) -> usize {
        self.walks[0].len()
    }

    pub fn sample(&self, rng: &mut impl Rng) -> GraphWalk {
        self.walks[rng.gen_range(0..self.walks.len())].clone()
    }
}

/// One draw from the Hamiltonian code strategy.
pub fn hamiltonian_code_schedule(
    graph: &Graph,
    k: u32,
    rng: &mut impl Rng,
) -> Result<GraphWalk, GraphError> {
    Ok(HamiltonianCodeStrategy::new(graph, k)?.sample(rng))
}

/// Row-count heuristic `k = round((1/2) log2(n / diameter))`.
pub fn default_hamiltonian_rows(graph: &Graph) -> u32 {
    let n = graph.num_vertices() as f64;
    let delta = graph.diameter().max(1) as f64;
    (0.5 * (n / delta).log2()).round().max(1.0) as u32
}

fn hamiltonian_order(graph: &Graph) -> Vec<usize> {
    let n = graph.num_vertices();
    match graph {
        // Reflected Gray code: consecutive entries differ in one bit.
        Graph::Hypercube { .. } => (0..n).map(|i| i ^ (i >> 1)).collect(),
        _ => (0..n).collect(),
    }
}

/// Appends exactly `budget` moves: a shortest path from the current walk
/// end to `target` (ties broken by smallest vertex), padded with stays.
fn extend_toward(graph: &Graph, vertices: &mut Vec<usize>, target: usize, budget: usize) {
    let dist = graph.distances_from(target);
    let mut current = *vertices.last().expect("walk is nonempty");
    assert!(dist[current] <= budget, "diameter budget must suffice");
    for _ in 0..budget {
        if current != target {
            current = graph
                .neighbors(current)
                .into_iter()
                .filter(|&v| dist[v] == dist[current] - 1)
                .min()
                .expect("some neighbor is closer");
        }
        vertices.push(current);
    }
}

/// Closed walk doubling every edge of a randomized depth-first spanning
/// tree: 2(n-1) moves visiting every vertex and returning to the start.
pub fn spanning_tree_schedule(graph: &Graph, rng: &mut impl Rng) -> Result<GraphWalk, GraphError> {
    use rand::seq::SliceRandom;
    let n = graph.num_vertices();
    let mut visited = vec![false; n];
    let mut vertices = vec![0usize];
    // Explicit stack of (vertex, remaining shuffled neighbors).
    let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
    let shuffled = |u: usize, rng: &mut dyn rand::RngCore| {
        let mut nb = graph.neighbors(u);
        nb.shuffle(rng);
        nb
    };
    visited[0] = true;
    stack.push((0, shuffled(0, rng)));
    while let Some((_, pending)) = stack.last_mut() {
        match pending.pop() {
            Some(v) if !visited[v] => {
                visited[v] = true;
                vertices.push(v);
                stack.push((v, shuffled(v, rng)));
            }
            Some(_) => {}
            None => {
                stack.pop();
                if let Some(&(parent, _)) = stack.last() {
                    vertices.push(parent);
                }
            }
        }
    }
    GraphWalk::new(*graph, vertices)
}

/// Projects a cycle walk to the 6-cycle by sampling every m = n/6 steps
/// and mapping each vertex to its sector. The triangle inequality keeps
/// the image a valid walk.
pub fn strobe_map(walk: &GraphWalk, m: usize) -> Result<GraphWalk, GraphError> {
    let n = match walk.graph() {
        Graph::Cycle { n } => *n,
        g => return Err(domain(format!("strobe map needs a cycle, got {g:?}"))),
    };
    if n % 6 != 0 || m != n / 6 {
        return Err(domain(format!("needs m = n/6 with 6 | n, got n={n}, m={m}")));
    }
    if walk.len() % m != 0 {
        return Err(domain(format!(
            "walk length {} not divisible by m = {m}",
            walk.len()
        )));
    }
    let vertices = (0..=walk.len() / m)
        .map(|i| walk.vertices()[i * m] / m)
        .collect();
    GraphWalk::new(Graph::Cycle { n: 6 }, vertices)
}

/// Cycle failure lower bound `(1/2) 3^{-6T/n}` for any symmetric
/// strategy; T counts moves.
pub fn cycle_lower_bound(t: usize, n: usize) -> Result<f64, GraphError> {
    if n % 6 != 0 {
        return Err(domain(format!("needs 6 | n, got {n}")));
    }
    Ok(0.5 * 3f64.powf(-6.0 * t as f64 / n as f64))
}
