//! Behavior of the graph strategies: exact enumeration oracles, Monte
//! Carlo agreement, walk-shape invariants, and the sector projection.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rdv_graphs::{
    alpern_cycle_schedule, circulant_velocity_schedule, cycle_lower_bound,
    default_hamiltonian_rows, exact_circulant_failure, graph_rendezvous_time,
    sample_automorphism, spanning_tree_schedule, strobe_map, Graph, GraphAutomorphism, GraphWalk,
    HamiltonianCodeStrategy,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn alpern_same_direction_pair_never_meets() {
    let n = 20;
    let mut r = rng(1);
    let w = alpern_cycle_schedule(n, 5 * n, &mut r).unwrap();
    // A rotated copy has identical moves; the distance never changes.
    let phi = GraphAutomorphism::Dihedral {
        n,
        shift: 7,
        flip: false,
    };
    assert!(!graph_rendezvous_time(&w, &w, &phi, true).unwrap().met());
}

#[test]
fn alpern_failure_halves_per_block() {
    let n = 40;
    let mut r = rng(2);
    let trials = 20_000;
    let mut missed_at = vec![0u32; 5];
    for _ in 0..trials {
        let x = alpern_cycle_schedule(n, 2 * n, &mut r).unwrap();
        let y = alpern_cycle_schedule(n, 2 * n, &mut r).unwrap();
        let phi = sample_automorphism(x.graph(), &mut r);
        let tau = graph_rendezvous_time(&x, &y, &phi, true).unwrap().tau();
        for (k, slot) in missed_at.iter_mut().enumerate() {
            if tau.map_or(true, |t| t > 1 + k * n / 2) {
                *slot += 1;
            }
        }
    }
    for (k, &misses) in missed_at.iter().enumerate().skip(1) {
        let p = misses as f64 / trials as f64;
        let expected = 0.5f64.powi(k as i32);
        let sigma = (expected * (1.0 - expected) / trials as f64).sqrt();
        // The 2^-k law is exact over direction choices; the +-1 block
        // boundary convention costs at most an O(1/n) sliver.
        assert!(
            (p - expected).abs() < 4.0 * sigma + 2.0 / n as f64,
            "k = {k}: {p} vs {expected}"
        );
    }
}

#[test]
fn circulant_enumeration_is_below_velocity_collision_rate() {
    for (n, k) in [(7usize, 2usize), (11, 3)] {
        let exact = exact_circulant_failure(n, k).unwrap();
        let cap = 1.0 / (2 * k + 1) as f64;
        assert!(exact <= cap, "({n}, {k}): {exact} > {cap}");
        assert!(exact > 0.0);

        // Monte Carlo agreement with the enumeration within 4 sigma.
        let mut r = rng(100 + n as u64);
        let trials = 40_000;
        let graph = Graph::circulant(n, k).unwrap();
        let mut failures = 0u64;
        for _ in 0..trials {
            let x = circulant_velocity_schedule(n, k, &mut r).unwrap();
            let y = circulant_velocity_schedule(n, k, &mut r).unwrap();
            let phi = sample_automorphism(&graph, &mut r);
            if !graph_rendezvous_time(&x, &y, &phi, false).unwrap().met() {
                failures += 1;
            }
        }
        let hat = failures as f64 / trials as f64;
        let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
        assert!((hat - exact).abs() < 4.0 * sigma, "({n}, {k}): {hat} vs {exact}");
    }
}

#[test]
fn different_velocities_always_meet_under_rotations() {
    let (n, k) = (11usize, 3usize);
    let graph = Graph::circulant(n, k).unwrap();
    let walk = |j: i64| {
        GraphWalk::new(
            graph,
            (0..n as i64)
                .map(|t| (j * t).rem_euclid(n as i64) as usize)
                .collect(),
        )
        .unwrap()
    };
    for j1 in -(k as i64)..=k as i64 {
        for j2 in -(k as i64)..=k as i64 {
            for shift in 0..n {
                let phi = GraphAutomorphism::Dihedral {
                    n,
                    shift,
                    flip: false,
                };
                let met = graph_rendezvous_time(&walk(j1), &walk(j2), &phi, false)
                    .unwrap()
                    .met();
                if j1 != j2 {
                    assert!(met, "j1={j1} j2={j2} shift={shift}");
                } else if shift != 0 {
                    assert!(!met, "j1={j1} shift={shift}");
                }
            }
        }
    }
}

#[test]
fn hamiltonian_strategy_shape() {
    let graph = Graph::hypercube(5).unwrap();
    let n = 32;
    let k = 3u32;
    let strategy = HamiltonianCodeStrategy::new(&graph, k).unwrap();
    assert_eq!(strategy.rows().len(), k as usize);
    // 4n + 2^k * diameter moves.
    assert_eq!(strategy.walk_len(), 4 * n + (1 << k) * 5);

    // Away from the repositioning columns, each block either waits on one
    // vertex or walks a contiguous stretch of the Gray-code order.
    let gray_index: Vec<usize> = {
        let mut inv = vec![0usize; n];
        for i in 0..n {
            inv[i ^ (i >> 1)] = i;
        }
        inv
    };
    let block_len = (4 * n) >> k;
    let delta = 5;
    for row in strategy.rows() {
        for b in 0..(1usize << k) {
            let start = 1 + (b + 1) * delta + b * block_len;
            let block = &row.vertices()[start..start + block_len];
            let idx: Vec<usize> = block.iter().map(|&v| gray_index[v]).collect();
            let (lo, hi) = (idx.iter().min().unwrap(), idx.iter().max().unwrap());
            let distinct: std::collections::BTreeSet<usize> = idx.iter().copied().collect();
            assert_eq!(
                hi - lo + 1,
                distinct.len(),
                "block {b} is not a contiguous stretch"
            );
        }
    }
}

#[test]
fn hamiltonian_distinct_rows_always_meet() {
    let graph = Graph::hypercube(5).unwrap();
    let strategy = HamiltonianCodeStrategy::new(&graph, 3).unwrap();
    let mut r = rng(8);
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for _ in 0..100 {
                let phi = sample_automorphism(&graph, &mut r);
                assert!(
                    graph_rendezvous_time(&strategy.rows()[i], &strategy.rows()[j], &phi, false)
                        .unwrap()
                        .met(),
                    "rows ({i}, {j})"
                );
            }
        }
    }
}

#[test]
fn hamiltonian_failure_rate_is_at_most_one_over_k() {
    let graph = Graph::hypercube(6).unwrap();
    let k = 3u32;
    let strategy = HamiltonianCodeStrategy::new(&graph, k).unwrap();
    let mut r = rng(9);
    let trials = 4000;
    let mut failures = 0u64;
    for _ in 0..trials {
        let x = strategy.sample(&mut r);
        let y = strategy.sample(&mut r);
        let phi = sample_automorphism(&graph, &mut r);
        if !graph_rendezvous_time(&x, &y, &phi, false).unwrap().met() {
            failures += 1;
        }
    }
    let hat = failures as f64 / trials as f64;
    let p = 1.0 / k as f64;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    assert!(hat <= p + 4.0 * sigma, "failure {hat}");
    assert!(hat > 0.0);
}

#[test]
fn default_row_heuristic() {
    assert_eq!(default_hamiltonian_rows(&Graph::hypercube(10).unwrap()), 3);
    assert!(default_hamiltonian_rows(&Graph::cycle(64).unwrap()) >= 1);
}

#[test]
fn spanning_tree_walks_are_closed_and_covering() {
    let mut r = rng(10);
    for g in [
        Graph::cycle(6).unwrap(),
        Graph::circulant(7, 2).unwrap(),
        Graph::hypercube(3).unwrap(),
    ] {
        let n = g.num_vertices();
        for _ in 0..20 {
            let w = spanning_tree_schedule(&g, &mut r).unwrap();
            assert_eq!(w.len(), 2 * (n - 1), "{g:?}");
            assert_eq!(w.vertices().first(), w.vertices().last());
            let seen: std::collections::BTreeSet<usize> = w.vertices().iter().copied().collect();
            assert_eq!(seen.len(), n);
        }
    }
}

#[test]
fn strobe_map_examples() {
    let g = Graph::cycle(12).unwrap();
    let constant = GraphWalk::new(g, vec![7; 9]).unwrap();
    let image = strobe_map(&constant, 2).unwrap();
    assert_eq!(image.vertices(), vec![3; 5]);

    let around = GraphWalk::new(g, (0..=12).map(|v| v % 12).collect()).unwrap();
    let image = strobe_map(&around, 2).unwrap();
    assert_eq!(image.vertices(), vec![0, 1, 2, 3, 4, 5, 0]);

    assert!(strobe_map(&around, 3).is_err());
    let short = GraphWalk::new(g, vec![0, 1, 2]).unwrap();
    assert!(strobe_map(&short, 2).is_ok());
    let odd = GraphWalk::new(g, vec![0, 1, 2, 3]).unwrap();
    assert!(strobe_map(&odd, 2).is_err());
}

fn random_cycle_walk(n: usize, moves: usize, rng: &mut impl Rng) -> GraphWalk {
    let g = Graph::cycle(n).unwrap();
    let mut v = rng.gen_range(0..n);
    let mut vertices = vec![v];
    for _ in 0..moves {
        v = match rng.gen_range(0..3) {
            0 => (v + 1) % n,
            1 => (v + n - 1) % n,
            _ => v,
        };
        vertices.push(v);
    }
    GraphWalk::new(g, vertices).unwrap()
}

#[test]
fn strobe_images_are_valid_walks() {
    let mut r = rng(11);
    for _ in 0..200 {
        let w = random_cycle_walk(18, 30, &mut r);
        // GraphWalk::new inside strobe_map enforces C6 adjacency.
        strobe_map(&w, 3).unwrap();
    }
}

#[test]
fn meetings_pin_the_sector_images_together() {
    // A meeting at time t forces the sector images within distance 1 at
    // the nearest multiple of m; the contrapositive drives the bound.
    let n = 12;
    let m = 2;
    let mut r = rng(12);
    let mut observed = 0;
    for _ in 0..2000 {
        let x = random_cycle_walk(n, 24, &mut r);
        let y = random_cycle_walk(n, 24, &mut r);
        let meet = x
            .vertices()
            .iter()
            .zip(y.vertices())
            .position(|(a, b)| a == b);
        let Some(p) = meet else { continue };
        observed += 1;
        let sx = strobe_map(&x, m).unwrap();
        let sy = strobe_map(&y, m).unwrap();
        let i = ((p + m / 2) / m).min(sx.len());
        let (a, b) = (sx.vertices()[i], sy.vertices()[i]);
        let d = (a as isize - b as isize).rem_euclid(6);
        assert!(d <= 1 || d == 5, "meet at {p}, sectors {a} and {b}");
    }
    assert!(observed > 500);
}

#[test]
fn identical_move_sequences_far_apart_never_meet() {
    // Rotated copies keep their distance; if the sector images start at
    // least 2 apart the originals cannot meet even across edges.
    let n = 12;
    let m = 2;
    let mut r = rng(13);
    for _ in 0..500 {
        let x = random_cycle_walk(n, 24, &mut r);
        let shift = r.gen_range(1..n);
        let phi = GraphAutomorphism::Dihedral {
            n,
            shift,
            flip: false,
        };
        let y = GraphWalk::new(
            *x.graph(),
            x.vertices().iter().map(|&v| phi.apply(v)).collect(),
        )
        .unwrap();
        let sx = strobe_map(&x, m).unwrap();
        let sy = strobe_map(&y, m).unwrap();
        let d0 = (sx.vertices()[0] as isize - sy.vertices()[0] as isize).rem_euclid(6);
        if d0.min(6 - d0) >= 2 {
            let id = GraphAutomorphism::Dihedral {
                n,
                shift: 0,
                flip: false,
            };
            assert!(!graph_rendezvous_time(&x, &y, &id, true).unwrap().met());
        }
    }
}

#[test]
fn cycle_bound_values_and_consistency() {
    assert_eq!(cycle_lower_bound(0, 600).unwrap(), 0.5);
    let at_n = cycle_lower_bound(600, 600).unwrap();
    assert!((at_n - 0.5 / 729.0).abs() < 1e-12);
    assert!((at_n - 6.86e-4).abs() < 1e-6);
    assert!(cycle_lower_bound(5, 100).is_err());

    // The cycle strategy's 2^{-2T/n} failure law sits above the bound.
    for t in (0..=2400).step_by(100) {
        let alpern = 0.5f64.powf(2.0 * t as f64 / 600.0);
        assert!(alpern >= cycle_lower_bound(t, 600).unwrap(), "T = {t}");
    }
}
