// SPDX-License-Identifier: Apache-2.0

//! Reference implementations for tests, deliberately independent of the
//! production code paths: edge relaxation to a fixed point, a dense
//! all-pairs matrix, and a random connected graph builder whose weights sit
//! on a 1/64 grid so shortest-path sums are exact in f64 regardless of
//! evaluation order.

use rand::Rng;

use crate::graph::{Graph, GraphBuilder};

/// Bellman-Ford distances from `source`.
pub fn bellman_ford(g: &Graph, source: usize) -> Vec<f64> {
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    dist[source] = 0.0;
    for _ in 0..n {
        let mut changed = false;
        for u in 0..n {
            if !dist[u].is_finite() {
                continue;
            }
            for &(v, w) in g.neighbors(u) {
                let candidate = dist[u] + w;
                if candidate < dist[v] {
                    dist[v] = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

/// Floyd-Warshall all-pairs matrix, `result[i][j]` = distance from i to j.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0.0;
    }
    for (u, row) in d.iter_mut().enumerate() {
        for &(v, w) in g.neighbors(u) {
            if w < row[v] {
                row[v] = w;
            }
        }
    }
    for mid in 0..n {
        let mid_row = d[mid].clone();
        for row in &mut d {
            let through = row[mid];
            if !through.is_finite() {
                continue;
            }
            for (cell, &dm) in row.iter_mut().zip(&mid_row) {
                let candidate = through + dm;
                if candidate < *cell {
                    *cell = candidate;
                }
            }
        }
    }
    d
}

/// Closeness centrality read off an all-pairs matrix: `(n-1)` over each
/// column sum of distances into the vertex.
pub fn centrality_from_matrix(d: &[Vec<f64>]) -> Vec<f64> {
    let n = d.len();
    (0..n)
        .map(|u| {
            let total: f64 = d.iter().map(|row| row[u]).sum();
            (n - 1) as f64 / total
        })
        .collect()
}

/// Random connected undirected graph: a uniform random attachment tree plus
/// independent extra edges. Weights are `i/64` for `i` in `1..=128`, giving
/// values in `(0, 2]` that add exactly in f64 at these magnitudes; with
/// `unit_weights` every edge weighs 1 instead.
pub fn random_connected_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    extra_edge_prob: f64,
    unit_weights: bool,
) -> Graph {
    assert!(n >= 1);
    let mut builder = GraphBuilder::new(false);
    builder.ensure_vertex(n - 1);
    let weight = |rng: &mut R| {
        if unit_weights {
            1.0
        } else {
            rng.random_range(1..=128) as f64 / 64.0
        }
    };
    for v in 1..n {
        let parent = rng.random_range(0..v);
        let w = weight(rng);
        builder.add_edge(parent, v, w).expect("weight is valid");
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(extra_edge_prob) {
                let w = weight(rng);
                builder.add_edge(u, v, w).expect("weight is valid");
            }
        }
    }
    builder.build().0
}
