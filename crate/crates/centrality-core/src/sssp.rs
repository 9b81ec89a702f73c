// SPDX-License-Identifier: Apache-2.0

//! Single-source shortest paths: a binary-heap search for weighted graphs
//! and a breadth-first fast path for unit weights. Both produce the same
//! `f64` distances on unit-weight inputs.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distances from one source; unreachable vertices hold `f64::INFINITY`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceVector {
    pub source: usize,
    pub dist: Vec<f64>,
}

impl DistanceVector {
    /// Maximum distance from the source. Fails with a witness vertex if any
    /// vertex is unreachable.
    pub fn eccentricity(&self) -> Result<f64> {
        let mut max = 0.0;
        for (v, &d) in self.dist.iter().enumerate() {
            if !d.is_finite() {
                return Err(Error::Disconnected { witness: v });
            }
            if d > max {
                max = d;
            }
        }
        Ok(max)
    }
}

/// Shortest-path distances from `source` to every vertex.
pub fn sssp(g: &Graph, source: usize) -> Result<DistanceVector> {
    if source >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: source, n: g.n() });
    }
    let dist = if g.has_unit_weights() {
        bfs(g, source)
    } else {
        dijkstra(g, source).0
    };
    Ok(DistanceVector { source, dist })
}

/// Eccentricity of `source`: its maximum distance to any vertex.
pub fn eccentricity(g: &Graph, source: usize) -> Result<f64> {
    sssp(g, source)?.eccentricity()
}

struct QueueEntry {
    dist: f64,
    vertex: usize,
}

// BinaryHeap is a max-heap; reverse the distance order to pop nearest first.
impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.dist.total_cmp(&self.dist).then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for QueueEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for QueueEntry {}

/// Lazy-deletion heap search. Entries are pushed only on strict improvement,
/// so at most one entry per vertex matches the final distance and every
/// vertex settles at most once. Returns `(distances, settled count)`.
pub(crate) fn dijkstra(g: &Graph, source: usize) -> (Vec<f64>, usize) {
    let mut dist = vec![f64::INFINITY; g.n()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(QueueEntry { dist: 0.0, vertex: source });
    let mut settled = 0;
    while let Some(QueueEntry { dist: d, vertex: u }) = heap.pop() {
        if d > dist[u] {
            continue; // stale entry superseded by a later improvement
        }
        settled += 1;
        for &(v, w) in g.neighbors(u) {
            let candidate = d + w;
            if candidate < dist[v] {
                dist[v] = candidate;
                heap.push(QueueEntry { dist: candidate, vertex: v });
            }
        }
    }
    (dist, settled)
}

fn bfs(g: &Graph, source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; g.n()];
    dist[source] = 0.0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1.0;
        for &(v, _) in g.neighbors(u) {
            if dist[v].is_infinite() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}
