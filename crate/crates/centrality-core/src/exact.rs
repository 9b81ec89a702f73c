// SPDX-License-Identifier: Apache-2.0

//! Exact closeness centrality (one shortest-path run per source) and graph
//! diameter. Closeness of `u` is `(n-1)` divided by the sum of distances
//! from every vertex to `u`.
//!
//! Work is parallelized over fixed chunks of sources and the per-chunk
//! partial sums are combined in chunk order, so results are bit-identical
//! regardless of how chunks are scheduled.

use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sssp;

/// Sources per parallel work item. Chunk partials combine in index order, so
/// the value affects throughput only, never results.
pub(crate) const SOURCE_CHUNK: usize = 32;

/// How a [`CentralityReport`] was produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Method {
    Exact,
    Sampled {
        k: usize,
        seed: Option<u64>,
        elapsed: Duration,
    },
}

/// Closeness centrality per vertex, indexed by vertex id.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityReport {
    pub values: Vec<f64>,
    pub method: Method,
}

/// One output row: vertices ranked by descending centrality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankedRow {
    pub vertex: usize,
    pub centrality: f64,
    pub rank: usize,
}

impl CentralityReport {
    /// Rows sorted by descending centrality, ties by ascending vertex id,
    /// with dense ranks (ties share a rank; the next distinct value gets the
    /// next integer).
    pub fn ranked_rows(&self) -> Vec<RankedRow> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_unstable_by(|&a, &b| {
            self.values[b].total_cmp(&self.values[a]).then(a.cmp(&b))
        });
        let mut rows = Vec::with_capacity(order.len());
        let mut rank = 0;
        let mut previous = None;
        for vertex in order {
            let centrality = self.values[vertex];
            if previous != Some(centrality) {
                rank += 1;
                previous = Some(centrality);
            }
            rows.push(RankedRow { vertex, centrality, rank });
        }
        rows
    }
}

/// Diameter knowledge: either the exact value (`lower == upper`) or a
/// one-source bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiameterInfo {
    pub lower: f64,
    pub upper: f64,
    pub exact: bool,
}

/// Everything the all-sources sweep learns in one pass.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactAnalysis {
    pub centrality: CentralityReport,
    pub diameter: DiameterInfo,
    /// `distance_sums[u]` is the sum of distances from every vertex to `u`.
    pub distance_sums: Vec<f64>,
}

/// Runs shortest paths from every source, accumulating per-vertex distance
/// sums and the maximum pairwise distance. Requires a connected graph with
/// at least two vertices.
pub fn exact_analysis(g: &Graph) -> Result<ExactAnalysis> {
    let n = g.n();
    if n < 2 {
        return Err(Error::GraphTooSmall { n });
    }
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<Result<(Vec<f64>, f64)>> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut sums = vec![0.0; n];
            let mut max_dist = 0.0;
            for &s in chunk {
                let dv = sssp::sssp(g, s)?;
                for (u, &d) in dv.dist.iter().enumerate() {
                    if !d.is_finite() {
                        return Err(Error::Disconnected { witness: u });
                    }
                    sums[u] += d;
                    if d > max_dist {
                        max_dist = d;
                    }
                }
            }
            Ok((sums, max_dist))
        })
        .collect();

    let mut distance_sums = vec![0.0; n];
    let mut diameter = 0.0;
    for partial in partials {
        let (sums, max_dist) = partial?;
        for (total, part) in distance_sums.iter_mut().zip(&sums) {
            *total += part;
        }
        if max_dist > diameter {
            diameter = max_dist;
        }
    }

    let values = distance_sums.iter().map(|&s| (n - 1) as f64 / s).collect();
    Ok(ExactAnalysis {
        centrality: CentralityReport { values, method: Method::Exact },
        diameter: DiameterInfo { lower: diameter, upper: diameter, exact: true },
        distance_sums,
    })
}

/// Exact closeness centrality for every vertex.
pub fn exact_centrality(g: &Graph) -> Result<CentralityReport> {
    Ok(exact_analysis(g)?.centrality)
}

/// Exact diameter via a full all-sources sweep.
pub fn exact_diameter(g: &Graph) -> Result<DiameterInfo> {
    Ok(exact_analysis(g)?.diameter)
}

/// Diameter bracket from a single probe vertex: the true diameter lies in
/// `[ecc(probe), 2 * ecc(probe)]` by the triangle inequality.
pub fn diameter_upper_bound(g: &Graph, probe: usize) -> Result<DiameterInfo> {
    let ecc = sssp::sssp(g, probe)?.eccentricity()?;
    Ok(DiameterInfo { lower: ecc, upper: 2.0 * ecc, exact: false })
}
