// SPDX-License-Identifier: Apache-2.0

//! Wall-clock comparison of the all-sources sweep against the sampling
//! estimator at matched accuracy targets. Timings use the monotonic clock,
//! discard one warmup run, and report the median of three.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::exact::exact_analysis;
use crate::graph::Graph;
use crate::sampling::{default_delta_vertex, estimate_centrality, sample_size};

/// One benchmarked graph: sizes, the planned sample count, and median
/// wall times in seconds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    /// Label for the benchmarked graph, usually its generator spec.
    pub spec: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// Sampling does `k` of the `n` shortest-path runs the sweep does, so
    /// this ratio tracks the expected speedup.
    pub k_over_n: f64,
    pub exact_secs: f64,
    pub approx_secs: f64,
    /// `exact_secs / approx_secs`.
    pub speedup: f64,
}

/// Runs `f` three measured times and returns the median seconds, floored at
/// one nanosecond so ratios stay finite. Callers warm up beforehand.
pub fn median_of_three<T>(mut f: impl FnMut() -> T) -> f64 {
    let mut times = [0.0; 3];
    for slot in &mut times {
        let t0 = Instant::now();
        let _ = f();
        *slot = t0.elapsed().as_secs_f64();
    }
    times.sort_unstable_by(f64::total_cmp);
    times[1].max(1e-9)
}

/// Times exact against sampled centrality on one graph at accuracy target
/// `(epsilon, delta_vertex)`, `delta_vertex` defaulting to `1/n^2`.
pub fn bench_graph(
    label: &str,
    g: &Graph,
    epsilon: f64,
    delta_vertex: Option<f64>,
    seed: u64,
) -> Result<BenchRecord> {
    let n = g.n();
    let plan = sample_size(n, epsilon, delta_vertex.unwrap_or_else(|| default_delta_vertex(n)))?;
    // Each untimed validation run surfaces graph problems (disconnection,
    // size) before measurement and doubles as the excluded warmup.
    exact_analysis(g)?;
    let exact_secs = median_of_three(|| exact_analysis(g).expect("validated above"));
    estimate_centrality(g, plan.k, seed)?;
    let approx_secs = median_of_three(|| {
        estimate_centrality(g, plan.k, seed).expect("validated above")
    });
    Ok(BenchRecord {
        spec: label.to_string(),
        n,
        m: g.edge_count(),
        k: plan.k,
        k_over_n: plan.k as f64 / n as f64,
        exact_secs,
        approx_secs,
        speedup: exact_secs / approx_secs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_sits_between_extremes() {
        let mut calls = 0;
        let median = median_of_three(|| {
            calls += 1;
            std::thread::sleep(std::time::Duration::from_millis(1));
        });
        assert_eq!(calls, 3, "exactly three measured runs");
        assert!(median >= 1e-9);
    }

    #[test]
    fn bench_reports_sizes_and_positive_times() {
        let g = Graph::from_edges(30, false, (1..30).map(|v| (v - 1, v, 1.0))).unwrap();
        let record = bench_graph("path:30", &g, 0.3, Some(0.01), 5).unwrap();
        assert_eq!(record.spec, "path:30");
        assert_eq!(record.n, 30);
        assert_eq!(record.m, 29);
        assert_eq!(record.k, sample_size(30, 0.3, 0.01).unwrap().k);
        assert!(record.exact_secs > 0.0 && record.approx_secs > 0.0);
        assert!(record.speedup > 0.0);
        assert_eq!(record.k_over_n, record.k as f64 / 30.0);
    }

    #[test]
    fn bench_rejects_disconnected_graphs_before_timing() {
        let g = Graph::from_edges(4, false, [(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(bench_graph("split", &g, 0.3, None, 1).is_err());
    }
}
