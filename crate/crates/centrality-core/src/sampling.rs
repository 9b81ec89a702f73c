// SPDX-License-Identifier: Apache-2.0

//! Sampled closeness centrality: run shortest paths from `k` sources drawn
//! uniformly with replacement and estimate
//!
//! ```text
//! c_u  ≈  k (n - 1) / (n * Σ_i d(v_i, u))
//! ```
//!
//! The reciprocal of this estimate is an unbiased estimator of the
//! reciprocal of closeness. [`sample_size`] picks the number of sources `k`
//! so each vertex's reciprocal errs by more than `epsilon * diameter` with
//! probability at most `delta_vertex`, via a Hoeffding tail bound in which
//! the diameter cancels.

use std::time::{Duration, Instant};

use rand::distr::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{CentralityReport, Method, SOURCE_CHUNK};
use crate::graph::Graph;
use crate::sssp;

/// RNG family used for source draws, recorded in traces so runs can name
/// their generator.
pub const RNG_FAMILY: &str = "chacha12";

/// Source-count recommendation for an accuracy target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplePlan {
    pub n: usize,
    pub epsilon: f64,
    /// Per-vertex failure probability.
    pub delta_vertex: f64,
    /// Union bound over all vertices: `min(1, n * delta_vertex)`.
    pub delta_graph: f64,
    pub k: usize,
}

/// Default per-vertex failure probability, `1 / n^2`.
pub fn default_delta_vertex(n: usize) -> f64 {
    1.0 / (n as f64 * n as f64)
}

/// Tail bound on the per-vertex failure probability after `k` samples:
/// `2 exp(-2 k eps^2 ((n-1)/n)^2)`.
fn failure_bound(k: usize, epsilon: f64, n: usize) -> f64 {
    let q = (n - 1) as f64 / n as f64;
    2.0 * (-2.0 * k as f64 * (epsilon * q).powi(2)).exp()
}

/// Smallest `k` with `failure_bound(k, epsilon, n) <= delta_vertex`, i.e.
/// `ceil(ln(2 / delta) / (2 eps^2 ((n-1)/n)^2))` adjusted so the bound as
/// evaluated in f64 actually holds at `k` and fails at `k - 1`.
pub fn sample_size(n: usize, epsilon: f64, delta_vertex: f64) -> Result<SamplePlan> {
    if n < 2 {
        return Err(Error::GraphTooSmall { n });
    }
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be positive and finite, got {epsilon}"
        )));
    }
    if !(delta_vertex > 0.0 && delta_vertex < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must lie strictly between 0 and 1, got {delta_vertex}"
        )));
    }
    let q = (n - 1) as f64 / n as f64;
    let raw = (2.0 / delta_vertex).ln() / (2.0 * (epsilon * q).powi(2));
    let mut k = raw.ceil().max(1.0) as usize;
    // The closed form and the bound can disagree by one step at the boundary
    // from rounding; nudge toward the smallest satisfying k.
    for _ in 0..2 {
        if failure_bound(k, epsilon, n) > delta_vertex {
            k += 1;
        }
    }
    for _ in 0..2 {
        if k > 1 && failure_bound(k - 1, epsilon, n) <= delta_vertex {
            k -= 1;
        }
    }
    let delta_graph = (n as f64 * delta_vertex).min(1.0);
    Ok(SamplePlan { n, epsilon, delta_vertex, delta_graph, k })
}

/// Record of one estimation run: where the sources came from and what they
/// cost. `degenerate` lists vertices whose sampled distance sum was zero
/// (every draw hit the vertex itself), reported as infinite centrality.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleTrace {
    /// Seed for drawn sources; `None` when sources were injected.
    pub seed: Option<u64>,
    /// `"chacha12"` for drawn sources, `"injected"` otherwise.
    pub generator: &'static str,
    pub sources: Vec<usize>,
    pub per_source_elapsed: Vec<Duration>,
    pub degenerate: Vec<usize>,
}

/// Draws `k` sources uniformly from `0..n` with replacement, one draw per
/// source from a fresh stream seeded with `seed`.
pub fn draw_sources(n: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let uniform = Uniform::new(0, n as u64).expect("n >= 1");
    (0..k).map(|_| uniform.sample(&mut rng) as usize).collect()
}

/// Estimates centrality from `k` seeded uniform source draws.
pub fn estimate_centrality(
    g: &Graph,
    k: usize,
    seed: u64,
) -> Result<(CentralityReport, SampleTrace)> {
    if g.n() < 2 {
        return Err(Error::GraphTooSmall { n: g.n() });
    }
    if k == 0 {
        return Err(Error::InvalidParameter("sample count k must be at least 1".into()));
    }
    let sources = draw_sources(g.n(), k, seed);
    run_estimate(g, sources, Some(seed), RNG_FAMILY)
}

/// Estimates centrality from caller-chosen sources (repeats allowed). Meant
/// for tests and replays; estimator guarantees assume uniform draws.
pub fn estimate_with_sources(
    g: &Graph,
    sources: &[usize],
) -> Result<(CentralityReport, SampleTrace)> {
    if g.n() < 2 {
        return Err(Error::GraphTooSmall { n: g.n() });
    }
    if sources.is_empty() {
        return Err(Error::InvalidParameter("at least one source is required".into()));
    }
    if let Some(&bad) = sources.iter().find(|&&s| s >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: g.n() });
    }
    run_estimate(g, sources.to_vec(), None, "injected")
}

/// Sizes the sample for `(epsilon, delta_vertex)` via [`sample_size`], then
/// estimates with that `k`.
pub fn estimate_with_plan(
    g: &Graph,
    epsilon: f64,
    delta_vertex: f64,
    seed: u64,
) -> Result<(CentralityReport, SamplePlan, SampleTrace)> {
    let plan = sample_size(g.n(), epsilon, delta_vertex)?;
    let (report, trace) = estimate_centrality(g, plan.k, seed)?;
    Ok((report, plan, trace))
}

fn run_estimate(
    g: &Graph,
    sources: Vec<usize>,
    seed: Option<u64>,
    generator: &'static str,
) -> Result<(CentralityReport, SampleTrace)> {
    let n = g.n();
    let k = sources.len();
    let started = Instant::now();
    // Chunked exactly like the all-sources sweep: partials merge in source
    // order, so results do not depend on scheduling.
    let partials: Vec<Result<(Vec<f64>, Vec<Duration>)>> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut sums = vec![0.0; n];
            let mut timings = Vec::with_capacity(chunk.len());
            for &s in chunk {
                let t0 = Instant::now();
                let dv = sssp::sssp(g, s)?;
                for (u, &d) in dv.dist.iter().enumerate() {
                    if !d.is_finite() {
                        return Err(Error::Disconnected { witness: u });
                    }
                    sums[u] += d;
                }
                timings.push(t0.elapsed());
            }
            Ok((sums, timings))
        })
        .collect();

    let mut sums = vec![0.0; n];
    let mut per_source_elapsed = Vec::with_capacity(k);
    for partial in partials {
        let (part, timings) = partial?;
        for (total, p) in sums.iter_mut().zip(&part) {
            *total += p;
        }
        per_source_elapsed.extend(timings);
    }

    let scale = k as f64 * (n - 1) as f64 / n as f64;
    let mut degenerate = Vec::new();
    let values: Vec<f64> = sums
        .iter()
        .enumerate()
        .map(|(u, &sum)| {
            if sum == 0.0 {
                degenerate.push(u);
                f64::INFINITY
            } else {
                scale / sum
            }
        })
        .collect();

    let report = CentralityReport {
        values,
        method: Method::Sampled { k, seed, elapsed: started.elapsed() },
    };
    let trace = SampleTrace { seed, generator, sources, per_source_elapsed, degenerate };
    Ok((report, trace))
}
