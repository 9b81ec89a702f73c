// SPDX-License-Identifier: Apache-2.0

//! Empirical check of the sampling error guarantee. Each trial draws a fresh
//! seed, estimates centrality, and compares reciprocal-scale errors against
//! the budget `epsilon * diameter`. A trial violates the guarantee when any
//! vertex exceeds the budget; the audit passes when the violation count
//! stays within binomial noise of the planned failure probability.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::exact_analysis;
use crate::graph::Graph;
use crate::sampling::{default_delta_vertex, estimate_centrality, sample_size};

/// Refuse to audit graphs with more vertices than this unless the caller
/// raises the cap; every trial costs `k` shortest-path runs and the setup
/// costs `n` of them.
pub const DEFAULT_AUDIT_CAP: usize = 5000;

/// Identity of the audited graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphFingerprint {
    pub n: usize,
    pub m: usize,
    pub diameter: f64,
}

/// One audited estimation run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    /// Largest reciprocal-scale deviation over all vertices.
    pub max_inverse_error: f64,
    /// Largest relative centrality error over vertices with finite estimates.
    pub max_relative_error: f64,
    pub violated: bool,
}

/// Full audit outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorAudit {
    pub fingerprint: GraphFingerprint,
    pub epsilon: f64,
    pub delta_vertex: f64,
    pub delta_graph: f64,
    pub k: usize,
    pub seed: u64,
    /// Per-trial error allowance: `epsilon * diameter`.
    pub budget: f64,
    pub trials: Vec<TrialRecord>,
    pub violations: usize,
    pub violation_fraction: f64,
    /// Largest violation count the audit tolerates.
    pub pass_threshold: f64,
    pub passed: bool,
}

/// Audit configuration. `delta_vertex` defaults to `1/n^2` and `k_override`
/// replaces the planned sample count (for deliberately undersized runs).
#[derive(Debug, Clone, Copy)]
pub struct AuditOptions {
    pub epsilon: f64,
    pub trials: usize,
    pub seed: u64,
    pub delta_vertex: Option<f64>,
    pub k_override: Option<usize>,
    pub cap: usize,
}

impl AuditOptions {
    pub fn new(epsilon: f64, trials: usize, seed: u64) -> Self {
        AuditOptions {
            epsilon,
            trials,
            seed,
            delta_vertex: None,
            k_override: None,
            cap: DEFAULT_AUDIT_CAP,
        }
    }
}

/// Derives the seed for one trial from the audit seed. SplitMix64 finalizer
/// over the trial index: decorrelated streams, reproducible in isolation.
pub fn derive_trial_seed(base: u64, trial: u64) -> u64 {
    let mut z = base.wrapping_add(0x9E3779B97F4A7C15u64.wrapping_mul(trial.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Violation count tolerated over `trials` runs when each violates
/// independently with probability at most `delta_graph`: the binomial mean
/// plus three standard deviations.
pub fn binomial_pass_threshold(trials: usize, delta_graph: f64) -> f64 {
    let t = trials as f64;
    t * delta_graph + 3.0 * (t * delta_graph * (1.0 - delta_graph)).sqrt()
}

/// Runs the audit. Needs a connected graph with `2 <= n <= cap`.
pub fn run_audit(g: &Graph, opts: &AuditOptions) -> Result<ErrorAudit> {
    if g.n() > opts.cap {
        return Err(Error::InvalidParameter(format!(
            "graph has {} vertices, above the audit cap of {}; raise the cap to proceed",
            g.n(),
            opts.cap
        )));
    }
    if opts.trials == 0 {
        return Err(Error::InvalidParameter("audit needs at least one trial".into()));
    }
    if let Some(0) = opts.k_override {
        return Err(Error::InvalidParameter("sample count k must be at least 1".into()));
    }

    let analysis = exact_analysis(g)?;
    let n = g.n();
    let diameter = analysis.diameter.lower;
    let exact = &analysis.centrality.values;
    let inverse_exact: Vec<f64> =
        analysis.distance_sums.iter().map(|&s| s / (n - 1) as f64).collect();

    let delta_vertex = opts.delta_vertex.unwrap_or_else(|| default_delta_vertex(n));
    let plan = sample_size(n, opts.epsilon, delta_vertex)?;
    let k = opts.k_override.unwrap_or(plan.k);
    let budget = opts.epsilon * diameter;

    let trials: Vec<Result<TrialRecord>> = (0..opts.trials)
        .into_par_iter()
        .map(|trial| {
            let seed = derive_trial_seed(opts.seed, trial as u64);
            let (report, _) = estimate_centrality(g, k, seed)?;
            let mut max_inverse_error = 0.0;
            let mut max_relative_error = 0.0;
            for u in 0..n {
                let estimate = report.values[u];
                // Reciprocal of the degenerate infinite sentinel is 0, the
                // estimator's actual reciprocal-scale value for that run.
                let inverse_error = (1.0 / estimate - inverse_exact[u]).abs();
                if inverse_error > max_inverse_error {
                    max_inverse_error = inverse_error;
                }
                if estimate.is_finite() {
                    let relative = (estimate - exact[u]).abs() / exact[u];
                    if relative > max_relative_error {
                        max_relative_error = relative;
                    }
                }
            }
            Ok(TrialRecord {
                trial,
                seed,
                max_inverse_error,
                max_relative_error,
                violated: max_inverse_error > budget,
            })
        })
        .collect();
    let trials: Result<Vec<TrialRecord>> = trials.into_iter().collect();
    let trials = trials?;

    let violations = trials.iter().filter(|t| t.violated).count();
    let pass_threshold = binomial_pass_threshold(opts.trials, plan.delta_graph);
    Ok(ErrorAudit {
        fingerprint: GraphFingerprint { n, m: g.edge_count(), diameter },
        epsilon: opts.epsilon,
        delta_vertex,
        delta_graph: plan.delta_graph,
        k,
        seed: opts.seed,
        budget,
        violations,
        violation_fraction: violations as f64 / opts.trials as f64,
        pass_threshold,
        passed: (violations as f64) <= pass_threshold,
        trials,
    })
}
