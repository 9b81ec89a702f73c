// SPDX-License-Identifier: Apache-2.0

//! Acceptance gate for the toolkit: eight end-to-end checks covering oracle
//! equivalence, estimator identities, statistical guarantees, scaling, and
//! byte-level CLI determinism. Each test prints one PASS line with its
//! headline numbers; a failed assertion fails the corresponding criterion.

use std::process::{Command, Output};
use std::sync::LazyLock;
use std::time::Instant;

use centrality_core::oracles::{centrality_from_matrix, floyd_warshall, random_connected_graph};
use centrality_core::{
    bench_graph, derive_trial_seed, estimate_centrality, estimate_with_sources, exact_analysis,
    exact_centrality, generate, run_audit, sample_size, sssp, AuditOptions, ErrorAudit,
    ExactAnalysis, Family, Graph, GeneratorSpec, WeightModel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

const BIN: &str = env!("CARGO_BIN_EXE_centrality");

/// Shared fixture for the budget and relative-error checks: one 500-vertex
/// small-world graph, its exact analysis, and a 200-trial audit at
/// epsilon = 0.2 with the default per-vertex failure probability 1/500^2.
static WS_AUDIT: LazyLock<(Graph, ExactAnalysis, ErrorAudit)> = LazyLock::new(|| {
    let spec = GeneratorSpec::new(Family::WattsStrogatz { n: 500, degree: 6, rewire: 0.1 })
        .with_seed(0x5EED);
    let g = generate(&spec).expect("small-world generation");
    let analysis = exact_analysis(&g).expect("generated graphs are connected");
    let audit =
        run_audit(&g, &AuditOptions::new(0.2, 200, 0xA4D17)).expect("audit on a connected graph");
    (g, analysis, audit)
});

#[test]
fn c1_exact_sweep_matches_dense_oracle_on_500_random_graphs() {
    let started = Instant::now();
    for i in 0..500u64 {
        let n = 2 + (i as usize % 7); // covers 2..=8
        let mut rng = ChaCha12Rng::seed_from_u64(1000 + i);
        let g = random_connected_graph(&mut rng, n, 0.35, false);

        let matrix = floyd_warshall(&g);
        for (s, row) in matrix.iter().enumerate() {
            let dv = sssp(&g, s).expect("connected by construction");
            assert_eq!(&dv.dist, row, "distance mismatch, graph {i} source {s}");
        }

        let expected = centrality_from_matrix(&matrix);
        let got = exact_centrality(&g).unwrap();
        for (u, &want) in expected.iter().enumerate() {
            let diff = (got.values[u] - want).abs();
            assert!(diff <= 1e-12, "graph {i} vertex {u}: |{} - {want}| = {diff}",
                got.values[u]);
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "took {elapsed:.2}s, budget 10s");
    println!("PASS 1/8: exact sweep equals dense oracle on 500 random graphs ({elapsed:.2}s)");
}

#[test]
fn c2_exhaustive_source_injection_reproduces_exact_values() {
    let started = Instant::now();
    for text in ["path:3", "cycle:6", "complete:4", "star:5"] {
        let g = generate(&GeneratorSpec::parse(text).unwrap()).unwrap();
        let n = g.n();
        let exact = exact_centrality(&g).unwrap();
        let sources: Vec<usize> = (0..n).collect();
        let (sampled, _) = estimate_with_sources(&g, &sources).unwrap();
        for u in 0..n {
            let rel = (sampled.values[u] - exact.values[u]).abs() / exact.values[u];
            assert!(rel <= 1e-9, "{text} vertex {u}: relative gap {rel}");
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 1.0, "took {elapsed:.2}s, budget 1s");
    println!("PASS 2/8: sampling every vertex once reproduces exact values ({elapsed:.2}s)");
}

#[test]
fn c3_single_source_reciprocal_estimates_are_unbiased_on_a_path() {
    let started = Instant::now();
    let g = generate(&GeneratorSpec::parse("path:5").unwrap()).unwrap();
    let n = g.n();
    let analysis = exact_analysis(&g).unwrap();
    let inverse_exact: Vec<f64> =
        analysis.distance_sums.iter().map(|&s| s / (n - 1) as f64).collect();

    const RUNS: usize = 20_000;
    let mut sum = vec![0.0f64; n];
    let mut sumsq = vec![0.0f64; n];
    for r in 0..RUNS {
        let seed = derive_trial_seed(0xC3, r as u64);
        let (report, _) = estimate_centrality(&g, 1, seed).unwrap();
        for u in 0..n {
            // Reciprocal of the infinite sentinel is 0: the source vertex
            // contributes its own zero distance.
            let x = 1.0 / report.values[u];
            sum[u] += x;
            sumsq[u] += x * x;
        }
    }

    let runs = RUNS as f64;
    for u in 0..n {
        let mean = sum[u] / runs;
        let variance = (sumsq[u] - runs * mean * mean) / (runs - 1.0);
        let se = (variance / runs).sqrt();
        let gap = (mean - inverse_exact[u]).abs();
        assert!(
            gap <= 4.0 * se,
            "vertex {u}: mean {mean} vs exact {} is {:.2} standard errors off",
            inverse_exact[u],
            gap / se
        );
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "took {elapsed:.2}s, budget 30s");
    println!(
        "PASS 3/8: 20000 single-draw reciprocal estimates match the truth within 4 SE ({elapsed:.2}s)"
    );
}

#[test]
fn c4_planned_sample_sizes_keep_violations_within_binomial_slack() {
    let started = Instant::now();
    let (g, _, audit) = &*WS_AUDIT;
    assert_eq!(g.n(), 500);
    assert_eq!(g.edge_count(), 500 * 6 / 2, "rewiring preserves the edge count");
    assert!(g.has_unit_weights());

    let plan = sample_size(500, 0.2, 1.0 / 250_000.0).unwrap();
    assert_eq!(audit.k, plan.k);
    assert!((audit.delta_graph - 1.0 / 500.0).abs() < 1e-15);
    assert_eq!(audit.trials.len(), 200);
    assert!(
        audit.passed,
        "{} violations exceed the allowed {:.2}",
        audit.violations, audit.pass_threshold
    );
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 300.0, "took {elapsed:.2}s, budget 300s");
    println!(
        "PASS 4/8: {} of 200 trials violated the epsilon*diameter budget (k={}, allowed {:.2}, {elapsed:.2}s)",
        audit.violations, audit.k, audit.pass_threshold
    );
}

#[test]
fn c5_sample_size_matches_an_independent_derivation() {
    // Tail bound written out locally so the library result is checked
    // against a from-scratch evaluation, not against itself.
    fn tail_bound(k: usize, epsilon: f64, n: usize) -> f64 {
        let q = (n as f64 - 1.0) / n as f64;
        let zz = (epsilon * q) * (epsilon * q);
        2.0 * (-2.0 * k as f64 * zz).exp()
    }

    // Closed form: k = ceil(ln(2/delta) / (2 eps^2 q^2)) at n=1000,
    // eps=0.1, delta=1e-6.
    let q = 999.0f64 / 1000.0;
    let threshold = (2.0f64.ln() - 1e-6f64.ln()) / (2.0 * 0.1 * 0.1 * q * q);
    let k_closed_form = threshold.ceil() as usize;
    assert_eq!(k_closed_form, 727);

    // Direct search for the smallest k satisfying the bound, in both the
    // exponential and the log-space form of the same inequality.
    let k_searched = (1..).find(|&k| tail_bound(k, 0.1, 1000) <= 1e-6).unwrap();
    assert_eq!(k_searched, 727);
    let ln_two_over_delta = 2.0f64.ln() - 1e-6f64.ln();
    assert!(2.0 * 727.0 * (0.1 * q) * (0.1 * q) >= ln_two_over_delta);
    assert!(2.0 * 726.0 * (0.1 * q) * (0.1 * q) < ln_two_over_delta);

    let plan = sample_size(1000, 0.1, 1e-6).unwrap();
    assert_eq!(plan.k, 727);
    assert!((plan.delta_graph - 1e-3).abs() < 1e-18);

    // Minimality invariant on 1000 random parameter triples: the bound
    // holds at k and fails at k - 1 (k - 1 = 0 gives bound 2, never met).
    let mut rng = ChaCha12Rng::seed_from_u64(0xC5);
    for _ in 0..1000 {
        let n = (10.0f64.powf(rng.random_range(0.31f64..5.0)) as usize).max(2);
        let epsilon = rng.random_range(0.01f64..1.5);
        let delta = 10.0f64.powf(rng.random_range(-9.0f64..-0.31));
        let k = sample_size(n, epsilon, delta).unwrap().k;
        assert!(
            tail_bound(k, epsilon, n) <= delta,
            "bound not met at k={k} for n={n}, eps={epsilon}, delta={delta}"
        );
        assert!(
            k == 1 || tail_bound(k - 1, epsilon, n) > delta,
            "k={k} not minimal for n={n}, eps={epsilon}, delta={delta}"
        );
    }
    println!("PASS 5/8: sample size 727 re-derived independently; minimal on 1000 random triples");
}

#[test]
fn c6_estimator_scales_better_than_the_sweep_as_graphs_grow() {
    let started = Instant::now();
    let mut ratios = Vec::new();
    let mut records = Vec::new();
    for n in [2000usize, 4000, 8000] {
        let p = 8.0 / (n as f64 - 1.0); // average degree 8
        let spec = GeneratorSpec::new(Family::ErdosRenyi { n, p })
            .with_weights(WeightModel::Uniform { lo: 0.5, hi: 1.5 })
            .with_seed(20);
        let g = generate(&spec).unwrap();
        let record = bench_graph(&spec.to_string(), &g, 0.2, None, 20).unwrap();
        ratios.push(record.approx_secs / record.exact_secs);
        records.push(record);
    }
    for pair in ratios.windows(2) {
        assert!(
            pair[1] < pair[0],
            "approx/exact ratio must strictly decrease with n, got {ratios:?}"
        );
    }
    let last = records.last().unwrap();
    assert!(
        last.approx_secs < last.exact_secs,
        "at n=8000 the estimator must beat the sweep: approx {:.3}s vs exact {:.3}s",
        last.approx_secs,
        last.exact_secs
    );
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 300.0, "took {elapsed:.2}s, budget 300s");
    println!(
        "PASS 6/8: approx/exact wall-time ratio falls {:.4} -> {:.4} -> {:.4} over n=2000/4000/8000 ({elapsed:.1}s)",
        ratios[0], ratios[1], ratios[2]
    );
}

#[test]
fn c7_trials_inside_budget_also_bound_relative_error() {
    let (_, analysis, audit) = &*WS_AUDIT;
    let c_max = analysis
        .centrality
        .values
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    let bound = audit.epsilon * audit.fingerprint.diameter * c_max;

    let mut observed_max = 0.0f64;
    let mut passing = 0usize;
    for trial in audit.trials.iter().filter(|t| !t.violated) {
        passing += 1;
        observed_max = observed_max.max(trial.max_relative_error);
        assert!(
            trial.max_relative_error <= bound,
            "trial {} passed the additive audit but has relative error {} > {bound}",
            trial.trial,
            trial.max_relative_error
        );
    }
    assert!(passing > 0, "no passing trials to check");
    println!(
        "PASS 7/8: all {passing} passing trials stay under the relative bound {bound:.3}; observed max {observed_max:.3}"
    );
}

#[test]
fn c8_cli_runs_are_byte_identical_across_repeats() {
    fn run(args: &[&str]) -> Output {
        Command::new(BIN).args(args).output().expect("binary runs")
    }

    let dir = tempfile::tempdir().unwrap();
    let p3 = dir.path().join("p3.txt");
    std::fs::write(&p3, "0 1\n1 2\n").unwrap();
    let ws100 = dir.path().join("ws100.txt");
    let status = Command::new(BIN)
        .args(["gen", "ws:100,6,0.1", "--seed", "3", "-o", ws100.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let p3 = p3.to_str().unwrap();
    let ws100 = ws100.to_str().unwrap();

    let invocations: Vec<Vec<&str>> = vec![
        vec!["exact", p3, "--format", "csv"],
        vec!["exact", p3, "--format", "json"],
        vec!["approx", ws100, "--epsilon", "0.3", "--delta", "0.001", "--seed", "11"],
        vec!["approx", ws100, "--k", "20", "--seed", "4", "--format", "json"],
        vec!["audit", "--spec", "ws:100,6,0.1", "--epsilon", "0.3", "--trials", "10", "--seed", "5"],
        vec![
            "audit", "--spec", "ws:100,6,0.1", "--epsilon", "0.3", "--trials", "10", "--seed",
            "5", "--format", "json",
        ],
        vec!["gen", "ws:200,6,0.1", "--seed", "9"],
        vec!["sample-size", "--n", "1000", "--epsilon", "0.1", "--delta", "1e-6"],
        vec!["sample-size", "--n", "64", "--epsilon", "0.2", "--format", "json"],
    ];

    for args in &invocations {
        let first = run(args);
        assert!(!first.stdout.is_empty(), "{args:?} produced no output");
        for repeat in 1..5 {
            let again = run(args);
            assert_eq!(again.status.code(), first.status.code(), "{args:?} repeat {repeat}");
            assert_eq!(again.stdout, first.stdout, "{args:?} repeat {repeat} stdout drifted");
            assert_eq!(again.stderr, first.stderr, "{args:?} repeat {repeat} stderr drifted");
        }
    }
    println!(
        "PASS 8/8: {} CLI invocations byte-identical across 5 repeats each",
        invocations.len()
    );
}
