// SPDX-License-Identifier: Apache-2.0

//! Report rendering. CSV output carries run metadata as `# key=value`
//! comment lines above the header; JSON output is one object with a `meta`
//! field and a data array. Neither embeds wall-clock values (bench records
//! aside), so repeated runs with the same inputs are byte-identical.

use std::fmt::Write as _;

use centrality_core::{BenchRecord, ErrorAudit, RankedRow, SamplePlan};
use serde::Serialize;

#[derive(Debug, Copy, Clone, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Provenance block for a centrality report. Optional fields appear only
/// when the producing mode defines them.
#[derive(Debug, Serialize)]
pub struct ReportMeta {
    pub method: &'static str,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_vertex: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_graph: Option<f64>,
    /// Injected sources, echoed back for replay.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sources: Option<Vec<usize>>,
    /// Vertices reported as infinite because every sample hit them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<Vec<usize>>,
}

impl ReportMeta {
    pub fn exact(n: usize, m: usize) -> Self {
        ReportMeta {
            method: "exact",
            n,
            m,
            k: None,
            seed: None,
            epsilon: None,
            delta_vertex: None,
            delta_graph: None,
            sources: None,
            degenerate: None,
        }
    }

    pub fn sampled(n: usize, m: usize, k: usize) -> Self {
        ReportMeta { method: "sampled", k: Some(k), ..ReportMeta::exact(n, m) }
    }

    fn comment_lines(&self, out: &mut String) {
        let mut put = |key: &str, value: String| {
            let _ = writeln!(out, "# {key}={value}");
        };
        put("method", self.method.to_string());
        put("n", self.n.to_string());
        put("m", self.m.to_string());
        if let Some(k) = self.k {
            put("k", k.to_string());
        }
        if let Some(seed) = self.seed {
            put("seed", seed.to_string());
        }
        if let Some(epsilon) = self.epsilon {
            put("epsilon", epsilon.to_string());
        }
        if let Some(delta_vertex) = self.delta_vertex {
            put("delta_vertex", delta_vertex.to_string());
        }
        if let Some(delta_graph) = self.delta_graph {
            put("delta_graph", delta_graph.to_string());
        }
        if let Some(sources) = &self.sources {
            put("sources", join(sources));
        }
        if let Some(degenerate) = &self.degenerate {
            put("degenerate", join(degenerate));
        }
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("reports serialize infallibly");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    meta: &'a ReportMeta,
    rows: &'a [RankedRow],
}

/// Ranked centrality rows. CSV prints metadata comments only for sampled
/// reports; exact output is the bare table.
pub fn render_report(meta: &ReportMeta, rows: &[RankedRow], format: Format) -> String {
    match format {
        Format::Json => pretty(&ReportDoc { meta, rows }),
        Format::Csv => {
            let mut out = String::new();
            if meta.method != "exact" {
                meta.comment_lines(&mut out);
            }
            out.push_str("vertex,centrality,rank\n");
            for row in rows {
                let _ = writeln!(out, "{},{},{}", row.vertex, row.centrality, row.rank);
            }
            out
        }
    }
}

#[derive(Serialize)]
struct AuditMeta {
    n: usize,
    m: usize,
    diameter: f64,
    epsilon: f64,
    delta_vertex: f64,
    delta_graph: f64,
    k: usize,
    seed: u64,
    trials: usize,
    budget: f64,
}

#[derive(Serialize)]
struct AuditAggregate {
    violations: usize,
    violation_fraction: f64,
    pass_threshold: f64,
    passed: bool,
}

#[derive(Serialize)]
struct AuditDoc<'a> {
    meta: AuditMeta,
    trials: &'a [centrality_core::TrialRecord],
    aggregate: AuditAggregate,
}

pub fn render_audit(audit: &ErrorAudit, format: Format) -> String {
    let meta = AuditMeta {
        n: audit.fingerprint.n,
        m: audit.fingerprint.m,
        diameter: audit.fingerprint.diameter,
        epsilon: audit.epsilon,
        delta_vertex: audit.delta_vertex,
        delta_graph: audit.delta_graph,
        k: audit.k,
        seed: audit.seed,
        trials: audit.trials.len(),
        budget: audit.budget,
    };
    let aggregate = AuditAggregate {
        violations: audit.violations,
        violation_fraction: audit.violation_fraction,
        pass_threshold: audit.pass_threshold,
        passed: audit.passed,
    };
    match format {
        Format::Json => pretty(&AuditDoc { meta, trials: &audit.trials, aggregate }),
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# method=audit");
            let _ = writeln!(out, "# n={} m={} diameter={}", meta.n, meta.m, meta.diameter);
            let _ = writeln!(
                out,
                "# epsilon={} delta_vertex={} delta_graph={}",
                meta.epsilon, meta.delta_vertex, meta.delta_graph
            );
            let _ = writeln!(
                out,
                "# k={} seed={} trials={} budget={}",
                meta.k, meta.seed, meta.trials, meta.budget
            );
            let _ = writeln!(
                out,
                "# violations={} violation_fraction={} pass_threshold={} passed={}",
                aggregate.violations,
                aggregate.violation_fraction,
                aggregate.pass_threshold,
                aggregate.passed
            );
            out.push_str("trial,seed,max_inverse_error,max_relative_error,violated\n");
            for t in &audit.trials {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    t.trial, t.seed, t.max_inverse_error, t.max_relative_error, t.violated
                );
            }
            out
        }
    }
}

#[derive(Serialize)]
struct BenchMeta {
    epsilon: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta_vertex: Option<f64>,
    seed: u64,
}

#[derive(Serialize)]
struct BenchDoc<'a> {
    meta: BenchMeta,
    records: &'a [BenchRecord],
}

pub fn render_bench(
    records: &[BenchRecord],
    epsilon: f64,
    delta_vertex: Option<f64>,
    seed: u64,
    format: Format,
) -> String {
    match format {
        Format::Json => pretty(&BenchDoc {
            meta: BenchMeta { epsilon, delta_vertex, seed },
            records,
        }),
        Format::Csv => {
            let mut out = String::from("spec,n,m,k,k_over_n,exact_secs,approx_secs,speedup\n");
            for r in records {
                // Generator-spec labels contain commas, so always quote them.
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{},{}",
                    r.spec, r.n, r.m, r.k, r.k_over_n, r.exact_secs, r.approx_secs, r.speedup
                );
            }
            out
        }
    }
}

pub fn render_plan(plan: &SamplePlan, format: Format) -> String {
    match format {
        Format::Json => pretty(plan),
        Format::Csv => {
            let mut out = String::from("n,epsilon,delta_vertex,delta_graph,k\n");
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                plan.n, plan.epsilon, plan.delta_vertex, plan.delta_graph, plan.k
            );
            out
        }
    }
}
