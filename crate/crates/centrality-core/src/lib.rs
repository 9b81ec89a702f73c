// SPDX-License-Identifier: Apache-2.0

//! Closeness centrality for connected weighted graphs, two ways: an exact
//! all-sources sweep, and a sampling estimator that runs shortest paths from
//! `k` random sources with `k` chosen so every vertex's reciprocal closeness
//! lands within `epsilon * diameter` of the truth with high probability.
//! Graph generators and an empirical error audit round out the toolkit.
//!
//! ```
//! use centrality_core::{estimate_with_plan, exact_centrality, generate, GeneratorSpec};
//!
//! let spec = GeneratorSpec::parse("ws:100,6,0.1").unwrap().with_seed(7);
//! let g = generate(&spec).unwrap();
//! let exact = exact_centrality(&g).unwrap();
//! let (sampled, plan, _trace) = estimate_with_plan(&g, 0.3, 1e-4, 42).unwrap();
//! assert_eq!(sampled.values.len(), exact.values.len());
//! assert!(plan.k < 100);
//! ```

pub mod audit;
pub mod bench;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
#[cfg(any(test, feature = "oracles"))]
pub mod oracles;
pub mod sampling;
pub mod sssp;

pub use audit::{
    binomial_pass_threshold, derive_trial_seed, run_audit, AuditOptions, ErrorAudit,
    GraphFingerprint, TrialRecord, DEFAULT_AUDIT_CAP,
};
pub use bench::{bench_graph, median_of_three, BenchRecord};
pub use error::{Error, Result};
pub use exact::{
    diameter_upper_bound, exact_analysis, exact_centrality, exact_diameter, CentralityReport,
    DiameterInfo, ExactAnalysis, Method, RankedRow,
};
pub use generate::{
    generate, generate_with_stats, Family, GenerationStats, GeneratorSpec, WeightModel,
};
pub use graph::{
    check_connected, load_edge_list, ConnectivityCertificate, Graph, GraphBuilder, LabelMap,
    LoadReport,
};
pub use sampling::{
    default_delta_vertex, draw_sources, estimate_centrality, estimate_with_plan,
    estimate_with_sources, sample_size, SamplePlan, SampleTrace, RNG_FAMILY,
};
pub use sssp::{eccentricity, sssp, DistanceVector};
