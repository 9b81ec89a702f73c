// SPDX-License-Identifier: Apache-2.0

//! Python bindings for the closeness-centrality toolkit: graph loading and
//! generation, the exact all-sources sweep, the seeded sampling estimator
//! with its sample-size planner, and the empirical error audit.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use centrality_core as core;

fn to_py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::Io(inner) => PyIOError::new_err(inner.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Connected weighted graph with vertices `0..n`.
#[pyclass(name = "Graph", module = "centrality_rs")]
pub struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    /// Parses an edge list (`u v [weight]` per line, `#` comments allowed).
    #[staticmethod]
    #[pyo3(signature = (text, directed = false))]
    fn from_edge_list(text: &str, directed: bool) -> PyResult<Self> {
        let (inner, _) = core::load_edge_list(text.as_bytes(), directed).map_err(to_py_err)?;
        Ok(PyGraph { inner })
    }

    /// Reads an edge-list file.
    #[staticmethod]
    #[pyo3(signature = (path, directed = false))]
    fn load(path: &str, directed: bool) -> PyResult<Self> {
        let file = std::fs::File::open(path).map_err(|e| PyIOError::new_err(e.to_string()))?;
        let (inner, _) = core::load_edge_list(std::io::BufReader::new(file), directed)
            .map_err(to_py_err)?;
        Ok(PyGraph { inner })
    }

    /// Builds a graph from a generator spec such as `"ws:500,6,0.1"` or
    /// `"er:1000,0.01@uniform:0.5,1.5"`. Random families need a seed.
    #[staticmethod]
    #[pyo3(signature = (spec, seed = None))]
    fn generate(spec: &str, seed: Option<u64>) -> PyResult<Self> {
        let mut parsed = core::GeneratorSpec::parse(spec).map_err(to_py_err)?;
        if let Some(seed) = seed {
            parsed = parsed.with_seed(seed);
        }
        let inner = core::generate(&parsed).map_err(to_py_err)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn directed(&self) -> bool {
        self.inner.is_directed()
    }

    #[getter]
    fn unit_weights(&self) -> bool {
        self.inner.has_unit_weights()
    }

    fn is_connected(&self) -> bool {
        core::check_connected(&self.inner).connected
    }

    /// Edge list in the same `u v w` format the loader accepts.
    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list_string()
    }

    /// Distances from one source to every vertex (inf when unreachable).
    fn distances_from(&self, source: usize) -> PyResult<Vec<f64>> {
        Ok(core::sssp(&self.inner, source).map_err(to_py_err)?.dist)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, directed={})",
            self.inner.n(),
            self.inner.edge_count(),
            self.inner.is_directed()
        )
    }
}

/// Sample-count recommendation for an accuracy target.
#[pyclass(name = "SamplePlan", module = "centrality_rs", frozen)]
pub struct PySamplePlan {
    #[pyo3(get)]
    n: usize,
    #[pyo3(get)]
    epsilon: f64,
    #[pyo3(get)]
    delta_vertex: f64,
    #[pyo3(get)]
    delta_graph: f64,
    #[pyo3(get)]
    k: usize,
}

#[pymethods]
impl PySamplePlan {
    fn __repr__(&self) -> String {
        format!(
            "SamplePlan(n={}, epsilon={}, delta_vertex={}, delta_graph={}, k={})",
            self.n, self.epsilon, self.delta_vertex, self.delta_graph, self.k
        )
    }
}

impl From<core::SamplePlan> for PySamplePlan {
    fn from(p: core::SamplePlan) -> Self {
        PySamplePlan {
            n: p.n,
            epsilon: p.epsilon,
            delta_vertex: p.delta_vertex,
            delta_graph: p.delta_graph,
            k: p.k,
        }
    }
}

/// Outcome of an empirical error audit.
#[pyclass(name = "AuditSummary", module = "centrality_rs", frozen)]
pub struct PyAuditSummary {
    #[pyo3(get)]
    n: usize,
    #[pyo3(get)]
    m: usize,
    #[pyo3(get)]
    diameter: f64,
    #[pyo3(get)]
    epsilon: f64,
    #[pyo3(get)]
    delta_vertex: f64,
    #[pyo3(get)]
    delta_graph: f64,
    #[pyo3(get)]
    k: usize,
    #[pyo3(get)]
    seed: u64,
    #[pyo3(get)]
    budget: f64,
    #[pyo3(get)]
    trials: usize,
    #[pyo3(get)]
    violations: usize,
    #[pyo3(get)]
    violation_fraction: f64,
    #[pyo3(get)]
    pass_threshold: f64,
    #[pyo3(get)]
    passed: bool,
    /// Per-trial largest reciprocal-scale deviation.
    #[pyo3(get)]
    max_inverse_errors: Vec<f64>,
    /// Per-trial largest relative error over finite estimates.
    #[pyo3(get)]
    max_relative_errors: Vec<f64>,
}

#[pymethods]
impl PyAuditSummary {
    fn __repr__(&self) -> String {
        format!(
            "AuditSummary(n={}, k={}, trials={}, violations={}, passed={})",
            self.n, self.k, self.trials, self.violations, self.passed
        )
    }
}

/// Exact closeness centrality for every vertex.
#[pyfunction]
fn exact_centrality(g: &PyGraph) -> PyResult<Vec<f64>> {
    Ok(core::exact_centrality(&g.inner).map_err(to_py_err)?.values)
}

/// Exact diameter from the all-sources sweep.
#[pyfunction]
fn exact_diameter(g: &PyGraph) -> PyResult<f64> {
    Ok(core::exact_diameter(&g.inner).map_err(to_py_err)?.lower)
}

/// `(lower, upper)` diameter bracket from one shortest-path run.
#[pyfunction]
#[pyo3(signature = (g, probe = 0))]
fn diameter_bounds(g: &PyGraph, probe: usize) -> PyResult<(f64, f64)> {
    let info = core::diameter_upper_bound(&g.inner, probe).map_err(to_py_err)?;
    Ok((info.lower, info.upper))
}

/// Smallest sample count meeting the `(epsilon, delta)` accuracy target;
/// `delta` defaults to `1/n^2`.
#[pyfunction]
#[pyo3(signature = (n, epsilon, delta = None))]
fn sample_size(n: usize, epsilon: f64, delta: Option<f64>) -> PyResult<PySamplePlan> {
    let delta = delta.unwrap_or_else(|| core::default_delta_vertex(n.max(1)));
    Ok(core::sample_size(n, epsilon, delta).map_err(to_py_err)?.into())
}

/// The seeded source draw the estimator uses: `k` uniform picks from `0..n`
/// with replacement.
#[pyfunction]
fn draw_sources(n: usize, k: usize, seed: u64) -> PyResult<Vec<usize>> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(core::draw_sources(n, k, seed))
}

/// Estimated centrality from `k` seeded uniform source draws. Vertices whose
/// sampled distance sum is zero come back as `inf`.
#[pyfunction]
#[pyo3(signature = (g, k, seed = 0))]
fn estimate_centrality(g: &PyGraph, k: usize, seed: u64) -> PyResult<Vec<f64>> {
    let (report, _) = core::estimate_centrality(&g.inner, k, seed).map_err(to_py_err)?;
    Ok(report.values)
}

/// Estimated centrality from caller-chosen sources (repeats allowed).
#[pyfunction]
fn estimate_with_sources(g: &PyGraph, sources: Vec<usize>) -> PyResult<Vec<f64>> {
    let (report, _) = core::estimate_with_sources(&g.inner, &sources).map_err(to_py_err)?;
    Ok(report.values)
}

/// Plans the sample count for `(epsilon, delta)`, runs the estimator, and
/// returns `(values, plan)`. `delta` defaults to `1/n^2`.
#[pyfunction]
#[pyo3(signature = (g, epsilon, delta = None, seed = 0))]
fn estimate_with_plan(
    g: &PyGraph,
    epsilon: f64,
    delta: Option<f64>,
    seed: u64,
) -> PyResult<(Vec<f64>, PySamplePlan)> {
    let delta = delta.unwrap_or_else(|| core::default_delta_vertex(g.inner.n().max(1)));
    let (report, plan, _) =
        core::estimate_with_plan(&g.inner, epsilon, delta, seed).map_err(to_py_err)?;
    Ok((report.values, plan.into()))
}

/// Repeatedly re-estimates with fresh derived seeds and checks every vertex
/// against the reciprocal-scale budget `epsilon * diameter`.
#[pyfunction]
#[pyo3(signature = (g, epsilon, trials = 100, seed = 0, delta = None, k_override = None, cap = None))]
fn audit(
    g: &PyGraph,
    epsilon: f64,
    trials: usize,
    seed: u64,
    delta: Option<f64>,
    k_override: Option<usize>,
    cap: Option<usize>,
) -> PyResult<PyAuditSummary> {
    let opts = core::AuditOptions {
        delta_vertex: delta,
        k_override,
        cap: cap.unwrap_or(core::DEFAULT_AUDIT_CAP),
        ..core::AuditOptions::new(epsilon, trials, seed)
    };
    let a = core::run_audit(&g.inner, &opts).map_err(to_py_err)?;
    Ok(PyAuditSummary {
        n: a.fingerprint.n,
        m: a.fingerprint.m,
        diameter: a.fingerprint.diameter,
        epsilon: a.epsilon,
        delta_vertex: a.delta_vertex,
        delta_graph: a.delta_graph,
        k: a.k,
        seed: a.seed,
        budget: a.budget,
        trials: a.trials.len(),
        violations: a.violations,
        violation_fraction: a.violation_fraction,
        pass_threshold: a.pass_threshold,
        passed: a.passed,
        max_inverse_errors: a.trials.iter().map(|t| t.max_inverse_error).collect(),
        max_relative_errors: a.trials.iter().map(|t| t.max_relative_error).collect(),
    })
}

#[pymodule]
fn centrality_rs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PySamplePlan>()?;
    m.add_class::<PyAuditSummary>()?;
    m.add_function(wrap_pyfunction!(exact_centrality, m)?)?;
    m.add_function(wrap_pyfunction!(exact_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(diameter_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(sample_size, m)?)?;
    m.add_function(wrap_pyfunction!(draw_sources, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_centrality, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_with_sources, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_with_plan, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add("RNG_FAMILY", core::RNG_FAMILY)?;
    Ok(())
}
