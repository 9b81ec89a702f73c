// SPDX-License-Identifier: Apache-2.0

//! Deterministic graph generators behind a small spec grammar:
//!
//! ```text
//! path:N | cycle:N | star:N | complete:N | tree:ARITY,DEPTH
//!   | er:N,P | ws:N,DEGREE,REWIRE     each optionally @unit | @uniform:LO,HI
//! ```
//!
//! Random families (`er`, `ws`) and uniform weights require a seed; the same
//! spec and seed always produce the same graph. Random families retry or
//! reject moves until the result is connected.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::distr::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Abandon an Erdos-Renyi draw after this many disconnected attempts.
pub const ER_CONNECTIVITY_RETRIES: usize = 100;
/// Redraw a rewiring target at most this many times before keeping the
/// original ring edge.
pub const WS_REWIRE_REDRAWS: usize = 32;
/// Refuse to materialize graphs larger than this.
pub const MAX_GENERATED_VERTICES: usize = 1 << 24;

/// Edge weight assignment for generated graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightModel {
    /// Every edge weighs exactly 1.
    Unit,
    /// Independent draws from `[lo, hi)` with `0 < lo < hi`.
    Uniform { lo: f64, hi: f64 },
}

/// Graph topology family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    /// Complete tree where vertex `i > 0` hangs off `(i - 1) / arity`.
    BalancedTree { arity: usize, depth: usize },
    /// Each pair becomes an edge independently with probability `p`,
    /// redrawn until connected.
    ErdosRenyi { n: usize, p: f64 },
    /// Ring lattice (each vertex tied to `degree` nearest neighbors) with
    /// per-edge rewiring probability `rewire`; rewires that would disconnect
    /// the graph are redrawn, so the edge count is preserved.
    WattsStrogatz { n: usize, degree: usize, rewire: f64 },
}

impl Family {
    fn is_random(self) -> bool {
        matches!(self, Family::ErdosRenyi { .. } | Family::WattsStrogatz { .. })
    }
}

/// A parsed, validated generator recipe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub weights: WeightModel,
    pub seed: Option<u64>,
}

impl GeneratorSpec {
    pub fn new(family: Family) -> Self {
        GeneratorSpec { family, weights: WeightModel::Unit, seed: None }
    }

    pub fn with_weights(mut self, weights: WeightModel) -> Self {
        self.weights = weights;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// True when generation draws randomness (random family or random
    /// weights) and therefore needs a seed.
    pub fn needs_seed(&self) -> bool {
        self.family.is_random() || matches!(self.weights, WeightModel::Uniform { .. })
    }

    /// Parses the `family:params[@weights]` grammar. Seeds are supplied
    /// separately via [`GeneratorSpec::with_seed`].
    pub fn parse(text: &str) -> Result<Self> {
        let (family_text, weight_text) = match text.split_once('@') {
            Some((f, w)) => (f, Some(w)),
            None => (text, None),
        };
        let (name, args) = match family_text.split_once(':') {
            Some((n, a)) => (n, a),
            None => (family_text, ""),
        };
        let family = match name {
            "path" => Family::Path(arg_int(name, 0, split_args(name, args, 1)?[0])?),
            "cycle" => Family::Cycle(arg_int(name, 0, split_args(name, args, 1)?[0])?),
            "star" => Family::Star(arg_int(name, 0, split_args(name, args, 1)?[0])?),
            "complete" => Family::Complete(arg_int(name, 0, split_args(name, args, 1)?[0])?),
            "tree" => {
                let f = split_args(name, args, 2)?;
                Family::BalancedTree {
                    arity: arg_int(name, 0, f[0])?,
                    depth: arg_int(name, 1, f[1])?,
                }
            }
            "er" => {
                let f = split_args(name, args, 2)?;
                Family::ErdosRenyi { n: arg_int(name, 0, f[0])?, p: arg_float(name, 1, f[1])? }
            }
            "ws" => {
                let f = split_args(name, args, 3)?;
                Family::WattsStrogatz {
                    n: arg_int(name, 0, f[0])?,
                    degree: arg_int(name, 1, f[1])?,
                    rewire: arg_float(name, 2, f[2])?,
                }
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown generator family `{other}`; expected one of \
                     path, cycle, star, complete, tree, er, ws"
                )))
            }
        };
        let weights = match weight_text {
            None | Some("unit") => WeightModel::Unit,
            Some(w) => match w.strip_prefix("uniform:") {
                Some(range) => {
                    let f = split_args("uniform", range, 2)?;
                    WeightModel::Uniform {
                        lo: arg_float("uniform", 0, f[0])?,
                        hi: arg_float("uniform", 1, f[1])?,
                    }
                }
                None => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown weight model `{w}`; expected `unit` or `uniform:LO,HI`"
                    )))
                }
            },
        };
        Ok(GeneratorSpec { family, weights, seed: None })
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        match self.family {
            Family::Path(n) | Family::Complete(n) if n < 1 => {
                return fail("path and complete graphs need at least 1 vertex".into());
            }
            Family::Cycle(n) if n < 3 => {
                return fail(format!("a cycle needs at least 3 vertices, got {n}"));
            }
            Family::Star(n) if n < 2 => {
                return fail(format!("a star needs at least 2 vertices, got {n}"));
            }
            Family::BalancedTree { arity, .. } if arity < 2 => {
                return fail(format!("tree arity must be at least 2, got {arity}"));
            }
            Family::ErdosRenyi { n, p } => {
                if n < 2 {
                    return fail(format!("er needs at least 2 vertices, got {n}"));
                }
                if !(0.0..=1.0).contains(&p) {
                    return fail(format!("er probability must lie in [0, 1], got {p}"));
                }
            }
            Family::WattsStrogatz { n, degree, rewire } => {
                if degree < 2 || degree % 2 != 0 {
                    return fail(format!("ws degree must be a positive even number, got {degree}"));
                }
                if degree >= n {
                    return fail(format!("ws degree {degree} must be below the vertex count {n}"));
                }
                if !(0.0..=1.0).contains(&rewire) {
                    return fail(format!("ws rewire probability must lie in [0, 1], got {rewire}"));
                }
            }
            _ => {}
        }
        if let WeightModel::Uniform { lo, hi } = self.weights {
            if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi) {
                return fail(format!(
                    "uniform weights need 0 < LO < HI with both finite, got {lo} and {hi}"
                ));
            }
        }
        if self.needs_seed() && self.seed.is_none() {
            return fail(format!("spec `{self}` draws randomness and needs a seed"));
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Path(n) => write!(f, "path:{n}")?,
            Family::Cycle(n) => write!(f, "cycle:{n}")?,
            Family::Star(n) => write!(f, "star:{n}")?,
            Family::Complete(n) => write!(f, "complete:{n}")?,
            Family::BalancedTree { arity, depth } => write!(f, "tree:{arity},{depth}")?,
            Family::ErdosRenyi { n, p } => write!(f, "er:{n},{p}")?,
            Family::WattsStrogatz { n, degree, rewire } => {
                write!(f, "ws:{n},{degree},{rewire}")?
            }
        }
        if let WeightModel::Uniform { lo, hi } = self.weights {
            write!(f, "@uniform:{lo},{hi}")?;
        }
        Ok(())
    }
}

fn split_args<'a>(name: &str, args: &'a str, expected: usize) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',').collect()
    };
    if parts.len() != expected {
        return Err(Error::InvalidParameter(format!(
            "`{name}` takes {expected} comma-separated argument(s), got {}",
            parts.len()
        )));
    }
    Ok(parts)
}

fn arg_int(name: &str, position: usize, text: &str) -> Result<usize> {
    text.trim().parse().map_err(|_| {
        Error::InvalidParameter(format!(
            "`{name}` argument {} must be an unsigned integer, got `{text}`",
            position + 1
        ))
    })
}

fn arg_float(name: &str, position: usize, text: &str) -> Result<f64> {
    text.trim().parse().map_err(|_| {
        Error::InvalidParameter(format!(
            "`{name}` argument {} must be a number, got `{text}`",
            position + 1
        ))
    })
}

/// Counters for the rejection loops inside random generators.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenerationStats {
    /// Disconnected Erdos-Renyi draws discarded before the final one.
    pub er_retries: usize,
    /// Rewire candidates rolled back because they disconnected the graph.
    pub ws_rewires_rejected: usize,
    /// Ring edges kept in place after every redraw was rejected.
    pub ws_rewires_abandoned: usize,
}

/// Generates the graph described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    Ok(generate_with_stats(spec)?.0)
}

/// Generates the graph and reports rejection-loop counters.
pub fn generate_with_stats(spec: &GeneratorSpec) -> Result<(Graph, GenerationStats)> {
    spec.validate()?;
    let mut rng = spec.seed.map(ChaCha12Rng::seed_from_u64);
    let mut stats = GenerationStats::default();
    let (n, edges) = match spec.family {
        Family::Path(n) => (n, (1..n).map(|v| (v - 1, v)).collect()),
        Family::Cycle(n) => {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((0, n - 1));
            (n, edges)
        }
        Family::Star(n) => (n, (1..n).map(|v| (0, v)).collect()),
        Family::Complete(n) => {
            check_size(n)?;
            let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            (n, edges)
        }
        Family::BalancedTree { arity, depth } => {
            let n = tree_size(arity, depth)?;
            (n, (1..n).map(|v| ((v - 1) / arity, v)).collect())
        }
        Family::ErdosRenyi { n, p } => {
            check_size(n)?;
            let rng = rng.as_mut().expect("validated: random family has a seed");
            (n, erdos_renyi(n, p, rng, &mut stats)?)
        }
        Family::WattsStrogatz { n, degree, rewire } => {
            check_size(n)?;
            let rng = rng.as_mut().expect("validated: random family has a seed");
            (n, watts_strogatz(n, degree, rewire, rng, &mut stats))
        }
    };

    let weighted: Vec<(usize, usize, f64)> = match spec.weights {
        WeightModel::Unit => edges.into_iter().map(|(u, v)| (u, v, 1.0)).collect(),
        WeightModel::Uniform { lo, hi } => {
            let rng = rng.as_mut().expect("validated: uniform weights have a seed");
            let dist = Uniform::new(lo, hi)
                .map_err(|e| Error::InvalidParameter(format!("uniform weights: {e}")))?;
            // Edges are in canonical sorted order here, so the weight stream
            // is a pure function of spec and seed.
            let mut sorted = edges;
            sorted.sort_unstable();
            sorted
                .into_iter()
                .map(|(u, v)| (u, v, dist.sample(rng)))
                .collect()
        }
    };
    let graph = Graph::from_edges(n, false, weighted)?;
    Ok((graph, stats))
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_GENERATED_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "refusing to generate {n} vertices (limit {MAX_GENERATED_VERTICES})"
        )));
    }
    Ok(())
}

fn tree_size(arity: usize, depth: usize) -> Result<usize> {
    let mut total: usize = 0;
    let mut level: usize = 1;
    for _ in 0..=depth {
        total = total
            .checked_add(level)
            .filter(|&t| t <= MAX_GENERATED_VERTICES)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "tree:{arity},{depth} exceeds the {MAX_GENERATED_VERTICES}-vertex limit"
                ))
            })?;
        level = level.saturating_mul(arity);
    }
    Ok(total)
}

/// Independent pair sampling via geometric gap skips (one uniform draw per
/// emitted gap), retried until the result is connected.
fn erdos_renyi(
    n: usize,
    p: f64,
    rng: &mut ChaCha12Rng,
    stats: &mut GenerationStats,
) -> Result<Vec<(usize, usize)>> {
    let total_pairs = n as u64 * (n as u64 - 1) / 2;
    for _ in 0..ER_CONNECTIVITY_RETRIES {
        let edges: Vec<(usize, usize)> = if p >= 1.0 {
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
        } else if p <= 0.0 {
            Vec::new()
        } else {
            let log_keep = (1.0 - p).ln();
            let mut edges = Vec::new();
            let mut pos: u64 = 0;
            loop {
                let r: f64 = rng.random();
                let skip = ((1.0 - r).ln() / log_keep).floor();
                if skip >= (total_pairs - pos.min(total_pairs)) as f64 {
                    break;
                }
                pos += skip as u64;
                if pos >= total_pairs {
                    break;
                }
                edges.push(pair_from_index(n as u64, pos));
                pos += 1;
            }
            edges
        };
        if edges_connected(n, &edges) {
            return Ok(edges);
        }
        stats.er_retries += 1;
    }
    Err(Error::UnsatisfiableSpec(format!(
        "er:{n},{p} stayed disconnected after {ER_CONNECTIVITY_RETRIES} draws; \
         raise p or change the seed"
    )))
}

/// Decodes a linear index into the lexicographic pair `(u, v)`, `u < v`.
fn pair_from_index(n: u64, index: u64) -> (usize, usize) {
    // Pairs starting below `u` occupy cum(u) = u*(2n - u - 1)/2 slots.
    let cum = |u: u64| u * (2 * n - u - 1) / 2;
    let mut u = {
        let b = (2 * n - 1) as f64;
        let disc = (b * b - 8.0 * index as f64).max(0.0);
        (((b - disc.sqrt()) / 2.0) as u64).min(n - 2)
    };
    while u > 0 && cum(u) > index {
        u -= 1;
    }
    while u < n - 2 && cum(u + 1) <= index {
        u += 1;
    }
    let v = u + 1 + (index - cum(u));
    (u as usize, v as usize)
}

/// Ring lattice plus per-edge rewiring. A rewire picks a uniform new target
/// (no self-loops or duplicates) and is rolled back if it disconnects the
/// graph; after [`WS_REWIRE_REDRAWS`] rollbacks the ring edge stays.
fn watts_strogatz(
    n: usize,
    degree: usize,
    rewire: f64,
    rng: &mut ChaCha12Rng,
    stats: &mut GenerationStats,
) -> Vec<(usize, usize)> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for j in 1..=degree / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    for j in 1..=degree / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            if !rng.random_bool(rewire) {
                continue;
            }
            if adj[u].len() >= n - 1 {
                continue; // u already touches every other vertex
            }
            let mut rewired = false;
            for _ in 0..WS_REWIRE_REDRAWS {
                let w = rng.random_range(0..n);
                if w == u || adj[u].contains(&w) {
                    continue;
                }
                adj[u].remove(&v);
                adj[v].remove(&u);
                adj[u].insert(w);
                adj[w].insert(u);
                if adjacency_connected(&adj) {
                    rewired = true;
                    break;
                }
                adj[u].remove(&w);
                adj[w].remove(&u);
                adj[u].insert(v);
                adj[v].insert(u);
                stats.ws_rewires_rejected += 1;
            }
            if !rewired {
                stats.ws_rewires_abandoned += 1;
            }
        }
    }
    let mut edges = Vec::new();
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs.range((u + 1)..) {
            edges.push((u, v));
        }
    }
    edges
}

fn edges_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    reachable_from_zero(n, |u| adj[u].iter().copied()) == n
}

fn adjacency_connected(adj: &[BTreeSet<usize>]) -> bool {
    reachable_from_zero(adj.len(), |u| adj[u].iter().copied()) == adj.len()
}

fn reachable_from_zero<I, F>(n: usize, neighbors: F) -> usize
where
    I: Iterator<Item = usize>,
    F: Fn(usize) -> I,
{
    if n == 0 {
        return 0;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for v in neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count
}
