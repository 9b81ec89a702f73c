// SPDX-License-Identifier: Apache-2.0

//! Weighted graph storage, edge-list ingestion, and connectivity checking.
//!
//! Vertices are dense ids `0..n`. Undirected graphs store each edge in both
//! endpoint lists with the same weight. Duplicate input edges collapse to the
//! minimum weight and self-loops are dropped; both are counted in
//! [`LoadReport`] rather than treated as errors.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};

/// Immutable weighted graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    directed: bool,
    adj: Vec<Vec<(usize, f64)>>,
    edge_count: usize,
    unit_weights: bool,
}

impl Graph {
    /// Builds a graph over at least `n` vertices from an edge iterator.
    ///
    /// Duplicate edges collapse to the minimum weight and self-loops are
    /// dropped, as in [`load_edge_list`].
    pub fn from_edges<I>(n: usize, directed: bool, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut builder = GraphBuilder::new(directed);
        if n > 0 {
            builder.ensure_vertex(n - 1);
        }
        for (u, v, w) in edges {
            builder.add_edge(u, v, w)?;
        }
        Ok(builder.build().0)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct edges (each undirected edge counted once).
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// True when every stored weight equals 1.0 exactly.
    pub fn has_unit_weights(&self) -> bool {
        self.unit_weights
    }

    /// Out-neighbors of `u` as `(vertex, weight)` pairs, sorted by vertex id.
    pub fn neighbors(&self, u: usize) -> &[(usize, f64)] {
        &self.adj[u]
    }

    /// Serializes as one `u v w` line per edge, sorted by `(u, v)`, with
    /// weights printed in shortest round-trip form.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for u in 0..self.n {
            for &(v, w) in &self.adj[u] {
                if self.directed || u < v {
                    writeln!(out, "{} {} {}", u, v, w)?;
                }
            }
        }
        Ok(())
    }

    /// [`Graph::write_edge_list`] into a `String`.
    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("write to Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ASCII")
    }
}

/// What was discarded while assembling a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

/// Incremental graph assembly with validation.
#[derive(Debug)]
pub struct GraphBuilder {
    directed: bool,
    max_vertex: Option<usize>,
    edges: BTreeMap<(usize, usize), f64>,
    report: LoadReport,
}

impl GraphBuilder {
    pub fn new(directed: bool) -> Self {
        GraphBuilder {
            directed,
            max_vertex: None,
            edges: BTreeMap::new(),
            report: LoadReport::default(),
        }
    }

    /// Grows the vertex range to include `v` without adding edges.
    pub fn ensure_vertex(&mut self, v: usize) {
        self.max_vertex = Some(self.max_vertex.map_or(v, |m| m.max(v)));
    }

    /// Adds an edge, collapsing duplicates to the minimum weight. Self-loops
    /// are counted and dropped. Rejects non-finite or negative weights.
    pub fn add_edge(&mut self, u: usize, v: usize, w: f64) -> Result<()> {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidWeight(w));
        }
        self.ensure_vertex(u);
        self.ensure_vertex(v);
        if u == v {
            self.report.self_loops_dropped += 1;
            return Ok(());
        }
        let key = if self.directed || u < v { (u, v) } else { (v, u) };
        match self.edges.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(w);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                self.report.duplicates_collapsed += 1;
                if w < *slot.get() {
                    slot.insert(w);
                }
            }
        }
        Ok(())
    }

    pub fn build(self) -> (Graph, LoadReport) {
        let n = self.max_vertex.map_or(0, |m| m + 1);
        let mut adj = vec![Vec::new(); n];
        let mut unit_weights = true;
        for (&(u, v), &w) in &self.edges {
            if w != 1.0 {
                unit_weights = false;
            }
            adj[u].push((v, w));
            if !self.directed {
                adj[v].push((u, w));
            }
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(v, _)| v);
        }
        let graph = Graph {
            n,
            directed: self.directed,
            edge_count: self.edges.len(),
            adj,
            unit_weights,
        };
        (graph, self.report)
    }
}

/// Parses whitespace-separated `u v [w]` lines; `w` defaults to 1. Blank
/// lines and lines starting with `#` are skipped. The vertex count is
/// `max id + 1`.
pub fn load_edge_list<R: BufRead>(reader: R, directed: bool) -> Result<(Graph, LoadReport)> {
    let mut builder = GraphBuilder::new(directed);
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let parse = |field: &str, token: Option<&str>| -> Result<f64> {
            let token = token.ok_or_else(|| Error::Parse {
                line: lineno,
                message: format!("missing {field}: expected `u v` or `u v w`"),
            })?;
            token.parse::<f64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("cannot parse {field} from `{token}`"),
            })
        };
        let mut tokens = text.split_whitespace();
        let u = parse_vertex("source vertex", tokens.next(), lineno)?;
        let v = parse_vertex("target vertex", tokens.next(), lineno)?;
        let w = match tokens.next() {
            Some(tok) => parse("weight", Some(tok))?,
            None => 1.0,
        };
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("unexpected trailing token `{extra}`"),
            });
        }
        builder.add_edge(u, v, w).map_err(|e| match e {
            Error::InvalidWeight(w) => Error::Parse {
                line: lineno,
                message: format!("invalid weight {w}: weights must be finite and non-negative"),
            },
            other => other,
        })?;
    }
    Ok(builder.build())
}

fn parse_vertex(field: &str, token: Option<&str>, lineno: usize) -> Result<usize> {
    let token = token.ok_or_else(|| Error::Parse {
        line: lineno,
        message: format!("missing {field}: expected `u v` or `u v w`"),
    })?;
    token.parse::<usize>().map_err(|_| Error::Parse {
        line: lineno,
        message: format!("cannot parse {field} from `{token}`"),
    })
}

/// Outcome of a connectivity check. `witness` names an unreachable vertex
/// when the graph is disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityCertificate {
    pub connected: bool,
    pub witness: Option<usize>,
}

impl ConnectivityCertificate {
    /// Converts a negative certificate into [`Error::Disconnected`].
    pub fn require(self) -> Result<()> {
        match self.witness {
            None => Ok(()),
            Some(witness) => Err(Error::Disconnected { witness }),
        }
    }
}

/// Breadth-first reachability from vertex 0 along out-edges. Graphs with at
/// most one vertex are connected by convention.
pub fn check_connected(g: &Graph) -> ConnectivityCertificate {
    if g.n() <= 1 {
        return ConnectivityCertificate { connected: true, witness: None };
    }
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &(v, _) in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    if count == g.n() {
        ConnectivityCertificate { connected: true, witness: None }
    } else {
        let witness = seen.iter().position(|&s| !s);
        ConnectivityCertificate { connected: false, witness }
    }
}

/// Side table mapping external string labels to dense vertex ids, for inputs
/// whose vertices are not already numbered `0..n`.
#[derive(Debug, Clone, Default)]
pub struct LabelMap {
    ids: HashMap<String, usize>,
    labels: Vec<String>,
}

impl LabelMap {
    pub fn new() -> Self {
        LabelMap::default()
    }

    /// Returns the id for `label`, assigning the next free id on first use.
    pub fn intern(&mut self, label: &str) -> usize {
        match self.ids.entry(label.to_owned()) {
            Entry::Occupied(e) => *e.get(),
            Entry::Vacant(e) => {
                let id = self.labels.len();
                self.labels.push(label.to_owned());
                e.insert(id);
                id
            }
        }
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: usize) -> Option<&str> {
        self.labels.get(id).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}
