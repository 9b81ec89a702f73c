// SPDX-License-Identifier: Apache-2.0

//! Error type shared by every module in this crate.

use thiserror::Error;

/// All failure modes surfaced by graph loading, analysis, and generation.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list input. `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Edge weight outside the accepted domain (finite, non-negative).
    #[error("invalid edge weight {0}: weights must be finite and non-negative")]
    InvalidWeight(f64),

    /// A vertex id at or above the graph's vertex count.
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// The graph is not connected; `witness` is unreachable from vertex 0.
    #[error("graph is not connected: vertex {witness} is unreachable")]
    Disconnected { witness: usize },

    /// Centrality is undefined below two vertices.
    #[error("graph has {n} vertices; at least 2 are required")]
    GraphTooSmall { n: usize },

    /// A caller-supplied parameter outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A generator spec that cannot produce a graph meeting its guarantees.
    #[error("unsatisfiable generator spec: {0}")]
    UnsatisfiableSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
