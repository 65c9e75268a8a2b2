use thiserror::Error;

use crate::graph::{Edge, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("edge ({}, {}) is not present in the graph", .0.u, .0.v)]
    EdgeNotPresent(Edge),

    /// The operation needs a connected graph. `sizes` lists the component
    /// sizes in order of their smallest vertex.
    #[error("graph is disconnected: {} components with sizes {sizes:?}", sizes.len())]
    Disconnected { sizes: Vec<usize> },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("P(M, e) is not empty ({0} pairs)")]
    NotZero(usize),

    #[error("graph is a tree (dem = 1); the operation needs a cycle")]
    IsTree,

    #[error("{what} needs at most {limit} vertices, got {n}")]
    TooLarge { what: &'static str, limit: usize, n: usize },

    #[error("more than {cap} shortest paths between {from} and {to}")]
    Overflow { from: Vertex, to: Vertex, cap: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
