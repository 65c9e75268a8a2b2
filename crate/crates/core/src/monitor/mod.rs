//! Edges monitored by a vertex (`EM(x)`), the pair sets `P(M, e)` and
//! monitoring certificates.

mod certificate;
pub mod exclusion;
mod pairs;
pub mod paths;

pub use certificate::{is_monitoring_set, MonitoringCertificate, Witness};
pub use pairs::{p_set, p_set_size_zero_reason, PairSet, ZeroCause, ZeroReason};

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::{bfs_excluding, Edge, Graph, Vertex};

/// The edges monitored by a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmSet {
    pub monitor: Vertex,
    pub edges: BTreeSet<Edge>,
}

impl EmSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }
}

impl Serialize for EmSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EmSet", 3)?;
        st.serialize_field("monitor", &self.monitor)?;
        st.serialize_field("edges", &self.edges)?;
        st.serialize_field("size", &self.edges.len())?;
        st.end()
    }
}

/// `EM(x)` from a single BFS: an edge `uv` with `d(x,u) = d(x,v) + 1` is
/// monitored exactly when `v` is the only neighbor of `u` one level closer
/// to `x`. Edges inside a level are never monitored.
pub fn em_set(g: &Graph, x: Vertex) -> Result<EmSet> {
    g.check_vertex(x)?;
    g.require_connected()?;
    Ok(em_set_unchecked(g, x))
}

pub(crate) fn em_set_unchecked(g: &Graph, x: Vertex) -> EmSet {
    let dist = bfs_excluding(g, x, None);
    let mut edges = BTreeSet::new();
    for u in g.vertices() {
        let Some(du) = dist[u] else { continue };
        if du == 0 {
            continue;
        }
        let mut parents = g.neighbors(u).iter().filter(|&&w| dist[w] == Some(du - 1));
        if let (Some(&p), None) = (parents.next(), parents.next()) {
            edges.insert(Edge::new(u, p));
        }
    }
    EmSet { monitor: x, edges }
}

/// `EM(x)` straight from the definition: delete each edge and compare all
/// distances from `x`. O(m (n + m)).
pub fn em_set_naive(g: &Graph, x: Vertex) -> Result<EmSet> {
    g.check_vertex(x)?;
    g.require_connected()?;
    let before = bfs_excluding(g, x, None);
    let edges = (0..g.m())
        .filter(|&id| bfs_excluding(g, x, Some(id)) != before)
        .map(|id| g.edges()[id])
        .collect();
    Ok(EmSet { monitor: x, edges })
}

/// `EM(x)` for every vertex, computed in parallel.
pub fn em_sets_all(g: &Graph) -> Result<Vec<EmSet>> {
    g.require_connected()?;
    Ok(g.vertices().into_par_iter().map(|x| em_set_unchecked(g, x)).collect())
}
