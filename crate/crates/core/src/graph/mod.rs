//! Simple undirected graphs on dense vertex ids `0..n`.

mod base;
mod bfs;
mod bridges;
pub mod io;

pub use base::{base_graph, BaseGraph};
pub use bfs::{bfs_distances, bfs_excluding, distance_after_deletion, DistanceLayers};
pub use bridges::{bridges, bridges_naive};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", from = "[Vertex; 2]")]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Canonicalizes the endpoint order. Panics on a loop.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            debug_assert_eq!(x, self.v);
            self.u
        }
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl From<[Vertex; 2]> for Edge {
    fn from([a, b]: [Vertex; 2]) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple undirected graph.
///
/// Adjacency lists are sorted; `edges` is sorted lexicographically and every
/// adjacency entry carries the index of its edge in `edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    adj_ids: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs (in either orientation)
    /// collapse to one edge.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut lists: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            lists[e.u].push((e.v, id));
            lists[e.v].push((e.u, id));
        }
        let (adj, adj_ids): (Vec<Vec<Vertex>>, Vec<Vec<usize>>) = lists
            .into_iter()
            .map(|mut list| {
                list.sort_unstable();
                list.into_iter().unzip()
            })
            .unzip();

        Ok(Graph { adj, adj_ids, edges })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges in lexicographic order, each once as `(min, max)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, x: Vertex) -> &[Vertex] {
        &self.adj[x]
    }

    /// Neighbors of `x` paired with the index of the connecting edge.
    pub fn incident(&self, x: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.adj[x].iter().copied().zip(self.adj_ids[x].iter().copied())
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.adj[x].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n() && b < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of edge `ab` in [`Graph::edges`].
    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if a >= self.n() {
            return None;
        }
        self.adj[a].binary_search(&b).ok().map(|pos| self.adj_ids[a][pos])
    }

    pub fn check_vertex(&self, x: Vertex) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(Error::OutOfRange { vertex: x, n: self.n() })
        }
    }

    pub fn check_edge(&self, e: Edge) -> Result<usize> {
        self.edge_index(e.u, e.v).ok_or(Error::EdgeNotPresent(e))
    }

    /// `(δ, Δ)`; `(0, 0)` for the graph without vertices.
    pub fn degree_extremes(&self) -> (usize, usize) {
        let degrees = self.adj.iter().map(Vec::len);
        (degrees.clone().min().unwrap_or(0), degrees.max().unwrap_or(0))
    }

    /// Component sizes, ordered by smallest member.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_sizes().len() <= 1
    }

    /// Returns `Err(Disconnected)` carrying the component sizes.
    pub fn require_connected(&self) -> Result<()> {
        let sizes = self.component_sizes();
        if sizes.len() <= 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { sizes })
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * n.saturating_sub(1) / 2
    }

    pub fn is_regular(&self) -> Option<usize> {
        let (lo, hi) = self.degree_extremes();
        (lo == hi).then_some(lo)
    }

    /// Subgraph induced by `keep`, relabelled in increasing order of the kept
    /// ids. Returns the graph and the old ids of its vertices.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices().filter(|&x| keep[x]).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &x) in old.iter().enumerate() {
            new_id[x] = i;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|e| keep[e.u] && keep[e.v])
            .map(|e| (new_id[e.u], new_id[e.v]));
        let g = Graph::new(old.len(), pairs).expect("induced subgraph of a valid graph");
        (g, old)
    }

    /// Applies a vertex permutation: vertex `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n());
        Graph::new(self.n(), self.edges.iter().map(|e| (perm[e.u], perm[e.v])))
    }
}
