use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bfs_excluding, Edge, Graph, Vertex};

/// `P(M, e)`: ordered pairs `(x, y)`, `x ∈ M`, whose distance changes when
/// `e` is deleted. A pair that becomes disconnected counts as changed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSet {
    pub monitors: BTreeSet<Vertex>,
    pub edge: Edge,
    pub pairs: BTreeSet<(Vertex, Vertex)>,
}

impl PairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl Serialize for PairSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PairSet", 4)?;
        st.serialize_field("monitors", &self.monitors)?;
        st.serialize_field("edge", &self.edge)?;
        st.serialize_field("pairs", &self.pairs)?;
        st.serialize_field("size", &self.pairs.len())?;
        st.end()
    }
}

fn collect_monitors(g: &Graph, monitors: &[Vertex]) -> Result<BTreeSet<Vertex>> {
    monitors.iter().map(|&x| g.check_vertex(x).map(|_| x)).collect()
}

/// One BFS per monitor on `G` and on `G - e`.
pub fn p_set(g: &Graph, monitors: &[Vertex], e: Edge) -> Result<PairSet> {
    let id = g.check_edge(e)?;
    let monitors = collect_monitors(g, monitors)?;
    let mut pairs = BTreeSet::new();
    for &x in &monitors {
        let before = bfs_excluding(g, x, None);
        let after = bfs_excluding(g, x, Some(id));
        pairs.extend(g.vertices().filter(|&y| before[y] != after[y]).map(|y| (x, y)));
    }
    Ok(PairSet { monitors, edge: e, pairs })
}

/// Why a monitor sees no change for an edge `uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroCause {
    /// `d(x, u) = d(x, v)`.
    Equidistant,
    /// The endpoints are at different distances, and the farther one keeps its
    /// distance in `G - uv`.
    FarEndpointUnchanged,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroReason {
    /// `M` is empty.
    pub empty_monitor_set: bool,
    pub per_monitor: Vec<(Vertex, ZeroCause)>,
}

impl ZeroReason {
    /// Every monitor is equidistant from the endpoints.
    pub fn all_equidistant(&self) -> bool {
        !self.empty_monitor_set && self.per_monitor.iter().all(|(_, c)| *c == ZeroCause::Equidistant)
    }
}

/// Classifies, monitor by monitor, why `P(M, e)` is empty. Fails with
/// `NotZero` if it is not.
pub fn p_set_size_zero_reason(g: &Graph, monitors: &[Vertex], e: Edge) -> Result<ZeroReason> {
    let p = p_set(g, monitors, e)?;
    if !p.is_empty() {
        return Err(Error::NotZero(p.len()));
    }
    let id = g.check_edge(e)?;
    let per_monitor = p
        .monitors
        .iter()
        .map(|&x| {
            let d = bfs_excluding(g, x, None);
            if d[e.u] == d[e.v] {
                return (x, ZeroCause::Equidistant);
            }
            let far = if d[e.u] > d[e.v] { e.u } else { e.v };
            debug_assert_eq!(bfs_excluding(g, x, Some(id))[far], d[far]);
            (x, ZeroCause::FarEndpointUnchanged)
        })
        .collect();
    Ok(ZeroReason { empty_monitor_set: p.monitors.is_empty(), per_monitor })
}
