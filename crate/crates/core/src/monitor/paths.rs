//! Shortest-path enumeration for desk-scale checks of the incident-only
//! characterization of `EM(x)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bfs_excluding, Edge, Graph, Vertex};

/// Path multiplicity allowed per vertex pair before reporting `Overflow`.
pub const PATH_CAP: usize = 100_000;

/// All shortest `x`-`y` paths, each listed from `x` to `y`, in lexicographic
/// order. Empty if `y` is unreachable.
pub fn shortest_paths(g: &Graph, x: Vertex, y: Vertex, cap: usize) -> Result<Vec<Vec<Vertex>>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let dist = bfs_excluding(g, x, None);
    let Some(dy) = dist[y] else { return Ok(Vec::new()) };

    // Count first so that a blow-up is reported before enumerating.
    let mut order: Vec<Vertex> = g.vertices().filter(|&w| dist[w].is_some()).collect();
    order.sort_by_key(|&w| dist[w]);
    let mut count = vec![0usize; g.n()];
    count[x] = 1;
    for &w in &order[1..] {
        let dw = dist[w].unwrap();
        count[w] = g
            .neighbors(w)
            .iter()
            .filter(|&&p| dist[p] == Some(dw - 1))
            .fold(0usize, |acc, &p| acc.saturating_add(count[p]));
    }
    if count[y] > cap {
        return Err(Error::Overflow { from: x, to: y, cap });
    }

    let mut out = Vec::with_capacity(count[y]);
    let mut path = vec![y];
    extend_back(g, &dist, x, dy, &mut path, &mut out);
    out.sort();
    Ok(out)
}

fn extend_back(
    g: &Graph,
    dist: &[Option<u32>],
    x: Vertex,
    d: u32,
    path: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    let w = *path.last().unwrap();
    if w == x {
        out.push(path.iter().rev().copied().collect());
        return;
    }
    for &p in g.neighbors(w) {
        if dist[p] == Some(d - 1) {
            path.push(p);
            extend_back(g, dist, x, d - 1, path, out);
            path.pop();
        }
    }
}

fn path_edges(p: &[Vertex]) -> BTreeSet<Edge> {
    p.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
}

/// How much two shortest paths may overlap in [`incident_only_condition`].
///
/// With `AtMostOneEdge` the condition is necessary but not sufficient for
/// `EM(x)` to be the edges at `x`: in a 4-cycle `0-1-3-2` with a pendant
/// vertex `4` on `0`, the paths `3-1-0-4` and `3-2-0-4` share one edge, yet
/// the bridge `0-4` is in `EM(3)`. `EdgeDisjoint` makes it an equivalence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PathSharing {
    AtMostOneEdge,
    #[default]
    EdgeDisjoint,
}

/// Whether two distinct shortest `x`-`y` paths overlap no more than
/// `sharing` allows.
pub fn two_shortest_paths(g: &Graph, x: Vertex, y: Vertex, cap: usize, sharing: PathSharing) -> Result<bool> {
    let limit = match sharing {
        PathSharing::AtMostOneEdge => 1,
        PathSharing::EdgeDisjoint => 0,
    };
    let paths: Vec<BTreeSet<Edge>> =
        shortest_paths(g, x, y, cap)?.iter().map(|p| path_edges(p)).collect();
    for (i, a) in paths.iter().enumerate() {
        for b in &paths[i + 1..] {
            if a.intersection(b).count() <= limit {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// For every `y` outside `N[x]`, two shortest `x`-`y` paths exist that
/// overlap no more than `sharing` allows.
pub fn incident_only_condition(g: &Graph, x: Vertex, cap: usize, sharing: PathSharing) -> Result<bool> {
    g.check_vertex(x)?;
    for y in g.vertices() {
        if y == x || g.has_edge(x, y) {
            continue;
        }
        if !two_shortest_paths(g, x, y, cap, sharing)? {
            return Ok(false);
        }
    }
    Ok(true)
}
