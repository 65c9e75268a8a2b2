use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::monitor::em_sets_all;

const CLIQUE_LIMIT: usize = 64;
const COVER_LIMIT: usize = 40;

/// Lower and upper bounds on `dem(G)`. Fields whose computation is guarded
/// by a size limit are `None` past the limit and listed in `skipped`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    /// `⌈m / (n-1)⌉`.
    pub density_lb: usize,
    pub clique_number: Option<usize>,
    /// `⌈ω / 2⌉`.
    pub clique_lb: Option<usize>,
    /// `β`, the vertex cover number.
    pub vertex_cover_ub: Option<usize>,
    pub independence_number: Option<usize>,
    /// `n - α`.
    pub gallai_ub: Option<usize>,
    /// `2 (m - n + 1)`; not applicable to trees.
    pub feedback_ub: Option<usize>,
    /// `⌈r n / (2n - 2)⌉` for `r`-regular graphs.
    pub regular_lb: Option<usize>,
    pub em_per_vertex: BTreeMap<Vertex, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl BoundsReport {
    pub fn lower(&self) -> usize {
        [Some(self.density_lb), self.clique_lb, self.regular_lb]
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0)
    }

    pub fn upper(&self) -> Option<usize> {
        [self.vertex_cover_ub, self.gallai_ub, self.feedback_ub].into_iter().flatten().min()
    }
}

pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    g.require_connected()?;
    let (n, m) = (g.n(), g.m());
    let mut skipped = Vec::new();
    let mut guarded = |r: Result<usize>| match r {
        Ok(v) => Some(v),
        Err(e) => {
            skipped.push(e.to_string());
            None
        }
    };
    let omega = guarded(clique_number(g));
    let beta = guarded(vertex_cover_number(g));
    let alpha = guarded(independence_number(g));

    let em_per_vertex = em_sets_all(g)?.into_iter().map(|s| (s.monitor, s.len())).collect();
    Ok(BoundsReport {
        n,
        m,
        density_lb: if n > 1 { m.div_ceil(n - 1) } else { 0 },
        clique_number: omega,
        clique_lb: omega.map(|w| w.div_ceil(2)),
        vertex_cover_ub: beta,
        independence_number: alpha,
        gallai_ub: alpha.map(|a| n - a),
        feedback_ub: (!g.is_tree() && n > 0).then(|| 2 * (m + 1 - n)),
        regular_lb: g.is_regular().filter(|_| n > 1).map(|r| (r * n).div_ceil(2 * n - 2)),
        em_per_vertex,
        skipped,
    })
}

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|x| g.neighbors(x).iter().fold(0u64, |acc, &y| acc | 1 << y))
        .collect()
}

/// Largest clique size, by Bron–Kerbosch with pivoting. At most 64 vertices.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.n() > CLIQUE_LIMIT {
        return Err(Error::TooLarge { what: "clique number", limit: CLIQUE_LIMIT, n: g.n() });
    }
    let adj = masks(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    Ok(max_clique(&adj, 0, all, 0))
}

/// Largest independent set size: the clique number of the complement.
pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.n() > CLIQUE_LIMIT {
        return Err(Error::TooLarge { what: "independence number", limit: CLIQUE_LIMIT, n: g.n() });
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let co: Vec<u64> = masks(g).iter().enumerate().map(|(x, a)| !a & all & !(1 << x)).collect();
    Ok(max_clique(&co, 0, all, 0))
}

fn max_clique(adj: &[u64], size: usize, mut p: u64, mut x: u64) -> usize {
    if p == 0 {
        return size;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut best = size;
    let mut cands = p & !adj[pivot];
    while cands != 0 {
        let v = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if size + 1 + (p & adj[v]).count_ones() as usize > best {
            best = best.max(max_clique(adj, size + 1, p & adj[v], x & adj[v]));
        }
        p &= !(1 << v);
        x |= 1 << v;
    }
    best
}

/// Minimum vertex cover size, by branching on a maximum-degree vertex
/// (take it, or take all its neighbors). At most 40 vertices.
pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    if g.n() > COVER_LIMIT {
        return Err(Error::TooLarge { what: "vertex cover number", limit: COVER_LIMIT, n: g.n() });
    }
    let adj = masks(g);
    if g.m() == 0 {
        return Ok(0);
    }
    let alive = (1u64 << g.n()) - 1;
    // Any n - 1 vertices cover every edge.
    let mut best = g.n() - 1;
    cover(&adj, alive, 0, &mut best);
    Ok(best)
}

fn cover(adj: &[u64], alive: u64, taken: usize, best: &mut usize) {
    let mut top = None;
    let mut edges = 0;
    let mut bits = alive;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & alive).count_ones() as usize;
        edges += d;
        if d > 0 && top.map_or(true, |(_, td)| d > td) {
            top = Some((v, d));
        }
    }
    let Some((v, d)) = top else {
        *best = (*best).min(taken);
        return;
    };
    // Each chosen vertex covers at most `d` of the remaining edges.
    if taken + (edges / 2).div_ceil(d) >= *best {
        return;
    }
    cover(adj, alive & !(1 << v), taken + 1, best);
    // With d = 1 the remaining edges form a matching and both branches agree.
    if d > 1 {
        let nbrs = adj[v] & alive;
        cover(adj, alive & !nbrs & !(1 << v), taken + nbrs.count_ones() as usize, best);
    }
}
