//! Cycle patterns that rule an edge out of `EM(x)`.
//!
//! For an edge `uv`, look for a cycle `C` through an anchor `x'` and through
//! `u` and `v` such that the shortest `x`-`x'` paths touch `C` only in `x'`,
//! and either
//!
//! * `|C| = 2k + 1` and `d(x', u) = d(x', v) = k`, or
//! * `|C| = 2k` and `d(x', u) = k - 1`, `d(x', v) = k`.
//!
//! As literally stated this premise does not exclude `uv` from `EM(x)`: a
//! shortcut from `x` to `u` that bypasses `x'` breaks it (see
//! [`shortcut_counterexample`]). [`Strictness::Additive`] adds the premise
//! the exclusion argument relies on, `d(x, t) = d(x, x') + d(x', t)` for
//! `t ∈ {u, v}`, under which the exclusion is sound.

use crate::graph::{bfs_excluding, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    Literal,
    Additive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub anchor: Vertex,
    /// Vertex sequence of the cycle, starting at its smallest vertex.
    pub cycle: Vec<Vertex>,
    /// `u` and `v` in the roles of the matched pattern.
    pub near: Vertex,
    pub far: Vertex,
}

/// Every simple cycle once, as a vertex sequence starting at its smallest
/// vertex with `cycle[1] < cycle[last]`. Exponential; for small graphs only.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    for start in g.vertices() {
        let mut path = vec![start];
        on_path[start] = true;
        grow(g, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
    }
    out
}

fn grow(g: &Graph, start: Vertex, path: &mut Vec<Vertex>, on_path: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
    let last = *path.last().unwrap();
    for &y in g.neighbors(last) {
        if y == start && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if y > start && !on_path[y] {
            on_path[y] = true;
            path.push(y);
            grow(g, start, path, on_path, out);
            path.pop();
            on_path[y] = false;
        }
    }
}

/// Searches `cycles` for a pattern excluding edge `uv` from `EM(x)`.
pub fn detect(
    g: &Graph,
    cycles: &[Vec<Vertex>],
    x: Vertex,
    u: Vertex,
    v: Vertex,
    strictness: Strictness,
) -> Option<CycleWitness> {
    let from_x = bfs_excluding(g, x, None);
    let dist: Vec<Vec<Option<u32>>> = g.vertices().map(|a| bfs_excluding(g, a, None)).collect();

    for cycle in cycles {
        if !cycle.contains(&u) || !cycle.contains(&v) {
            continue;
        }
        let len = cycle.len() as u32;
        for &anchor in cycle {
            let da = &dist[anchor];
            let Some(d_x_anchor) = from_x[anchor] else { continue };
            // Vertices on shortest x-anchor paths meet the cycle only at the anchor.
            let touches = cycle.iter().any(|&c| {
                c != anchor && matches!((from_x[c], da[c]), (Some(a), Some(b)) if a + b == d_x_anchor)
            });
            if touches {
                continue;
            }
            for (near, far) in [(u, v), (v, u)] {
                let (Some(dn), Some(df)) = (da[near], da[far]) else { continue };
                let matched = if len % 2 == 1 {
                    let k = (len - 1) / 2;
                    dn == k && df == k
                } else {
                    let k = len / 2;
                    dn + 1 == k && df == k
                };
                if !matched {
                    continue;
                }
                if strictness == Strictness::Additive {
                    let additive = |t: Vertex| from_x[t] == Some(d_x_anchor + da[t].unwrap());
                    if !additive(near) || !additive(far) {
                        continue;
                    }
                }
                return Some(CycleWitness { anchor, cycle: cycle.clone(), near, far });
            }
        }
    }
    None
}

/// A 5-cycle `0-1-2-3-4-0` with `x = 5` adjacent to `0` and `2`. With anchor
/// `0` and edge `(2, 3)` the literal odd-cycle premise holds, yet `(2, 3)` is
/// in `EM(5)`. Returns `(graph, x, u, v)`.
pub fn shortcut_counterexample() -> (Graph, Vertex, Vertex, Vertex) {
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)])
        .expect("valid graph");
    (g, 5, 2, 3)
}
