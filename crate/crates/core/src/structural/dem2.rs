use rayon::prelude::*;

use super::gadget::{Gadget, Rule};
use super::{evaluate, ConditionReport};
use crate::error::{Error, Result};
use crate::graph::{base_graph, Graph, Vertex};

/// How condition (2) is read.
///
/// `Literal` forbids two neighbors in any of the four unions as printed.
/// That is too strong: on `C_4` the antipodal pair monitors every edge, yet
/// each source has both neighbors in `B_{1,1}`. Two neighbors in
/// `B_{i-1,j+1}` only rule out `u` for those edges; `v` can still monitor
/// them. `Corrected` keeps the printed pairs except these two same-cell
/// pairs (`B_{i-1,j+1}` twice, `B_{i+1,j-1}` twice).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Dem2Reading {
    Literal,
    #[default]
    Corrected,
}

/// The four conditions on the two-source partition `B_{i,j}(u, v)`.
pub(crate) fn rules(reading: Dem2Reading) -> Vec<Rule> {
    let o = |a: [i32; 2]| [a[0], a[1], 0];
    let union = |a: [i32; 2], b: [i32; 2]| Gadget::star(vec![vec![o(a), o(b)], vec![o(a), o(b)]]);
    // One neighbor in `a`, another in `a` or `b`.
    let anchored = |a: [i32; 2], b: [i32; 2]| Gadget::star(vec![vec![o(a)], vec![o(a), o(b)]]);
    let (second, fourth) = match reading {
        Dem2Reading::Literal => (union([-1, 0], [-1, 1]), union([0, -1], [1, -1])),
        Dem2Reading::Corrected => (anchored([-1, 0], [-1, 1]), anchored([0, -1], [1, -1])),
    };
    vec![
        Rule { name: "1", gadgets: vec![Gadget::star(vec![vec![[0, 0, 0]]])] },
        Rule { name: "2", gadgets: vec![union([-1, 0], [-1, -1]), second, union([0, -1], [-1, -1]), fourth] },
        Rule {
            name: "3",
            gadgets: vec![Gadget::with_y(
                [-1, 1, 0],
                vec![vec![[-1, -1, 0], [-1, 1, 0]]],
                vec![vec![[-2, 0, 0], [0, 0, 0]]],
            )
            .min_coord(1)],
        },
        Rule {
            name: "4",
            gadgets: vec![Gadget::star(vec![
                vec![[-1, 1, 0]],
                vec![[-1, -1, 0]],
                vec![[1, -1, 0]],
            ])
            .min_coord(1)],
        },
    ]
}

/// Evaluates the dem = 2 conditions for sources `(u, v)` in `g_b`, next to
/// the direct test that `{u, v}` monitors every edge.
pub fn dem2_pair_check(g_b: &Graph, u: Vertex, v: Vertex) -> Result<ConditionReport> {
    dem2_pair_check_with(g_b, u, v, Dem2Reading::default())
}

pub fn dem2_pair_check_with(g_b: &Graph, u: Vertex, v: Vertex, reading: Dem2Reading) -> Result<ConditionReport> {
    evaluate(g_b, &[u, v], &rules(reading))
}

/// A pair of vertices (ids of `g`) whose partition of the base graph passes
/// all four conditions; the lexicographically first such pair of base-graph
/// vertices is returned.
pub fn dem_is_2(g: &Graph) -> Result<Option<(Vertex, Vertex)>> {
    g.require_connected()?;
    if g.is_tree() {
        return Err(Error::IsTree);
    }
    let base = base_graph(g)?;
    let gb = &base.graph;
    let rules = rules(Dem2Reading::default());
    let pairs: Vec<(Vertex, Vertex)> =
        (0..gb.n()).flat_map(|u| (u + 1..gb.n()).map(move |v| (u, v))).collect();
    let found = pairs.par_iter().find_first(|&&(u, v)| {
        evaluate(gb, &[u, v], &rules).is_ok_and(|r| r.structural_pass())
    });
    Ok(found.map(|&(u, v)| (base.original[u], base.original[v])))
}
