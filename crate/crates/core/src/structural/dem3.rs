//! The dem = 3 conditions as rule data.
//!
//! Each sub-condition is transcribed literally, including cell lists that
//! look mistyped (repeated entries are kept as a single cell). Rules can be
//! switched off by name to see which ones disagree with the direct check.

use std::collections::BTreeSet;

use super::gadget::{Gadget, Offset, Rule};
use super::{evaluate, ConditionReport};
use crate::error::Result;
use crate::graph::{Graph, Vertex};

pub const DEM3_RULE_NAMES: [&str; 15] =
    ["1", "2", "3.1", "3.2", "3.3", "3.4", "3.5", "4.1", "4.2", "4.3", "5", "6", "7.1", "7.2", "8"];

fn cube(i: &[i32], j: &[i32], k: &[i32]) -> Vec<Offset> {
    let mut out = Vec::new();
    for &a in i {
        for &b in j {
            for &c in k {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Two distinct neighbors of `x`, one in `first` and one in `second`.
fn two(first: Vec<Offset>, second: Vec<Offset>) -> Gadget {
    Gadget::star(vec![first, second])
}

pub(crate) fn rules() -> Vec<Rule> {
    let lower = cube(&[-1, 0], &[-1, 0], &[-1, 0]);
    vec![
        Rule { name: "1", gadgets: vec![Gadget::star(vec![vec![[0, 0, 0]]])] },
        // Two neighbors in one cell of the lower octant.
        Rule { name: "2", gadgets: lower.iter().map(|&o| two(vec![o], vec![o])).collect() },
        Rule {
            name: "3.1",
            gadgets: vec![two(vec![[0, -1, 0]], cube(&[-1, 0, 1], &[-1], &[-1, 0, 1]))],
        },
        Rule { name: "3.2", gadgets: vec![two(vec![[-1, -1, -1]], lower.clone())] },
        Rule {
            name: "3.3",
            gadgets: vec![two(vec![[-1, 1, -1]], vec![[-1, 0, -1], [-1, 0, 0], [0, 0, -1]])],
        },
        Rule {
            name: "3.4",
            gadgets: vec![two(
                vec![[0, -1, -1]],
                vec![[-1, -1, -1], [0, -1, -1], [0, 0, -1], [0, -1, 0], [1, -1, -1]],
            )],
        },
        Rule { name: "3.5", gadgets: vec![two(vec![[0, -1, 1]], vec![[0, -1, 0]])] },
        Rule {
            name: "4.1",
            gadgets: vec![Gadget::with_y(
                [-1, 1, 1],
                vec![cube(&[-1], &[-1, 1], &[-1, 1])],
                vec![cube(&[-2, 0], &[0], &[0])],
            )],
        },
        Rule {
            name: "4.2",
            gadgets: vec![Gadget::with_y(
                [-1, 1, 1],
                vec![cube(&[-1], &[-1, 1], &[-1])],
                vec![cube(&[-2, 0], &[0], &[-2, 0])],
            )],
        },
        Rule {
            name: "4.3",
            gadgets: vec![Gadget::with_y(
                [0, -1, 1],
                vec![vec![
                    [-1, -1, -1],
                    [-1, -1, 0],
                    [-1, -1, 1],
                    [0, -1, -1],
                    [0, -1, 1],
                    [1, -1, -1],
                    [1, -1, 0],
                    [1, -1, 1],
                ]],
                vec![vec![
                    [-1, -2, 0],
                    [-1, -1, 0],
                    [-1, 0, 0],
                    [0, -2, 0],
                    [0, 0, 0],
                    [1, -2, 0],
                    [1, -1, 0],
                    [1, 0, 0],
                ]],
            )],
        },
        // Read like condition (4) of the two-source case: neighbors in all
        // three of the listed sets are forbidden.
        Rule {
            name: "5",
            gadgets: vec![Gadget::star(vec![
                vec![[-1, -1, -1]],
                vec![[1, -1, -1]],
                cube(&[-1], &[1], &[-1, 0, 1]),
            ])],
        },
        Rule {
            name: "6",
            gadgets: vec![Gadget::star(vec![
                vec![[-1, -1, -1]],
                vec![[-1, -1, 1], [-1, 0, 1], [-1, 1, -1], [-1, 1, 0], [-1, 1, 1]],
                vec![[-1, -1, 1], [0, -1, 1], [1, -1, -1], [1, -1, 0], [1, -1, 1]],
                vec![[-1, 1, -1], [0, 1, -1], [1, -1, -1], [1, 0, -1], [1, 1, -1]],
            ])],
        },
        Rule {
            name: "7.1",
            gadgets: vec![Gadget::with_y(
                [-1, 1, -1],
                vec![
                    vec![[-1, -1, -1], [-1, -1, 0], [-1, -1, 1], [-1, 0, 1], [-1, 1, -1], [-1, 1, 0], [-1, 1, 1]],
                    vec![[-1, -1, -1], [-1, 1, -1], [0, -1, -1], [0, 1, -1], [1, -1, -1], [1, 0, -1], [1, 1, -1]],
                ],
                vec![vec![
                    [-2, 0, -2],
                    [-2, 0, -1],
                    [-2, 0, 0],
                    [-1, 0, -2],
                    [-1, 0, 0],
                    [0, 0, -2],
                    [0, 0, -1],
                    [0, 0, 0],
                ]],
            )],
        },
        Rule {
            name: "7.2",
            gadgets: vec![Gadget::with_y(
                [1, -1, -1],
                vec![
                    vec![
                        [-1, -1, -1],
                        [-1, -1, 0],
                        [-1, -1, 1],
                        [0, -1, -1],
                        [0, -1, 0],
                        [1, -1, 1],
                        [1, -1, -1],
                        [1, -1, 0],
                    ],
                    vec![
                        [-1, -1, -1],
                        [-1, 0, -1],
                        [-2, 1, -1],
                        [0, -1, -1],
                        [0, 0, -1],
                        [0, 1, -1],
                        [1, -1, -1],
                        [1, 0, -1],
                        [1, 1, -1],
                    ],
                ],
                vec![vec![[0, -2, -2], [0, -2, -1], [0, -2, 0], [0, -1, -2], [0, -1, 0], [0, 0, -2], [0, 0, -1]]],
            )],
        },
        // The star's leaves are listed as z_2 and z_3; y is the third edge.
        Rule {
            name: "8",
            gadgets: vec![Gadget::star(vec![
                vec![[0, -1, -1]],
                vec![[-1, -1, 0], [-1, -1, 1], [0, -1, 1], [1, -1, 0], [1, -1, 1]],
                vec![[-1, 0, -1], [-1, 1, -1], [0, 1, -1], [1, 0, -1], [1, 1, -1]],
            ])],
        },
    ]
}

/// Evaluates the dem = 3 conditions for sources `(u, v, w)` with every rule
/// enabled, next to the direct test that `{u, v, w}` monitors every edge.
pub fn dem3_triple_check(g_b: &Graph, u: Vertex, v: Vertex, w: Vertex) -> Result<ConditionReport> {
    dem3_triple_check_with(g_b, [u, v, w], &BTreeSet::new())
}

/// Like [`dem3_triple_check`], skipping the rules named in `disabled`.
pub fn dem3_triple_check_with(
    g_b: &Graph,
    sources: [Vertex; 3],
    disabled: &BTreeSet<String>,
) -> Result<ConditionReport> {
    let rules: Vec<Rule> = rules()
        .into_iter()
        .filter(|r| !disabled.contains(r.name))
        .collect();
    evaluate(g_b, &sources, &rules)
}
