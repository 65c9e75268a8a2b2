use serde::Serialize;

use crate::error::Result;
use crate::graph::{bfs_distances, Graph, Vertex};
use crate::monitor::{em_set, em_set_naive};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmCardinalityReport {
    pub vertex: Vertex,
    pub n: usize,
    pub em_size: usize,
    /// No vertex has two neighbors one step closer to `vertex`.
    pub unique_parent: bool,
    /// `(w, w1, w2)`: `w1` and `w2` are both neighbors of `w` one step closer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unique_parent_violation: Option<(Vertex, Vertex, Vertex)>,
    pub is_k2: bool,
    /// `unique_parent` agrees with `em_size == n - 1`.
    pub full_iff_unique_parent: bool,
    /// `is_k2` agrees with `em_size == 1`.
    pub one_iff_k2: bool,
}

pub fn em_cardinality_checks(g: &Graph, v: Vertex) -> Result<EmCardinalityReport> {
    g.require_connected()?;
    let em_size = em_set(g, v)?.len();
    let d = bfs_distances(g, v)?;
    let level = |x| d.get(x).expect("graph is connected");

    let unique_parent_violation = g.vertices().find_map(|w| {
        let mut closer = g.neighbors(w).iter().filter(|&&z| level(z) + 1 == level(w));
        match (closer.next(), closer.next()) {
            (Some(&a), Some(&b)) => Some((w, a, b)),
            _ => None,
        }
    });
    let unique_parent = unique_parent_violation.is_none();
    let is_k2 = g.n() == 2 && g.m() == 1;
    Ok(EmCardinalityReport {
        vertex: v,
        n: g.n(),
        em_size,
        unique_parent,
        unique_parent_violation,
        is_k2,
        full_iff_unique_parent: unique_parent == (em_size + 1 == g.n()),
        one_iff_k2: is_k2 == (em_size == 1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Em2Check {
    pub em_size: usize,
    pub naive_size: usize,
}

impl Em2Check {
    pub fn holds(&self) -> bool {
        self.em_size == 2 && self.naive_size == 2
    }
}

/// Confirms `|EM(v)| = 2` for a generated family member, by both the fast
/// rule and the definition. This does not decide family membership.
pub fn verify_em2_family_member(g: &Graph, v: Vertex) -> Result<Em2Check> {
    Ok(Em2Check { em_size: em_set(g, v)?.len(), naive_size: em_set_naive(g, v)?.len() })
}
