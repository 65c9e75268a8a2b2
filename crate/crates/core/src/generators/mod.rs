//! Graph families used as fixtures and CLI instances.
//!
//! Every constructor returns a [`FamilyInstance`] carrying the graph, the
//! family name with its parameters, and the designated vertices some
//! families need (`v`, `u1`, `u2`, `center1`, ...).

mod families;
mod monitoring;
mod random;

pub use families::{
    complete, complete_bipartite, cycle, double_star, grid, hypercube, join, join_with_empty, path,
    petersen, star,
};
pub use monitoring::{a_d_graph, d1_graph, d2_graph, em_k_construction};
pub use random::{attach_pendant_trees, random_connected, random_tree};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub family: String,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
    pub designated: BTreeMap<String, Vertex>,
}

impl FamilyInstance {
    pub(crate) fn new(graph: Graph, family: &str, params: &[usize]) -> Self {
        FamilyInstance {
            graph,
            family: family.to_string(),
            params: params.to_vec(),
            seed: None,
            designated: BTreeMap::new(),
        }
    }

    pub(crate) fn designate(mut self, role: &str, x: Vertex) -> Self {
        self.designated.insert(role.to_string(), x);
        self
    }

    pub fn vertex(&self, role: &str) -> Option<Vertex> {
        self.designated.get(role).copied()
    }

    /// Header lines for the edge-list format: family, parameters, seed and
    /// one `role=vertex` line per designated vertex.
    pub fn header(&self) -> Vec<String> {
        let params: Vec<String> = self.params.iter().map(ToString::to_string).collect();
        let mut lines = vec![format!("family={} params={}", self.family, params.join(","))];
        if let Some(seed) = self.seed {
            lines.push(format!("seed={seed}"));
        }
        lines.extend(self.designated.iter().map(|(role, x)| format!("{role}={x}")));
        lines
    }

    /// Re-checks the family's defining constraints on the built graph.
    pub fn validate(&self) -> Result<()> {
        let g = &self.graph;
        let p = &self.params;
        let fail = |what: &str| Err(Error::BadParameter(format!("{} instance: {what}", self.family)));
        for (role, &x) in &self.designated {
            if x >= g.n() {
                return fail(&format!("designated {role}={x} out of range"));
            }
        }
        let ok = match self.family.as_str() {
            "path" => g.n() == p[0] && (g.n() == 1 || g.is_tree()) && g.degree_extremes().1 <= 2,
            "cycle" => g.n() == p[0] && g.is_connected() && g.is_regular() == Some(2),
            "complete" => g.n() == p[0] && g.is_complete(),
            "star" => g.n() == p[0] + 1 && g.is_tree() && g.degree(0) == p[0],
            "complete_bipartite" => {
                let (a, b) = (p[0], p[1]);
                g.n() == a + b
                    && g.m() == a * b
                    && g.edges().iter().all(|e| e.u < a && e.v >= a)
            }
            "grid" => {
                let (r, c) = (p[0], p[1]);
                g.n() == r * c && g.m() == r * (c - 1) + c * (r - 1) && g.is_connected()
            }
            "hypercube" => {
                g.n() == 1 << p[0]
                    && g.is_regular() == Some(p[0])
                    && g.edges().iter().all(|e| (e.u ^ e.v).count_ones() == 1)
            }
            "petersen" => g.n() == 10 && g.m() == 15 && g.is_regular() == Some(3),
            "double_star" => {
                let (c1, c2) = (self.vertex("center1").unwrap(), self.vertex("center2").unwrap());
                g.is_tree()
                    && g.has_edge(c1, c2)
                    && g.degree(c1) == p[0] + 1
                    && g.degree(c2) == p[1] + 1
                    && g.n() == p[0] + p[1] + 2
            }
            "join_with_empty" => {
                let apexes: Vec<Vertex> = (1..=p[0])
                    .map(|i| self.vertex(&format!("apex{i}")).unwrap())
                    .collect();
                apexes.iter().all(|&a| {
                    g.degree(a) == g.n() - p[0] && apexes.iter().all(|&b| !g.has_edge(a, b))
                })
            }
            "em_k" => validate_em_k(self),
            "d1" | "d2" => validate_d(self, self.family == "d1"),
            "a_d" => validate_a_d(self),
            "random_connected" | "random_tree" => g.is_connected(),
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            fail("family constraints violated")
        }
    }
}

fn validate_em_k(inst: &FamilyInstance) -> bool {
    let g = &inst.graph;
    let (n, k) = (inst.params[0], inst.params[1]);
    let v = inst.vertex("v").unwrap();
    let f1: Vec<Vertex> = g.neighbors(v).to_vec();
    let in_f1 = |x: Vertex| f1.binary_search(&x).is_ok();
    g.n() == n
        && f1.len() == k
        && g.vertices()
            .filter(|&x| x != v && !in_f1(x))
            .all(|x| g.neighbors(x).iter().filter(|&&y| in_f1(y)).count() >= 2)
}

fn validate_d(inst: &FamilyInstance, with_u1u2: bool) -> bool {
    let g = &inst.graph;
    let (v, u1, u2) = (inst.vertex("v").unwrap(), inst.vertex("u1").unwrap(), inst.vertex("u2").unwrap());
    g.n() == inst.params[0]
        && g.neighbors(v) == [u1.min(u2), u1.max(u2)]
        && g.has_edge(u1, u2) == with_u1u2
        && g.vertices()
            .filter(|&w| w != v && w != u1 && w != u2)
            .all(|w| g.has_edge(w, u1) && g.has_edge(w, u2))
}

fn validate_a_d(inst: &FamilyInstance) -> bool {
    let g = &inst.graph;
    let d = inst.params[0];
    let sizes = &inst.params[1..];
    let v = inst.vertex("v").unwrap();
    let Ok(layers) = bfs_distances(g, v) else { return false };
    if layers.dist.iter().any(Option::is_none) || layers.eccentricity() as usize != d {
        return false;
    }
    let levels = layers.levels();
    if levels[1].len() != 2 {
        return false;
    }
    for i in 2..=d {
        let expected = sizes[i - 2];
        if levels[i].len() != expected || (i < d && expected < 2) {
            return false;
        }
        let parents_ok = levels[i].iter().all(|&x| {
            g.neighbors(x).iter().filter(|&&y| layers.dist[y] == Some(i as u32 - 1)).count() >= 2
        });
        if !parents_ok {
            return false;
        }
    }
    true
}

pub(crate) fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}
