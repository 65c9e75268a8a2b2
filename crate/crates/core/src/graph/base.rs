use std::collections::VecDeque;

use super::{Graph, Vertex};
use crate::error::Result;

/// The base graph `G_b`: what is left after repeatedly deleting degree-1
/// vertices.
///
/// For a tree nothing meaningful is left. In that case `graph` is `K_1`
/// standing for vertex 0 of the input and `was_tree` is set.
#[derive(Clone, Debug)]
pub struct BaseGraph {
    pub graph: Graph,
    /// `mapping[x]` is the id of input vertex `x` in `graph`, if it survived.
    pub mapping: Vec<Option<Vertex>>,
    /// `original[y]` is the input id of base vertex `y`.
    pub original: Vec<Vertex>,
    pub was_tree: bool,
}

impl BaseGraph {
    pub fn lift(&self, base_vertices: &[Vertex]) -> Vec<Vertex> {
        base_vertices.iter().map(|&y| self.original[y]).collect()
    }
}

pub fn base_graph(g: &Graph) -> Result<BaseGraph> {
    g.require_connected()?;
    let n = g.n();

    if n == 0 || g.is_tree() {
        let mut mapping = vec![None; n];
        if n > 0 {
            mapping[0] = Some(0);
        }
        return Ok(BaseGraph { graph: Graph::empty(1), mapping, original: vec![0], was_tree: true });
    }

    let mut degree: Vec<usize> = g.vertices().map(|x| g.degree(x)).collect();
    let mut alive = vec![true; n];
    let mut queue: VecDeque<Vertex> = g.vertices().filter(|&x| degree[x] == 1).collect();
    while let Some(x) = queue.pop_front() {
        if !alive[x] || degree[x] != 1 {
            continue;
        }
        alive[x] = false;
        for &y in g.neighbors(x) {
            if alive[y] {
                degree[y] -= 1;
                if degree[y] == 1 {
                    queue.push_back(y);
                }
            }
        }
    }

    let (graph, original) = g.induced(&alive);
    let mut mapping = vec![None; n];
    for (y, &x) in original.iter().enumerate() {
        mapping[x] = Some(y);
    }
    Ok(BaseGraph { graph, mapping, original, was_tree: false })
}
