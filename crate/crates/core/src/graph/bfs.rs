use std::collections::VecDeque;

use serde::Serialize;

use super::{Edge, Graph, Vertex};
use crate::error::Result;

/// Hop distances from one source. `None` marks an unreachable vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceLayers {
    pub source: Vertex,
    pub dist: Vec<Option<u32>>,
}

impl DistanceLayers {
    pub fn get(&self, x: Vertex) -> Option<u32> {
        self.dist[x]
    }

    /// Largest finite distance.
    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `N_i(source)`: vertices at exactly distance `i`, in increasing order.
    pub fn level(&self, i: u32) -> Vec<Vertex> {
        (0..self.dist.len()).filter(|&x| self.dist[x] == Some(i)).collect()
    }

    /// All levels `N_0, N_1, ..., N_ecc` of the reachable part.
    pub fn levels(&self) -> Vec<Vec<Vertex>> {
        let mut levels = vec![Vec::new(); self.eccentricity() as usize + 1];
        for (x, d) in self.dist.iter().enumerate() {
            if let Some(d) = d {
                levels[*d as usize].push(x);
            }
        }
        levels
    }
}

pub fn bfs_distances(g: &Graph, x: Vertex) -> Result<DistanceLayers> {
    g.check_vertex(x)?;
    Ok(DistanceLayers { source: x, dist: bfs_excluding(g, x, None) })
}

/// BFS from `x` in `G - skip` (or `G` when `skip` is `None`). Neighbors are
/// visited in increasing id order.
pub fn bfs_excluding(g: &Graph, x: Vertex, skip: Option<usize>) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[x] = Some(0);
    queue.push_back(x);
    while let Some(a) = queue.pop_front() {
        let da = dist[a].expect("queued vertices are reached");
        for (b, id) in g.incident(a) {
            if Some(id) == skip || dist[b].is_some() {
                continue;
            }
            dist[b] = Some(da + 1);
            queue.push_back(b);
        }
    }
    dist
}

/// `d_{G-e}(x, y)`, or `None` when deleting `e` separates the two.
pub fn distance_after_deletion(g: &Graph, e: Edge, x: Vertex, y: Vertex) -> Result<Option<u32>> {
    let id = g.check_edge(e)?;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    Ok(bfs_excluding(g, x, Some(id))[y])
}
