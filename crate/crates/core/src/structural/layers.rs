use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, Vertex};

/// The partition of `V` by distance vector to 2 or 3 sources: cell
/// `(i, j[, k])` holds the vertices at distance `i` from the first source,
/// `j` from the second (and `k` from the third).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerProfile {
    pub sources: Vec<Vertex>,
    pub cells: BTreeMap<Vec<u32>, Vec<Vertex>>,
    /// Distance vector of every vertex.
    pub coords: Vec<Vec<u32>>,
}

impl LayerProfile {
    pub fn cell(&self, key: &[u32]) -> &[Vertex] {
        self.cells.get(key).map_or(&[], Vec::as_slice)
    }

    pub fn coord(&self, x: Vertex) -> &[u32] {
        &self.coords[x]
    }
}

pub fn layer_profile(g: &Graph, sources: &[Vertex]) -> Result<LayerProfile> {
    if !(2..=3).contains(&sources.len()) {
        return Err(Error::BadParameter(format!("need 2 or 3 sources, got {}", sources.len())));
    }
    for &s in sources {
        g.check_vertex(s)?;
    }
    if sources.iter().collect::<BTreeSet<_>>().len() != sources.len() {
        return Err(Error::BadParameter(format!("sources must be distinct: {sources:?}")));
    }
    g.require_connected()?;

    let layers = sources
        .iter()
        .map(|&s| bfs_distances(g, s))
        .collect::<Result<Vec<_>>>()?;
    let coords: Vec<Vec<u32>> = g
        .vertices()
        .map(|x| layers.iter().map(|l| l.get(x).expect("graph is connected")).collect())
        .collect();
    let mut cells: BTreeMap<Vec<u32>, Vec<Vertex>> = BTreeMap::new();
    for (x, c) in coords.iter().enumerate() {
        cells.entry(c.clone()).or_default().push(x);
    }
    Ok(LayerProfile { sources: sources.to_vec(), cells, coords })
}
