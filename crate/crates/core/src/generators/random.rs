use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bad, FamilyInstance};
use crate::error::Result;
use crate::graph::Graph;

/// Connected `G(n, p)` sample: draws until the sample is connected.
/// Deterministic in `seed`.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<FamilyInstance> {
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(bad("edge probability must lie in (0, 1]"));
    }
    if n < 1 {
        return Err(bad("random graph needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(edge_prob) {
                    pairs.push((a, b));
                }
            }
        }
        let g = Graph::new(n, pairs)?;
        if g.is_connected() {
            let mut inst = FamilyInstance::new(g, "random_connected", &[n]);
            inst.seed = Some(seed);
            return Ok(inst);
        }
    }
}

/// Uniform random recursive tree under a random relabelling.
pub fn random_tree(n: usize, seed: u64) -> Result<FamilyInstance> {
    if n < 1 {
        return Err(bad("tree needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let pairs: Vec<(usize, usize)> =
        (1..n).map(|i| (perm[i], perm[rng.gen_range(0..i)])).collect();
    let mut inst = FamilyInstance::new(Graph::new(n, pairs)?, "random_tree", &[n]);
    inst.seed = Some(seed);
    Ok(inst)
}

/// Adds `extra` vertices, each hanging from a random earlier vertex, so the
/// additions form pendant trees on `g`. New vertices get ids `g.n()..`.
pub fn attach_pendant_trees(g: &Graph, extra: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    for x in n..n + extra {
        pairs.push((x, rng.gen_range(0..x)));
    }
    Graph::new(n + extra, pairs).expect("pendant attachment keeps the graph simple")
}
