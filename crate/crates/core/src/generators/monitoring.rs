//! Families built around a designated vertex `v` with a prescribed `|EM(v)|`.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bad, FamilyInstance};
use crate::error::Result;
use crate::graph::Graph;

/// A graph of order `n` with `|EM(v)| = k`.
///
/// `v = 0` is joined to `F_1 = {1..=k}`; each of the remaining `n - k - 1`
/// vertices (`F_3`) is joined to vertices 1 and 2 of `F_1`. `F_1` and `F_3`
/// carry no internal edges.
pub fn em_k_construction(n: usize, k: usize) -> Result<FamilyInstance> {
    if k < 1 || k + 1 > n {
        return Err(bad(format!("em_k needs 1 <= k <= n - 1, got n={n}, k={k}")));
    }
    if n > k + 1 && k < 2 {
        return Err(bad("em_k: F_3 vertices need two neighbors in F_1, so k >= 2"));
    }
    let pairs = (1..=k)
        .map(|x| (0, x))
        .chain((k + 1..n).flat_map(|y| [(y, 1), (y, 2)]));
    let g = Graph::new(n, pairs)?;
    Ok(FamilyInstance::new(g, "em_k", &[n, k]).designate("v", 0))
}

fn d_family(n: usize, d: Option<&Graph>, with_u1u2: bool, name: &str) -> Result<FamilyInstance> {
    let inner = n - 3;
    if let Some(d) = d {
        if d.n() != inner {
            return Err(bad(format!("{name}: D must have n - 3 = {inner} vertices, has {}", d.n())));
        }
    }
    let mut pairs = vec![(0, 1), (0, 2)];
    if with_u1u2 {
        pairs.push((1, 2));
    }
    for w in 3..n {
        pairs.push((1, w));
        pairs.push((2, w));
    }
    if let Some(d) = d {
        pairs.extend(d.edges().iter().map(|e| (e.u + 3, e.v + 3)));
    }
    let g = Graph::new(n, pairs)?;
    Ok(FamilyInstance::new(g, name, &[n])
        .designate("v", 0)
        .designate("u1", 1)
        .designate("u2", 2))
}

/// `D_2(n)`: `v = 0` adjacent to `u1 = 1`, `u2 = 2`; every vertex of `D`
/// (ids `3..n`) adjacent to both `u1` and `u2`. `D` defaults to edgeless.
pub fn d2_graph(n: usize, d: Option<&Graph>) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(bad("D_2(n) needs n >= 3"));
    }
    d_family(n, d, false, "d2")
}

/// `D_1(n)`: `D_2(n)` plus the edge `u1 u2`.
pub fn d1_graph(n: usize, d: Option<&Graph>) -> Result<FamilyInstance> {
    if n < 4 {
        return Err(bad("D_1(n) needs n >= 4"));
    }
    d_family(n, d, true, "d1")
}

/// A member of `A_d`: `v = 0`, `B_1 = {u1 = 1, u2 = 2}`, then layers `B_2..B_d`
/// of the given sizes. Each layer vertex gets a random set of at least two
/// parents in the previous layer; each pair inside a layer `B_i` (`i >= 2`)
/// is joined with probability 1/3.
pub fn a_d_graph(d: usize, sizes: &[usize], seed: u64) -> Result<FamilyInstance> {
    if d < 3 {
        return Err(bad("A_d needs d >= 3"));
    }
    if sizes.len() != d - 1 {
        return Err(bad(format!("A_d needs {} layer sizes |B_2|..|B_d|, got {}", d - 1, sizes.len())));
    }
    if sizes[..d - 2].iter().any(|&s| s < 2) || sizes[d - 2] < 1 {
        return Err(bad("A_d needs |B_i| >= 2 for 2 <= i <= d-1 and |B_d| >= 1"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut layers: Vec<Vec<usize>> = vec![vec![0], vec![1, 2]];
    let mut next = 3;
    for &s in sizes {
        layers.push((next..next + s).collect());
        next += s;
    }
    let n = next;

    let mut pairs = vec![(0, 1), (0, 2)];
    for i in 2..=d {
        let prev = &layers[i - 1];
        for &x in &layers[i] {
            let count = rng.gen_range(2..=prev.len());
            for idx in sample(&mut rng, prev.len(), count).into_vec() {
                pairs.push((x, prev[idx]));
            }
        }
        let layer = &layers[i];
        for a in 0..layer.len() {
            for b in a + 1..layer.len() {
                if rng.gen_bool(1.0 / 3.0) {
                    pairs.push((layer[a], layer[b]));
                }
            }
        }
    }

    let g = Graph::new(n, pairs)?;
    let mut params = vec![d];
    params.extend_from_slice(sizes);
    let mut inst = FamilyInstance::new(g, "a_d", &params)
        .designate("v", 0)
        .designate("u1", 1)
        .designate("u2", 2);
    inst.seed = Some(seed);
    inst.validate()?;
    Ok(inst)
}
