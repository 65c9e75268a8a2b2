//! Corpora and definitional oracles shared by the integration tests.
//!
//! The oracles here use their own BFS over an adjacency list and never call
//! into the library's distance or monitoring code.

#![allow(dead_code)]

use std::collections::VecDeque;

use demkit::generators::{self as gen, FamilyInstance};
use demkit::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    adj
}

/// Distances from `s`, optionally ignoring the edge `skip`.
pub fn bfs(adj: &[Vec<usize>], s: usize, skip: Option<(usize, usize)>) -> Vec<Option<u32>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(a) = q.pop_front() {
        for &b in &adj[a] {
            if skip == Some((a, b)) || skip == Some((b, a)) {
                continue;
            }
            if d[b].is_none() {
                d[b] = Some(d[a].unwrap() + 1);
                q.push_back(b);
            }
        }
    }
    d
}

/// Edges (as indices into `g.edges()`) whose deletion changes some distance
/// from `x`, as a bitmask.
pub fn monitored_mask(g: &Graph, x: usize) -> u128 {
    assert!(g.m() <= 128);
    let adj = adjacency(g);
    let before = bfs(&adj, x, None);
    let mut mask = 0u128;
    for (i, e) in g.edges().iter().enumerate() {
        if bfs(&adj, x, Some((e.u, e.v))) != before {
            mask |= 1 << i;
        }
    }
    mask
}

/// Every `k`-subset of `0..n` in lexicographic order, until `f` returns true.
pub fn first_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        let i = (0..k).rev().find(|&i| idx[i] < n - k + i)?;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minimum monitoring set by exhaustive search: size, then lexicographic.
pub fn brute_dem(g: &Graph) -> (usize, Vec<usize>) {
    let masks: Vec<u128> = g.vertices().map(|x| monitored_mask(g, x)).collect();
    let full: u128 = if g.m() == 128 { u128::MAX } else { (1u128 << g.m()) - 1 };
    if g.m() == 0 {
        return (0, Vec::new());
    }
    for k in 1..=g.n() {
        if let Some(s) = first_subset(g.n(), k, |s| s.iter().fold(0, |acc, &x| acc | masks[x]) == full) {
            return (k, s);
        }
    }
    unreachable!("V(G) monitors every edge")
}

/// Whether `set` monitors every edge, straight from the definition.
pub fn brute_is_monitoring(g: &Graph, set: &[usize]) -> bool {
    let full: u128 = if g.m() == 0 { 0 } else { (1u128 << g.m()) - 1 };
    set.iter().fold(0, |acc, &x| acc | monitored_mask(g, x)) == full
}

/// Connected random graphs with `n_lo..=n_hi` vertices and varied density.
pub fn random_corpus(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_lo..=n_hi);
            let p = rng.gen_range(0.2..0.85);
            gen::random_connected(n, p, rng.gen()).unwrap().graph
        })
        .collect()
}

/// Random connected graphs with at least one cycle.
pub fn random_cyclic_corpus(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(n_lo..=n_hi);
        let p = rng.gen_range(0.2..0.85);
        let g = gen::random_connected(n, p, rng.gen()).unwrap().graph;
        if !g.is_tree() {
            out.push(g);
        }
    }
    out
}

/// Named families with at most 16 vertices.
pub fn named_families() -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for n in 2..=16 {
        out.push(gen::path(n).unwrap());
        out.push(gen::complete(n).unwrap());
    }
    for n in 3..=16 {
        out.push(gen::cycle(n).unwrap());
    }
    for leaves in 1..=15 {
        out.push(gen::star(leaves).unwrap());
    }
    for a in 1..=6 {
        for b in a..=6 {
            out.push(gen::complete_bipartite(a, b).unwrap());
            out.push(gen::double_star(b, a).unwrap());
        }
    }
    for p in 2..=4 {
        for q in 2..=4 {
            out.push(gen::grid(p, q).unwrap());
        }
    }
    for d in 1..=4 {
        out.push(gen::hypercube(d).unwrap());
    }
    out.push(gen::petersen());
    for n in 2..=12 {
        for k in 1..n {
            if let Ok(inst) = gen::em_k_construction(n, k) {
                out.push(inst);
            }
        }
    }
    for n in 3..=12 {
        out.push(gen::d2_graph(n, None).unwrap());
        if n >= 4 {
            out.push(gen::d1_graph(n, None).unwrap());
        }
    }
    for (d, sizes) in [(3, vec![2, 1]), (3, vec![3, 2]), (4, vec![2, 3, 2]), (5, vec![3, 3, 2, 1])] {
        for seed in 0..3 {
            out.push(gen::a_d_graph(d, &sizes, seed).unwrap());
        }
    }
    out
}

fn adjacency_bits(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 24, "bitmask oracles are for small graphs");
    let mut bits = vec![0u32; g.n()];
    for e in g.edges() {
        bits[e.u] |= 1 << e.v;
        bits[e.v] |= 1 << e.u;
    }
    bits
}

fn members(set: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| set >> i & 1 == 1)
}

/// Clique number by enumerating vertex subsets.
pub fn brute_clique(g: &Graph) -> usize {
    let adj = adjacency_bits(g);
    (0u32..1 << g.n())
        .filter(|&s| members(s).all(|x| (s & !(1 << x)) & !adj[x] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Independence number by enumerating vertex subsets.
pub fn brute_independence(g: &Graph) -> usize {
    let adj = adjacency_bits(g);
    (0u32..1 << g.n())
        .filter(|&s| members(s).all(|x| adj[x] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Vertex cover number by enumerating vertex subsets and checking every edge.
pub fn brute_vertex_cover(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().iter().all(|e| s >> e.u & 1 == 1 || s >> e.v & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Edges whose deletion disconnects their endpoints.
pub fn brute_bridges(g: &Graph) -> Vec<usize> {
    let adj = adjacency(g);
    (0..g.m())
        .filter(|&i| {
            let e = g.edges()[i];
            bfs(&adj, e.u, Some((e.u, e.v)))[e.v].is_none()
        })
        .collect()
}

/// `P(M, e)` from the definition.
pub fn brute_p_set(g: &Graph, monitors: &[usize], e: (usize, usize)) -> std::collections::BTreeSet<(usize, usize)> {
    let adj = adjacency(g);
    let mut out = std::collections::BTreeSet::new();
    for &x in monitors {
        let before = bfs(&adj, x, None);
        let after = bfs(&adj, x, Some(e));
        out.extend(g.vertices().filter(|&y| before[y] != after[y]).map(|y| (x, y)));
    }
    out
}

pub fn harmonic(m: usize) -> f64 {
    (1..=m).map(|i| 1.0 / i as f64).sum()
}
