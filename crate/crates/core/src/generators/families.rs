use super::{bad, FamilyInstance};
use crate::error::Result;
use crate::graph::Graph;

fn build(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::new(n, pairs).expect("generator produced a valid graph")
}

/// `P_n` on `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<FamilyInstance> {
    if n < 1 {
        return Err(bad("path needs n >= 1"));
    }
    let g = build(n, (1..n).map(|i| (i - 1, i)));
    Ok(FamilyInstance::new(g, "path", &[n]))
}

/// `C_n` with `i ~ i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    let g = build(n, (0..n).map(|i| (i, (i + 1) % n)));
    Ok(FamilyInstance::new(g, "cycle", &[n]))
}

pub fn complete(n: usize) -> Result<FamilyInstance> {
    if n < 1 {
        return Err(bad("complete graph needs n >= 1"));
    }
    let g = build(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))));
    Ok(FamilyInstance::new(g, "complete", &[n]))
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Result<FamilyInstance> {
    if leaves < 1 {
        return Err(bad("star needs at least one leaf"));
    }
    let g = build(leaves + 1, (1..=leaves).map(|i| (0, i)));
    Ok(FamilyInstance::new(g, "star", &[leaves]).designate("center", 0))
}

/// `K_{a,b}`: side A is `0..a`, side B is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<FamilyInstance> {
    if a < 1 || b < 1 {
        return Err(bad("complete bipartite graph needs both sides non-empty"));
    }
    let g = build(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))));
    Ok(FamilyInstance::new(g, "complete_bipartite", &[a, b]))
}

/// `p x q` grid; vertex `(r, c)` has id `r * q + c`.
pub fn grid(p: usize, q: usize) -> Result<FamilyInstance> {
    if p < 2 || q < 2 {
        return Err(bad("grid needs p, q >= 2"));
    }
    let id = |r: usize, c: usize| r * q + c;
    let mut pairs = Vec::new();
    for r in 0..p {
        for c in 0..q {
            if c + 1 < q {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < p {
                pairs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(FamilyInstance::new(build(p * q, pairs), "grid", &[p, q]))
}

/// `Q_d`; vertex ids are the bit strings, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<FamilyInstance> {
    if !(1..=16).contains(&d) {
        return Err(bad("hypercube needs 1 <= d <= 16"));
    }
    let n = 1usize << d;
    let pairs = (0..n).flat_map(|x| (0..d).map(move |b| (x, x ^ (1 << b))).filter(|(x, y)| x < y));
    Ok(FamilyInstance::new(build(n, pairs), "hypercube", &[d]))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> FamilyInstance {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    FamilyInstance::new(build(10, pairs), "petersen", &[])
}

/// `S(a, b)`: centers 0 and 1 joined by an edge; leaves `2..2+a` hang from
/// center 0 and `2+a..2+a+b` from center 1.
pub fn double_star(a: usize, b: usize) -> Result<FamilyInstance> {
    if a < b {
        return Err(bad("double star needs a >= b"));
    }
    let n = a + b + 2;
    let pairs = std::iter::once((0, 1))
        .chain((2..2 + a).map(|x| (0, x)))
        .chain((2 + a..n).map(|x| (1, x)));
    Ok(FamilyInstance::new(build(n, pairs), "double_star", &[a, b])
        .designate("center1", 0)
        .designate("center2", 1))
}

/// `G ∨ H`: vertices of `g` keep their ids, those of `h` are shifted by
/// `g.n()`, and every `g`-vertex is joined to every `h`-vertex.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let pairs = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v))
        .chain(h.edges().iter().map(|e| (e.u + off, e.v + off)))
        .chain(g.vertices().flat_map(|x| h.vertices().map(move |y| (x, y + off))));
    build(g.n() + h.n(), pairs)
}

/// `G ∨ mK_1`, apexes designated `apex1..apexm`.
pub fn join_with_empty(g: &Graph, m: usize) -> Result<FamilyInstance> {
    if m < 1 {
        return Err(bad("join_with_empty needs m >= 1"));
    }
    let joined = join(g, &Graph::empty(m));
    let mut inst = FamilyInstance::new(joined, "join_with_empty", &[m]);
    for i in 0..m {
        inst = inst.designate(&format!("apex{}", i + 1), g.n() + i);
    }
    Ok(inst)
}
