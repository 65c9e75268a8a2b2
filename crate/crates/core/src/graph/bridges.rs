use std::collections::BTreeSet;

use super::{Edge, Graph};

/// Bridges by an iterative lowpoint traversal, O(n + m).
pub fn bridges(g: &Graph) -> BTreeSet<Edge> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = BTreeSet::new();
    let mut time = 0;
    // (vertex, edge id used to enter it, next adjacency position)
    let mut stack: Vec<(usize, Option<usize>, usize)> = Vec::new();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, None, 0));

        while let Some(top) = stack.last_mut() {
            let (x, parent_edge, pos) = *top;
            if pos < g.degree(x) {
                top.2 += 1;
                let y = g.neighbors(x)[pos];
                let id = g.edge_index(x, y).expect("adjacent");
                if Some(id) == parent_edge {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    stack.push((y, Some(id), 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[x]);
                    if low[x] > disc[p] {
                        out.insert(Edge::new(p, x));
                    }
                }
            }
        }
    }
    out
}

/// Edges whose deletion increases the component count, by deleting each edge
/// in turn.
pub fn bridges_naive(g: &Graph) -> BTreeSet<Edge> {
    let base = g.component_sizes().len();
    g.edges()
        .iter()
        .filter(|e| {
            let rest = g.edges().iter().filter(|f| f != e).map(|f| (f.u, f.v));
            let h = Graph::new(g.n(), rest).expect("subgraph");
            h.component_sizes().len() > base
        })
        .copied()
        .collect()
}
