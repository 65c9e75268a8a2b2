use std::collections::BTreeSet;

use super::DemResult;
use crate::graph::{base_graph, Edge, Graph, Vertex};
use crate::monitor::em_set_naive;

/// Vertex count up to which exact results get an exhaustive minimality check.
const EXHAUSTIVE_LIMIT: usize = 12;

fn naive_sets(g: &Graph) -> Option<Vec<BTreeSet<Edge>>> {
    g.vertices().map(|x| em_set_naive(g, x).ok().map(|s| s.edges)).collect()
}

fn covers(sets: &[BTreeSet<Edge>], m: usize, chosen: &[Vertex]) -> bool {
    let union: BTreeSet<&Edge> = chosen.iter().flat_map(|&x| sets[x].iter()).collect();
    union.len() == m
}

/// Smallest monitoring set by trying every subset in order of size, then
/// lexicographically. Uses definitional `EM` sets. Exponential.
pub fn min_monitoring_set_exhaustive(g: &Graph) -> Option<Vec<Vertex>> {
    let sets = naive_sets(g)?;
    let n = g.n();
    for k in 0..=n {
        let mut found = None;
        for_each_subset(n, k, &mut |s| {
            if found.is_none() && covers(&sets, g.m(), s) {
                found = Some(s.to_vec());
            }
            found.is_none()
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[Vertex]) -> bool) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            let go_on = rec(x + 1, n, k, cur, f);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Re-derives the claim in `r` from definitions: the monitor set must cover
/// every edge with naive `EM` sets, and an exact claim must not be beaten by
/// any smaller set (checked exhaustively on `G` or `G_b` when one has at most
/// 12 vertices).
pub fn verify_dem_result(g: &Graph, r: &DemResult) -> bool {
    let distinct: BTreeSet<Vertex> = r.monitor_set.iter().copied().collect();
    if distinct.len() != r.monitor_set.len()
        || r.value != r.monitor_set.len()
        || r.monitor_set.iter().any(|&x| x >= g.n())
    {
        return false;
    }
    let Some(sets) = naive_sets(g) else { return false };
    if !covers(&sets, g.m(), &r.monitor_set) {
        return false;
    }
    if !r.exact || r.value == 0 {
        return true;
    }

    let smaller_exists = |h: &Graph| -> bool {
        let Some(sets) = naive_sets(h) else { return true };
        let mut found = false;
        for_each_subset(h.n(), r.value - 1, &mut |s| {
            found = covers(&sets, h.m(), s);
            !found
        });
        found
    };
    if g.n() <= EXHAUSTIVE_LIMIT {
        return !smaller_exists(g);
    }
    match base_graph(g) {
        Ok(base) if base.was_tree => r.value == 1,
        Ok(base) if base.graph.n() <= EXHAUSTIVE_LIMIT => !smaller_exists(&base.graph),
        Ok(_) => true,
        Err(_) => false,
    }
}
