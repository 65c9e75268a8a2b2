use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::greedy::{greedy_cover, harmonic};
use super::{em_bitsets, DemError, DemResult, Method, SolverStats};
use crate::graph::{base_graph, Graph, Vertex};
use crate::monitor::{em_sets_all, is_monitoring_set};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

struct OutOfBudget;

/// Branch-and-bound set cover over `EM` bitsets.
struct Cover<'a> {
    sets: &'a [FixedBitSet],
    /// `covering[e]`: vertices whose set contains edge `e`.
    covering: Vec<Vec<Vertex>>,
    m: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> Cover<'a> {
    fn new(sets: &'a [FixedBitSet], m: usize, budget: u64) -> Self {
        let mut covering = vec![Vec::new(); m];
        for (x, s) in sets.iter().enumerate() {
            for e in s.ones() {
                covering[e].push(x);
            }
        }
        Cover { sets, covering, m, nodes: 0, budget }
    }

    /// A cover of the edges outside `covered` using at most `left` vertices,
    /// all with id `>= min_id`.
    fn search(
        &mut self,
        covered: &FixedBitSet,
        left: usize,
        min_id: Vertex,
    ) -> Result<Option<Vec<Vertex>>, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let uncovered = self.m - covered.count_ones(..);
        if uncovered == 0 {
            return Ok(Some(Vec::new()));
        }
        if left == 0 {
            return Ok(None);
        }

        let mut gains: Vec<(usize, Vertex)> = (min_id..self.sets.len())
            .map(|x| (self.sets[x].difference(covered).count(), x))
            .filter(|&(gain, _)| gain > 0)
            .collect();
        gains.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let best_reach: usize = gains.iter().take(left).map(|g| g.0).sum();
        if best_reach < uncovered {
            return Ok(None);
        }
        if self.packing_bound(covered, min_id) > left {
            return Ok(None);
        }

        // Fail first: the uncovered edge with the fewest usable covering vertices.
        let mut pivot = None;
        let mut pivot_count = usize::MAX;
        for e in (0..self.m).filter(|&e| !covered.contains(e)) {
            let count = self.covering[e].iter().filter(|&&x| x >= min_id).count();
            if count < pivot_count {
                pivot = Some(e);
                pivot_count = count;
            }
        }
        let pivot = pivot.expect("some edge is uncovered");
        if pivot_count == 0 {
            return Ok(None);
        }

        let mut branches: Vec<(usize, Vertex)> = gains
            .iter()
            .copied()
            .filter(|&(_, x)| self.sets[x].contains(pivot))
            .collect();
        branches.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, x) in branches {
            let mut next = covered.clone();
            next.union_with(&self.sets[x]);
            if let Some(mut rest) = self.search(&next, left - 1, min_id)? {
                rest.push(x);
                return Ok(Some(rest));
            }
        }
        Ok(None)
    }

    /// Number of uncovered edges with pairwise disjoint sets of covering
    /// vertices, picked greedily; each needs its own vertex.
    fn packing_bound(&self, covered: &FixedBitSet, min_id: Vertex) -> usize {
        let mut used = vec![false; self.sets.len()];
        let mut bound = 0;
        let mut order: Vec<usize> = (0..self.m).filter(|&e| !covered.contains(e)).collect();
        order.sort_by_key(|&e| self.covering[e].len());
        for e in order {
            let cands = self.covering[e].iter().filter(|&&x| x >= min_id);
            if cands.clone().all(|&x| !used[x]) {
                for &x in cands {
                    used[x] = true;
                }
                bound += 1;
            }
        }
        bound
    }

    /// Lexicographically smallest cover of size `k`, assuming one exists.
    fn lex_smallest(&mut self, k: usize) -> Result<Vec<Vertex>, OutOfBudget> {
        let mut chosen = Vec::with_capacity(k);
        let mut covered = FixedBitSet::with_capacity(self.m);
        let mut next_id = 0;
        for pos in 0..k {
            let mut found = false;
            for x in next_id..self.sets.len() {
                let mut trial = covered.clone();
                trial.union_with(&self.sets[x]);
                if self.search(&trial, k - pos - 1, x + 1)?.is_some() {
                    chosen.push(x);
                    covered = trial;
                    next_id = x + 1;
                    found = true;
                    break;
                }
            }
            assert!(found, "a cover of size {k} exists");
        }
        Ok(chosen)
    }
}

/// Minimum distance-edge-monitoring set.
///
/// Works on the base graph, bounds with `⌈m_b / max |EM|⌉`, an edge packing
/// bound and the greedy solution, and branches on the least-covered edge.
/// Among optimal sets the lexicographically smallest one (in base-graph
/// order, which preserves input order) is returned.
pub fn dem_exact(g: &Graph, budget: Option<u64>) -> Result<DemResult, DemError> {
    let start = Instant::now();
    g.require_connected()?;
    let budget = budget.unwrap_or(DEFAULT_BUDGET);

    let finish = |monitor_set: Vec<Vertex>, exact: bool, nodes: u64| -> Result<DemResult, DemError> {
        let certificate = is_monitoring_set(g, &monitor_set)?;
        Ok(DemResult {
            value: monitor_set.len(),
            monitor_set,
            exact,
            method: Method::Exact,
            stats: SolverStats { nodes, millis: Some(start.elapsed().as_millis() as u64) },
            certificate,
        })
    };

    if g.m() == 0 {
        return finish(Vec::new(), true, 0);
    }
    let base = base_graph(g)?;
    if base.was_tree {
        return finish(vec![0], true, 0);
    }

    let gb = &base.graph;
    let sets = em_bitsets(gb, &em_sets_all(gb)?);
    let m = gb.m();
    let greedy = greedy_cover(&sets, m);

    let max_em = sets.iter().map(|s| s.count_ones(..)).max().unwrap_or(1);
    let lower = m
        .div_ceil(max_em)
        .max((greedy.len() as f64 / harmonic(max_em) - 1e-9).ceil() as usize)
        .max(1);

    let mut cover = Cover::new(&sets, m, budget);
    let empty = FixedBitSet::with_capacity(m);
    let mut optimum = greedy.len();
    for k in lower..greedy.len() {
        match cover.search(&empty, k, 0) {
            Ok(Some(_)) => {
                optimum = k;
                break;
            }
            Ok(None) => {}
            Err(OutOfBudget) => {
                let partial = finish(base.lift(&greedy), false, cover.nodes)?;
                return Err(DemError::BudgetExceeded(Box::new(partial)));
            }
        }
    }

    match cover.lex_smallest(optimum) {
        Ok(best) => finish(base.lift(&best), true, cover.nodes),
        Err(OutOfBudget) => {
            let partial = finish(base.lift(&greedy), false, cover.nodes)?;
            Err(DemError::BudgetExceeded(Box::new(partial)))
        }
    }
}
