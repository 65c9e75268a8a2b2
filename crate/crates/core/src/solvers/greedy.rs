use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::{em_bitsets, DemError, DemResult, Method, SolverStats};
use crate::monitor::{em_sets_all, is_monitoring_set};
use crate::graph::{Graph, Vertex};

/// `H(m) = 1 + 1/2 + ... + 1/m`.
pub fn harmonic(m: usize) -> f64 {
    (1..=m).map(|i| 1.0 / i as f64).sum()
}

/// Greedy cover: take the vertex monitoring the most still-unmonitored edges,
/// lowest id on ties, until every edge is monitored.
pub(crate) fn greedy_cover(sets: &[FixedBitSet], m: usize) -> Vec<Vertex> {
    let mut covered = FixedBitSet::with_capacity(m);
    let mut picks = Vec::new();
    while covered.count_ones(..) < m {
        let (best, gain) = sets
            .iter()
            .enumerate()
            .map(|(x, s)| (x, s.difference(&covered).count()))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        assert!(gain > 0, "every edge is monitored by its endpoints");
        covered.union_with(&sets[best]);
        picks.push(best);
    }
    picks.sort_unstable();
    picks
}

pub fn dem_greedy(g: &Graph) -> Result<DemResult, DemError> {
    let start = Instant::now();
    let sets = em_bitsets(g, &em_sets_all(g)?);
    let monitor_set = greedy_cover(&sets, g.m());
    let certificate = is_monitoring_set(g, &monitor_set)?;
    Ok(DemResult {
        value: monitor_set.len(),
        stats: SolverStats {
            nodes: monitor_set.len() as u64,
            millis: Some(start.elapsed().as_millis() as u64),
        },
        monitor_set,
        exact: false,
        method: Method::Greedy,
        certificate,
    })
}
