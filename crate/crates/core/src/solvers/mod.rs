//! Exact and greedy computation of `dem(G)`.
//!
//! Both solvers treat the problem as set cover: the elements are the edges,
//! and vertex `x` offers the set `EM(x)`. The exact solver works on the base
//! graph, since pendant trees consist of bridges that every vertex monitors.

mod exact;
mod greedy;
mod verify;

pub use exact::{dem_exact, DEFAULT_BUDGET};
pub use greedy::{dem_greedy, harmonic};
pub use verify::{min_monitoring_set_exhaustive, verify_dem_result};

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::graph::{Graph, Vertex};
use crate::monitor::{EmSet, MonitoringCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Greedy,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Greedy => "greedy",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    /// Branch-and-bound nodes, or greedy picks.
    pub nodes: u64,
    /// Wall time; `None` when timing is suppressed for reproducible output.
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemResult {
    pub value: usize,
    pub monitor_set: Vec<Vertex>,
    /// `false` for greedy results and for exact runs cut off by the budget.
    pub exact: bool,
    pub method: Method,
    pub stats: SolverStats,
    #[serde(skip)]
    pub certificate: MonitoringCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DemError {
    #[error(transparent)]
    Graph(#[from] Error),
    /// The node budget ran out. Carries the best monitoring set found, with
    /// `exact = false`.
    #[error("node budget exhausted; best known value {}", .0.value)]
    BudgetExceeded(Box<DemResult>),
}

/// `EM` sets as bitsets over edge indices.
pub(crate) fn em_bitsets(g: &Graph, sets: &[EmSet]) -> Vec<FixedBitSet> {
    sets.iter()
        .map(|s| {
            let mut bits = FixedBitSet::with_capacity(g.m());
            for e in &s.edges {
                bits.insert(g.edge_index(e.u, e.v).expect("EM edge belongs to the graph"));
            }
            bits
        })
        .collect()
}
