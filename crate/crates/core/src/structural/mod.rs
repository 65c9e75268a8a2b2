//! Characterizations of small `dem` values and of `|EM(v)|`, and the bound
//! chain around `dem(G)`.

mod bounds;
mod cardinality;
mod dem2;
mod dem3;
mod gadget;
mod layers;

pub use bounds::{bounds_report, clique_number, independence_number, vertex_cover_number, BoundsReport};
pub use cardinality::{em_cardinality_checks, verify_em2_family_member, Em2Check, EmCardinalityReport};
pub use dem2::{dem2_pair_check, dem2_pair_check_with, dem_is_2, Dem2Reading};
pub use dem3::{dem3_triple_check, dem3_triple_check_with, DEM3_RULE_NAMES};
pub use gadget::PatternWitness;
pub use layers::{layer_profile, LayerProfile};

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::monitor::is_monitoring_set;
use gadget::{find_rule, Rule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PatternWitness>,
}

/// Per-condition verdicts for one source tuple, with the direct monitoring
/// test as ground truth. `discrepancy` is set when the conditions and the
/// direct test disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub tuple: Vec<Vertex>,
    pub conditions: Vec<ConditionResult>,
    pub direct_check: bool,
    pub discrepancy: bool,
}

impl ConditionReport {
    pub fn structural_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }

    /// Renames vertices through `map`, e.g. from base-graph ids back to the
    /// input graph.
    pub fn relabel(mut self, map: &[Vertex]) -> Self {
        self.tuple.iter_mut().for_each(|x| *x = map[*x]);
        for w in self.conditions.iter_mut().filter_map(|c| c.witness.as_mut()) {
            w.x = map[w.x];
            w.y = w.y.map(|y| map[y]);
            w.x_neighbors.iter_mut().for_each(|z| *z = map[*z]);
            w.y_neighbors.iter_mut().for_each(|z| *z = map[*z]);
        }
        self
    }
}

fn evaluate(g: &Graph, sources: &[Vertex], rules: &[Rule]) -> Result<ConditionReport> {
    let profile = layer_profile(g, sources)?;
    let conditions: Vec<ConditionResult> = rules
        .iter()
        .map(|r| {
            let witness = find_rule(g, &profile, r);
            ConditionResult { name: r.name.to_string(), pass: witness.is_none(), witness }
        })
        .collect();
    let direct_check = is_monitoring_set(g, sources)?.is_monitoring();
    let discrepancy = conditions.iter().all(|c| c.pass) != direct_check;
    Ok(ConditionReport { tuple: sources.to_vec(), conditions, direct_check, discrepancy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    #[test]
    fn report_json_shape() {
        let r = dem2_pair_check(&complete(4).unwrap().graph, 0, 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["tuple"], serde_json::json!([0, 1]));
        assert_eq!(v["conditions"][0]["name"], "1");
        assert_eq!(v["conditions"][0]["pass"], false);
        assert_eq!(v["conditions"][0]["witness"]["x"], 2);
        assert!(v["conditions"][1].get("witness").is_none());
        assert_eq!(v["direct_check"], false);
        assert_eq!(v["discrepancy"], false);
    }
}
