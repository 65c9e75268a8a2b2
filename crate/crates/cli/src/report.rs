//! Command reports and their renderings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use anyhow::Result;
use demkit::graph::io::write_edge_list;
use demkit::graph::{Edge, Vertex};
use demkit::monitor::{EmSet, MonitoringCertificate, PairSet, ZeroReason};
use demkit::solvers::DemResult;
use demkit::structural::{BoundsReport, ConditionReport};
use serde::Serialize;

use crate::input::{GraphInfo, Instance};

const MONITOR_FILL: &str = "#f4a261";
const UNCOVERED: &str = "#d62828";
const MONITORED: &str = "#1d4e89";

pub trait Render: Serialize {
    fn csv(&self, inst: &Instance) -> Result<String>;
    fn text(&self, inst: &Instance) -> String;
    /// Vertices to fill and edges to color in DOT output.
    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>);

    fn json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    fn dot(&self, inst: &Instance) -> String {
        let (fill, colors) = self.highlights();
        dot(inst, &fill, &colors)
    }
}

pub fn dot(inst: &Instance, fill: &BTreeSet<Vertex>, colors: &BTreeMap<Edge, &str>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for x in inst.graph.vertices() {
        let label = inst.label(x);
        if fill.contains(&x) {
            let _ = writeln!(out, "  \"{x}\" [label=\"{label}\", style=filled, fillcolor=\"{MONITOR_FILL}\"];");
        } else {
            let _ = writeln!(out, "  \"{x}\" [label=\"{label}\"];");
        }
    }
    for e in inst.graph.edges() {
        match colors.get(e) {
            Some(c) => {
                let _ = writeln!(out, "  \"{}\" -- \"{}\" [color=\"{c}\", penwidth=2];", e.u, e.v);
            }
            None => {
                let _ = writeln!(out, "  \"{}\" -- \"{}\";", e.u, e.v);
            }
        }
    }
    out.push_str("}\n");
    out
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn join(inst: &Instance, xs: &[Vertex]) -> String {
    xs.iter().map(|&x| inst.label(x)).collect::<Vec<_>>().join(" ")
}

fn edge_str(inst: &Instance, e: &Edge) -> String {
    format!("{}-{}", inst.label(e.u), inst.label(e.v))
}

#[derive(Serialize)]
pub struct DemReport {
    pub graph: GraphInfo,
    pub results: Vec<DemResult>,
    /// Edges left unmonitored by the first result (empty for valid sets).
    pub uncovered: BTreeSet<Edge>,
}

impl Render for DemReport {
    fn csv(&self, inst: &Instance) -> Result<String> {
        csv_string(
            &["method", "value", "exact", "nodes", "monitor_set"],
            self.results.iter().map(|r| {
                vec![
                    r.method.as_str().to_string(),
                    r.value.to_string(),
                    r.exact.to_string(),
                    r.stats.nodes.to_string(),
                    join(inst, &r.monitor_set),
                ]
            }),
        )
    }

    fn text(&self, inst: &Instance) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(
                out,
                "{}: dem {} {} with monitors {{{}}} ({} nodes)",
                r.method.as_str(),
                if r.exact { "=" } else { "<=" },
                r.value,
                join(inst, &r.monitor_set).replace(' ', ", "),
                r.stats.nodes
            );
        }
        out
    }

    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>) {
        let fill = self.results.first().map(|r| r.monitor_set.iter().copied().collect()).unwrap_or_default();
        (fill, self.uncovered.iter().map(|&e| (e, UNCOVERED)).collect())
    }
}

#[derive(Serialize)]
pub struct EmReport {
    pub graph: GraphInfo,
    pub sets: Vec<EmSet>,
}

impl Render for EmReport {
    fn csv(&self, inst: &Instance) -> Result<String> {
        csv_string(
            &["monitor", "u", "v"],
            self.sets.iter().flat_map(|s| {
                s.edges.iter().map(|e| vec![inst.label(s.monitor), inst.label(e.u), inst.label(e.v)])
            }),
        )
    }

    fn text(&self, inst: &Instance) -> String {
        let mut out = String::new();
        for s in &self.sets {
            let edges: Vec<String> = s.edges.iter().map(|e| edge_str(inst, e)).collect();
            let _ = writeln!(out, "EM({}) has {} edges: {}", inst.label(s.monitor), s.len(), edges.join(" "));
        }
        out
    }

    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>) {
        let fill = self.sets.iter().map(|s| s.monitor).collect();
        let colors = self.sets.iter().flat_map(|s| s.edges.iter().map(|&e| (e, MONITORED))).collect();
        (fill, colors)
    }
}

#[derive(Serialize)]
pub struct PsetReport {
    pub graph: GraphInfo,
    pub pair_set: PairSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_reason: Option<ZeroReason>,
}

impl Render for PsetReport {
    fn csv(&self, inst: &Instance) -> Result<String> {
        csv_string(&["x", "y"], self.pair_set.pairs.iter().map(|&(x, y)| vec![inst.label(x), inst.label(y)]))
    }

    fn text(&self, inst: &Instance) -> String {
        let p = &self.pair_set;
        let monitors: Vec<Vertex> = p.monitors.iter().copied().collect();
        let mut out = format!(
            "|P(M, {})| = {} for M = {{{}}}\n",
            edge_str(inst, &p.edge),
            p.len(),
            join(inst, &monitors).replace(' ', ", ")
        );
        if let Some(z) = &self.zero_reason {
            for (x, cause) in &z.per_monitor {
                let _ = writeln!(out, "  {}: {cause:?}", inst.label(*x));
            }
        }
        out
    }

    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>) {
        (self.pair_set.monitors.clone(), [(self.pair_set.edge, MONITORED)].into())
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub graph: GraphInfo,
    pub monitors: Vec<Vertex>,
    pub is_monitoring: bool,
    pub certificate: MonitoringCertificate,
}

impl Render for VerifyReport {
    fn csv(&self, inst: &Instance) -> Result<String> {
        csv_string(
            &["u", "v", "covered", "monitor", "target"],
            inst.graph.edges().iter().map(|e| match self.certificate.witnesses.get(e) {
                Some(w) => vec![
                    inst.label(e.u),
                    inst.label(e.v),
                    "true".into(),
                    inst.label(w.monitor),
                    inst.label(w.target),
                ],
                None => vec![inst.label(e.u), inst.label(e.v), "false".into(), String::new(), String::new()],
            }),
        )
    }

    fn text(&self, inst: &Instance) -> String {
        let mut out = format!(
            "{{{}}} is {}a monitoring set\n",
            join(inst, &self.monitors).replace(' ', ", "),
            if self.is_monitoring { "" } else { "not " }
        );
        for e in &self.certificate.uncovered {
            let _ = writeln!(out, "  unmonitored: {}", edge_str(inst, e));
        }
        out
    }

    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>) {
        let fill = self.monitors.iter().copied().collect();
        (fill, self.certificate.uncovered.iter().map(|&e| (e, UNCOVERED)).collect())
    }
}

#[derive(Serialize)]
pub struct BoundsOut {
    pub graph: GraphInfo,
    pub bounds: BoundsReport,
}

impl BoundsOut {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let b = &self.bounds;
        let opt = |v: Option<usize>| v.map_or_else(String::new, |v| v.to_string());
        vec![
            ("density_lb", b.density_lb.to_string()),
            ("clique_number", opt(b.clique_number)),
            ("clique_lb", opt(b.clique_lb)),
            ("vertex_cover_ub", opt(b.vertex_cover_ub)),
            ("independence_number", opt(b.independence_number)),
            ("gallai_ub", opt(b.gallai_ub)),
            ("feedback_ub", opt(b.feedback_ub)),
            ("regular_lb", opt(b.regular_lb)),
            ("lower", b.lower().to_string()),
            ("upper", opt(b.upper())),
        ]
    }
}

impl Render for BoundsOut {
    fn csv(&self, _: &Instance) -> Result<String> {
        csv_string(&["field", "value"], self.fields().into_iter().map(|(k, v)| vec![k.to_string(), v]))
    }

    fn text(&self, _: &Instance) -> String {
        let mut out = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(out, "{k:<20} {}", if v.is_empty() { "-" } else { &v });
        }
        for s in &self.bounds.skipped {
            let _ = writeln!(out, "skipped: {s}");
        }
        out
    }

    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>) {
        Default::default()
    }
}

#[derive(Serialize)]
pub struct CharReport {
    pub graph: GraphInfo,
    pub target: u8,
    #[serde(flatten)]
    pub report: ConditionReport,
}

impl Render for CharReport {
    fn csv(&self, inst: &Instance) -> Result<String> {
        csv_string(
            &["condition", "pass", "witness"],
            self.report.conditions.iter().map(|c| {
                let witness = c.witness.as_ref().map_or_else(String::new, |w| {
                    let mut vs = vec![w.x];
                    vs.extend(w.y);
                    vs.extend(&w.x_neighbors);
                    vs.extend(&w.y_neighbors);
                    join(inst, &vs)
                });
                vec![c.name.clone(), c.pass.to_string(), witness]
            }),
        )
    }

    fn text(&self, inst: &Instance) -> String {
        let r = &self.report;
        let mut out = format!(
            "target {}: tuple ({}) direct check {}, conditions {}{}\n",
            self.target,
            join(inst, &r.tuple).replace(' ', ", "),
            if r.direct_check { "passes" } else { "fails" },
            if r.structural_pass() { "pass" } else { "fail" },
            if r.discrepancy { ", DISCREPANCY" } else { "" }
        );
        for c in r.conditions.iter().filter(|c| !c.pass) {
            let _ = writeln!(out, "  condition {} fails", c.name);
        }
        out
    }

    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>) {
        (self.report.tuple.iter().copied().collect(), BTreeMap::new())
    }
}

#[derive(Serialize)]
pub struct GenReport {
    pub graph: GraphInfo,
    pub edges: Vec<Edge>,
}

impl GenReport {
    pub fn edge_list(inst: &Instance) -> String {
        write_edge_list(&inst.graph, inst.labels.as_deref(), &inst.header)
    }
}

impl Render for GenReport {
    fn csv(&self, inst: &Instance) -> Result<String> {
        csv_string(&["u", "v"], self.edges.iter().map(|e| vec![inst.label(e.u), inst.label(e.v)]))
    }

    fn text(&self, inst: &Instance) -> String {
        Self::edge_list(inst)
    }

    fn highlights(&self) -> (BTreeSet<Vertex>, BTreeMap<Edge, &'static str>) {
        Default::default()
    }
}
