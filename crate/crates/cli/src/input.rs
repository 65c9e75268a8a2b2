use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{Context, Result};
use demkit::error::Error;
use demkit::generators::{self as gen, FamilyInstance};
use demkit::graph::io::parse_edge_list;
use demkit::graph::{Edge, Graph, Vertex};
use serde::Serialize;

/// A loaded graph plus everything needed to name its vertices.
pub struct Instance {
    pub graph: Graph,
    pub source: String,
    pub labels: Option<Vec<String>>,
    pub designated: BTreeMap<String, Vertex>,
    /// Header comments for edge-list output.
    pub header: Vec<String>,
}

/// Graph identification printed with every report.
#[derive(Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub designated: BTreeMap<String, Vertex>,
}

fn bad(msg: impl Into<String>) -> anyhow::Error {
    Error::BadParameter(msg.into()).into()
}

impl Instance {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {}: {e}", path.display()) })?;
        let lg = parse_edge_list(&text).with_context(|| format!("reading {}", path.display()))?;
        Ok(Instance {
            graph: lg.graph,
            source: path.display().to_string(),
            labels: lg.labels,
            designated: BTreeMap::new(),
            header: lg.comments,
        })
    }

    pub fn from_spec(spec: &str, seed: u64) -> Result<Self> {
        let inst = generate(spec, seed)?;
        Ok(Instance {
            header: inst.header(),
            graph: inst.graph,
            source: spec.to_string(),
            labels: None,
            designated: inst.designated,
        })
    }

    pub fn info(&self) -> GraphInfo {
        GraphInfo {
            source: self.source.clone(),
            n: self.graph.n(),
            m: self.graph.m(),
            labels: self.labels.clone(),
            designated: self.designated.clone(),
        }
    }

    pub fn label(&self, x: Vertex) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Resolves a designated role, a label, or a numeric id.
    pub fn vertex(&self, token: &str) -> Result<Vertex> {
        if let Some(&x) = self.designated.get(token) {
            return Ok(x);
        }
        if let Some(labels) = &self.labels {
            return labels
                .iter()
                .position(|l| l == token)
                .ok_or_else(|| bad(format!("unknown vertex label {token:?}")));
        }
        let x: Vertex = token.parse().map_err(|_| bad(format!("unknown vertex {token:?}")))?;
        self.graph.check_vertex(x)?;
        Ok(x)
    }

    /// `all`, or a comma-separated list of vertices.
    pub fn vertex_list(&self, spec: &str) -> Result<Vec<Vertex>> {
        if spec == "all" {
            return Ok(self.graph.vertices().collect());
        }
        let mut out: Vec<Vertex> = spec
            .split(',')
            .filter(|t| !t.is_empty())
            .map(|t| self.vertex(t.trim()))
            .collect::<Result<_>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// A comma-separated list, order and repeats kept.
    pub fn vertex_list_ordered(&self, spec: &str) -> Result<Vec<Vertex>> {
        spec.split(',').map(|t| self.vertex(t.trim())).collect()
    }

    /// `centers` (for double stars), or `u,v`.
    pub fn edge(&self, spec: &str) -> Result<Edge> {
        let (u, v) = if spec == "centers" {
            match (self.designated.get("center1"), self.designated.get("center2")) {
                (Some(&a), Some(&b)) => (a, b),
                _ => return Err(bad("`centers` needs a double star instance")),
            }
        } else {
            let parts: Vec<&str> = spec.split(',').collect();
            let [a, b] = parts.as_slice() else {
                return Err(bad(format!("edge must be `u,v`, got {spec:?}")));
            };
            (self.vertex(a.trim())?, self.vertex(b.trim())?)
        };
        if u == v {
            return Err(Error::SelfLoop(u).into());
        }
        Ok(Edge::new(u, v))
    }
}

fn ints(family: &str, params: &[&str], arity: std::ops::RangeInclusive<usize>) -> Result<Vec<usize>> {
    if !arity.contains(&params.len()) {
        return Err(bad(format!(
            "{family} takes {} parameter(s), got {}",
            if arity.start() == arity.end() { arity.start().to_string() } else { format!("{arity:?}") },
            params.len()
        )));
    }
    params
        .iter()
        .map(|p| p.trim().parse().map_err(|_| bad(format!("{family}: {p:?} is not a non-negative integer"))))
        .collect()
}

/// Builds a graph from `family:p1,p2,...`.
pub fn generate(spec: &str, seed: u64) -> Result<FamilyInstance> {
    let (family, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let params: Vec<&str> = rest.split(',').filter(|p| !p.is_empty()).collect();
    let inst = match family {
        "path" => gen::path(ints(family, &params, 1..=1)?[0])?,
        "cycle" => gen::cycle(ints(family, &params, 1..=1)?[0])?,
        "complete" => gen::complete(ints(family, &params, 1..=1)?[0])?,
        "star" => gen::star(ints(family, &params, 1..=1)?[0])?,
        "bipartite" => {
            let p = ints(family, &params, 2..=2)?;
            gen::complete_bipartite(p[0], p[1])?
        }
        "grid" => {
            let p = ints(family, &params, 2..=2)?;
            gen::grid(p[0], p[1])?
        }
        "hypercube" => gen::hypercube(ints(family, &params, 1..=1)?[0])?,
        "petersen" => {
            ints(family, &params, 0..=0)?;
            gen::petersen()
        }
        "doublestar" => {
            let p = ints(family, &params, 2..=2)?;
            gen::double_star(p[0], p[1])?
        }
        "emk" => {
            let p = ints(family, &params, 2..=2)?;
            gen::em_k_construction(p[0], p[1])?
        }
        "d1" => gen::d1_graph(ints(family, &params, 1..=1)?[0], None)?,
        "d2" => gen::d2_graph(ints(family, &params, 1..=1)?[0], None)?,
        "ad" => {
            let p = ints(family, &params, 2..=usize::MAX)?;
            gen::a_d_graph(p[0], &p[1..], seed)?
        }
        "tree" => gen::random_tree(ints(family, &params, 1..=1)?[0], seed)?,
        "random" => {
            let [n, prob] = params.as_slice() else {
                return Err(bad("random takes n,p"));
            };
            let n = ints(family, &[n], 1..=1)?[0];
            let prob: f64 = prob.trim().parse().map_err(|_| bad(format!("random: {prob:?} is not a probability")))?;
            gen::random_connected(n, prob, seed)?
        }
        _ => return Err(bad(format!("unknown family {family:?}"))),
    };
    Ok(inst)
}
