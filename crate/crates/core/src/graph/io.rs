//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! Labels are arbitrary whitespace-free tokens. If every label is an integer
//! in `0..n` the labels are used as vertex ids directly; otherwise vertices
//! are numbered by first appearance and the label table is kept. Vertices
//! that never occur in an edge get their id as label.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `None` when the labels are the vertex ids themselves.
    pub labels: Option<Vec<String>>,
    /// Comment lines with the leading `#` and one space stripped.
    pub comments: Vec<String>,
}

impl LabeledGraph {
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<(usize, String, String)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(c) = trimmed.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_err(lineno, format!("expected 2 fields, found {}", tokens.len())));
        }
        match header {
            None => {
                let n = tokens[0].parse().map_err(|_| parse_err(lineno, "bad vertex count"))?;
                let m = tokens[1].parse().map_err(|_| parse_err(lineno, "bad edge count"))?;
                header = Some((n, m));
            }
            Some(_) => raw.push((lineno, tokens[0].to_string(), tokens[1].to_string())),
        }
    }

    // Whole-input problems are reported at the last line.
    let last = text.lines().count();
    let (n, m) = header.ok_or_else(|| parse_err(last, "missing `n m` header"))?;
    if raw.len() != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", raw.len())));
    }

    let numeric: Option<Vec<(usize, usize, usize)>> = raw
        .iter()
        .map(|(line, a, b)| {
            let a = a.parse::<usize>().ok().filter(|&a| a < n)?;
            let b = b.parse::<usize>().ok().filter(|&b| b < n)?;
            Some((*line, a, b))
        })
        .collect();

    let (pairs, labels) = match numeric {
        Some(pairs) => (pairs, None),
        None => {
            let mut ids: HashMap<String, usize> = HashMap::new();
            let mut labels = Vec::new();
            let mut pairs = Vec::with_capacity(raw.len());
            for (line, a, b) in raw {
                let mut id = |label: String| -> Result<usize> {
                    if let Some(&i) = ids.get(&label) {
                        return Ok(i);
                    }
                    if labels.len() == n {
                        return Err(parse_err(line, format!("more than {n} distinct labels")));
                    }
                    ids.insert(label.clone(), labels.len());
                    labels.push(label);
                    Ok(labels.len() - 1)
                };
                let a = id(a)?;
                let b = id(b)?;
                pairs.push((line, a, b));
            }
            while labels.len() < n {
                labels.push(labels.len().to_string());
            }
            (pairs, Some(labels))
        }
    };

    for &(line, a, b) in &pairs {
        if a == b {
            return Err(parse_err(line, "self-loop"));
        }
    }
    let graph = Graph::new(n, pairs.into_iter().map(|(_, a, b)| (a, b)))?;
    Ok(LabeledGraph { graph, labels, comments })
}

/// Canonical serialization: comments, `n m`, then edges in lexicographic
/// id order.
pub fn write_edge_list(g: &Graph, labels: Option<&[String]>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        match labels {
            Some(l) => {
                let _ = writeln!(out, "{} {}", l[e.u], l[e.v]);
            }
            None => {
                let _ = writeln!(out, "{} {}", e.u, e.v);
            }
        }
    }
    out
}
