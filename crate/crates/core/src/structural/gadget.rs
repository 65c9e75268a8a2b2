//! Small forbidden-pattern matcher over a layer profile.
//!
//! A gadget is anchored at a vertex `x`. It asks for an optional neighbor
//! `y` of `x` in a given cell, plus further pairwise distinct neighbors of
//! `x` and of `y`, each in one of a list of cells. Cells are written as
//! offsets from the cell of `x`, so a rule like "`z ∈ B_{i-1,j+1}` for
//! `x ∈ B_{i,j}`" becomes the offset `[-1, 1, 0]`.

use serde::Serialize;

use super::LayerProfile;
use crate::graph::{Graph, Vertex};

pub(crate) type Offset = [i32; 3];

#[derive(Clone, Debug)]
pub(crate) struct Gadget {
    /// Every coordinate of `x` must be at least this.
    pub min_coord: u32,
    pub y: Option<Offset>,
    pub x_leaves: Vec<Vec<Offset>>,
    pub y_leaves: Vec<Vec<Offset>>,
}

impl Gadget {
    pub fn star(x_leaves: Vec<Vec<Offset>>) -> Self {
        Gadget { min_coord: 0, y: None, x_leaves, y_leaves: Vec::new() }
    }

    pub fn with_y(y: Offset, x_leaves: Vec<Vec<Offset>>, y_leaves: Vec<Vec<Offset>>) -> Self {
        Gadget { min_coord: 0, y: Some(y), x_leaves, y_leaves }
    }

    pub fn min_coord(mut self, m: u32) -> Self {
        self.min_coord = m;
        self
    }
}

/// A named condition: it holds when none of its gadgets occurs anywhere.
#[derive(Clone, Debug)]
pub(crate) struct Rule {
    pub name: &'static str,
    pub gadgets: Vec<Gadget>,
}

/// The vertices realizing a forbidden pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub x: Vertex,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Vertex>,
    pub x_neighbors: Vec<Vertex>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub y_neighbors: Vec<Vertex>,
}

fn offset(p: &LayerProfile, from: Vertex, to: Vertex) -> Offset {
    let mut o = [0; 3];
    for (slot, (a, b)) in o.iter_mut().zip(p.coord(to).iter().zip(p.coord(from))) {
        *slot = *a as i32 - *b as i32;
    }
    o
}

/// First occurrence of `rule`, scanning anchors in increasing order.
pub(crate) fn find_rule(g: &Graph, p: &LayerProfile, rule: &Rule) -> Option<PatternWitness> {
    g.vertices()
        .find_map(|x| rule.gadgets.iter().find_map(|gd| find_at(g, p, gd, x)))
}

fn find_at(g: &Graph, p: &LayerProfile, gd: &Gadget, x: Vertex) -> Option<PatternWitness> {
    if p.coord(x).iter().any(|&c| c < gd.min_coord) {
        return None;
    }
    let ys: Vec<Option<Vertex>> = match gd.y {
        None => vec![None],
        Some(oy) => g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| offset(p, x, y) == oy)
            .map(Some)
            .collect(),
    };
    for y in ys {
        let slots: Vec<(Vertex, &[Offset])> = gd
            .x_leaves
            .iter()
            .map(|s| (x, s.as_slice()))
            .chain(gd.y_leaves.iter().map(|s| (y.expect("y leaves need y"), s.as_slice())))
            .collect();
        let mut used = vec![x];
        used.extend(y);
        let mut picked = Vec::with_capacity(slots.len());
        if assign(g, p, x, &slots, &mut used, &mut picked) {
            let (xs, ys) = picked.split_at(gd.x_leaves.len());
            return Some(PatternWitness { x, y, x_neighbors: xs.to_vec(), y_neighbors: ys.to_vec() });
        }
    }
    None
}

fn assign(
    g: &Graph,
    p: &LayerProfile,
    x: Vertex,
    slots: &[(Vertex, &[Offset])],
    used: &mut Vec<Vertex>,
    picked: &mut Vec<Vertex>,
) -> bool {
    let Some(&(anchor, cells)) = slots.get(picked.len()) else {
        return true;
    };
    for &z in g.neighbors(anchor) {
        if used.contains(&z) || !cells.contains(&offset(p, x, z)) {
            continue;
        }
        used.push(z);
        picked.push(z);
        if assign(g, p, x, slots, used, picked) {
            return true;
        }
        used.pop();
        picked.pop();
    }
    false
}
