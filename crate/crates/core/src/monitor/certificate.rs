use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::em_set_unchecked;
use crate::error::Result;
use crate::graph::{bfs_excluding, Edge, Graph, Vertex};

/// A pair `(monitor, target)` whose distance changes when the edge fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub monitor: Vertex,
    pub target: Vertex,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonitoringCertificate {
    pub witnesses: BTreeMap<Edge, Witness>,
    pub uncovered: BTreeSet<Edge>,
}

impl MonitoringCertificate {
    pub fn is_monitoring(&self) -> bool {
        self.uncovered.is_empty()
    }

    /// Re-checks every witness against the definition.
    pub fn witnesses_hold(&self, g: &Graph) -> bool {
        self.witnesses.iter().all(|(e, w)| {
            let Some(id) = g.edge_index(e.u, e.v) else { return false };
            let before = bfs_excluding(g, w.monitor, None);
            let after = bfs_excluding(g, w.monitor, Some(id));
            before[w.target] != after[w.target]
        })
    }
}

struct WitnessKeys<'a>(&'a BTreeMap<Edge, Witness>);

impl Serialize for WitnessKeys<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (e, w) in self.0 {
            map.serialize_entry(&e.to_string(), w)?;
        }
        map.end()
    }
}

impl Serialize for MonitoringCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MonitoringCertificate", 2)?;
        st.serialize_field("witnesses", &WitnessKeys(&self.witnesses))?;
        st.serialize_field("uncovered", &self.uncovered)?;
        st.end()
    }
}

/// Checks whether `monitors` is a distance-edge-monitoring set. Covered edges
/// get a witness from the smallest monitor that sees them, with the smallest
/// target whose distance changes.
pub fn is_monitoring_set(g: &Graph, monitors: &[Vertex]) -> Result<MonitoringCertificate> {
    for &x in monitors {
        g.check_vertex(x)?;
    }
    g.require_connected()?;
    let monitors: BTreeSet<Vertex> = monitors.iter().copied().collect();

    let mut owner: BTreeMap<Edge, Vertex> = BTreeMap::new();
    for &x in &monitors {
        for e in em_set_unchecked(g, x).edges {
            owner.entry(e).or_insert(x);
        }
    }

    let mut cert = MonitoringCertificate::default();
    for (id, &e) in g.edges().iter().enumerate() {
        let Some(&x) = owner.get(&e) else {
            cert.uncovered.insert(e);
            continue;
        };
        let before = bfs_excluding(g, x, None);
        let after = bfs_excluding(g, x, Some(id));
        let target = g
            .vertices()
            .find(|&y| before[y] != after[y])
            .expect("an edge in EM(x) changes some distance from x");
        cert.witnesses.insert(e, Witness { monitor: x, target });
    }
    Ok(cert)
}
