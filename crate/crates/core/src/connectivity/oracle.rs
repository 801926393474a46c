//! Literal-definition cut oracle: try every edge subset.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Measure;

/// Largest edge count the oracle accepts (it visits `2^|E|` subsets).
pub const ORACLE_MAX_EDGES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMode {
    /// Every component of `G − F` has at least `s` vertices.
    Restricted(usize),
    /// At least two components of `G − F` contain a cycle.
    Cyclic,
}

/// Minimum size of an edge cut of the requested kind, found by enumerating all
/// edge subsets in order of increasing size.
pub fn exhaustive_cut_oracle(g: &Graph, mode: OracleMode) -> Result<Measure> {
    let edges = g.edges();
    let m = edges.len();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::ResourceCap { what: "oracle edge count", size: m, cap: ORACLE_MAX_EDGES });
    }
    let mut masks: Vec<u32> = (0..1u32 << m).collect();
    masks.sort_by_key(|f| (f.count_ones(), *f));
    for f in masks {
        let mut adj = vec![VertexSet::empty(); g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if f >> i & 1 == 0 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        let rest = Graph::from_adjacency(adj).expect("subgraph of a valid graph");
        let parts = rest.components(rest.vertices());
        if parts.len() < 2 {
            continue;
        }
        let ok = match mode {
            OracleMode::Restricted(s) => parts.components.iter().all(|c| c.len() >= s),
            OracleMode::Cyclic => parts.components.iter().filter(|&&c| rest.edges_within(c) >= c.len()).count() >= 2,
        };
        if ok {
            return Ok(Measure::Value(f.count_ones() as usize));
        }
    }
    Ok(Measure::Undefined)
}
