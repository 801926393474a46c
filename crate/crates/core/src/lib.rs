//! Matching-theoretic and connectivity invariants of small simple graphs, with
//! exhaustive checks of p-factor-criticality over vertex-transitive families.
//!
//! Graphs carry at most 128 vertices (64 unless `FACTORCRIT_MAX_WIDTH=128`);
//! every search here is exact and sized for desk-scale instances.

#![forbid(unsafe_code)]

pub mod connectivity;
pub mod counting;
pub mod criticality;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod oracle;
pub mod symmetry;

use serde::{Serialize, Serializer};

pub use error::{Error, Graph6Error, Result};
pub use graph::{emit_graph6, parse_graph6, Graph, VertexSet};

/// An integer invariant that may be undefined for a given graph.
///
/// Serialises as the number or as the string `"undefined"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Value(usize),
    Undefined,
}

impl Measure {
    pub fn value(self) -> Option<usize> {
        match self {
            Measure::Value(v) => Some(v),
            Measure::Undefined => None,
        }
    }

    pub fn is_undefined(self) -> bool {
        self == Measure::Undefined
    }
}

impl From<Option<usize>> for Measure {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Measure::Undefined, Measure::Value)
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Measure::Value(v) => write!(f, "{v}"),
            Measure::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for Measure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Measure::Value(v) => serializer.serialize_u64(*v as u64),
            Measure::Undefined => serializer.serialize_str("undefined"),
        }
    }
}
