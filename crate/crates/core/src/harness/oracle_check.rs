//! Production algorithms against exhaustive references on small graphs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{build_all, random_graphs, random_sparse_connected, vt_specs};
use super::SCHEMA;
use crate::connectivity::{
    cyclic_edge_connectivity, cyclic_edge_connectivity_value, edge_connectivity, restricted_edge_connectivity,
    restricted_edge_connectivity_value, CutMinimum, ORACLE_MAX_EDGES,
};
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, Graph};
use crate::matching::maximum_matching;
use crate::oracle::{berge_tutte_matching_number, brute_force_matching_number, exhaustive_cut_oracle, OracleMode};
use crate::Measure;

/// Graphs up to this order enter the matching comparison.
pub const MATCHING_CHECK_MAX_ORDER: usize = 10;

/// Family graphs are drawn from the corpus up to this order.
const FAMILY_MAX_ORDER: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusSource {
    /// Vertex-transitive family graphs.
    Families,
    /// Seeded random graphs.
    Random,
}

impl CorpusSource {
    /// Parses a comma-separated list; an empty list is an error.
    pub fn parse_list(text: &str) -> Result<Vec<CorpusSource>> {
        let mut out: Vec<CorpusSource> =
            text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::Argument("empty corpus".into()));
        }
        Ok(out)
    }
}

impl FromStr for CorpusSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<CorpusSource> {
        match s {
            "families" => Ok(CorpusSource::Families),
            "random" => Ok(CorpusSource::Random),
            _ => Err(Error::Argument(format!("unknown corpus source {s:?}; expected families or random"))),
        }
    }
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorpusSource::Families => "families",
            CorpusSource::Random => "random",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph: String,
    pub graph6: String,
    pub quantity: &'static str,
    pub production: String,
    pub oracle: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSummary {
    pub schema: u32,
    pub command: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub sources: Vec<CorpusSource>,
    pub matching_graphs: usize,
    pub cut_graphs: usize,
    pub comparisons: usize,
    pub passed: bool,
    pub mismatches: Vec<Mismatch>,
}

struct Named {
    name: String,
    graph: Graph,
    transitive: bool,
}

#[derive(Default)]
struct Outcome {
    comparisons: usize,
    mismatches: Vec<Mismatch>,
}

impl Outcome {
    fn compare<T: PartialEq + fmt::Debug>(&mut self, g: &Named, quantity: &'static str, production: T, oracle: T) {
        self.comparisons += 1;
        if production != oracle {
            self.mismatches.push(Mismatch {
                graph: g.name.clone(),
                graph6: emit_graph6(&g.graph),
                quantity,
                production: format!("{production:?}"),
                oracle: format!("{oracle:?}"),
            });
        }
    }
}

fn check_matching(g: &Named) -> Result<Outcome> {
    let mut out = Outcome::default();
    let m = maximum_matching(&g.graph);
    out.compare(g, "matching is valid", m.is_valid_in(&g.graph), true);
    out.compare(g, "ν vs Berge–Tutte", m.len(), berge_tutte_matching_number(&g.graph)?);
    out.compare(g, "ν vs brute force", m.len(), brute_force_matching_number(&g.graph)?);
    Ok(out)
}

fn fragments_consistent(g: &Graph, min: &CutMinimum) -> bool {
    min.fragments.iter().all(|&x| Measure::Value(g.cut_size(x)) == min.value && x.contains(0))
}

fn check_cuts(g: &Named) -> Result<Outcome> {
    let mut out = Outcome::default();
    let graph = &g.graph;
    let oracle = |mode| exhaustive_cut_oracle(graph, mode);
    out.compare(g, "λ", Measure::Value(edge_connectivity(graph)?), oracle(OracleMode::Restricted(1))?);
    for s in [2, 3] {
        let quantity = if s == 2 { "λ₂" } else { "λ₃" };
        let expect = oracle(OracleMode::Restricted(s))?;
        let full = restricted_edge_connectivity(graph, s)?;
        out.compare(g, quantity, full.value, expect);
        out.compare(g, "fragment sides realise the minimum", fragments_consistent(graph, &full), true);
        let fast = restricted_edge_connectivity_value(graph, s, g.transitive)?;
        out.compare(g, quantity, fast, expect);
    }
    let expect = oracle(OracleMode::Cyclic)?;
    let full = cyclic_edge_connectivity(graph)?;
    out.compare(g, "λ_c", full.value, expect);
    out.compare(g, "fragment sides realise the minimum", fragments_consistent(graph, &full), true);
    out.compare(g, "λ_c", cyclic_edge_connectivity_value(graph, g.transitive)?, expect);
    Ok(out)
}

/// Compares maximum matchings with the deficiency formula and brute force on
/// graphs of order ≤ 10, and fragment-based cut values with edge-subset
/// enumeration on connected graphs with ≤ 16 edges.
pub fn oracle_check(sources: &[CorpusSource], seed: u64, samples: usize) -> Result<OracleSummary> {
    if sources.is_empty() {
        return Err(Error::Argument("empty corpus".into()));
    }
    let mut matching_set = Vec::new();
    let mut cut_set = Vec::new();
    if sources.contains(&CorpusSource::Families) {
        for fg in build_all(&vt_specs(FAMILY_MAX_ORDER)?)? {
            let named = Named { name: fg.spec.to_string(), graph: fg.graph, transitive: true };
            if named.graph.edge_count() <= ORACLE_MAX_EDGES {
                cut_set.push(Named { name: named.name.clone(), graph: named.graph.clone(), transitive: true });
            }
            if named.graph.n() <= MATCHING_CHECK_MAX_ORDER {
                matching_set.push(named);
            }
        }
    }
    if sources.contains(&CorpusSource::Random) {
        for (i, graph) in random_graphs(seed, samples, 1, MATCHING_CHECK_MAX_ORDER).into_iter().enumerate() {
            matching_set.push(Named { name: format!("random#{i}"), graph, transitive: false });
        }
        let sparse = random_sparse_connected(seed.wrapping_add(1), samples, MATCHING_CHECK_MAX_ORDER, ORACLE_MAX_EDGES);
        for (i, graph) in sparse.into_iter().enumerate() {
            cut_set.push(Named { name: format!("sparse#{i}"), graph, transitive: false });
        }
    }
    if matching_set.is_empty() && cut_set.is_empty() {
        return Err(Error::Argument("empty corpus".into()));
    }

    let matching: Vec<Outcome> = matching_set.par_iter().map(check_matching).collect::<Result<_>>()?;
    let cuts: Vec<Outcome> = cut_set.par_iter().map(check_cuts).collect::<Result<_>>()?;
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for o in matching.into_iter().chain(cuts) {
        comparisons += o.comparisons;
        mismatches.extend(o.mismatches);
    }
    Ok(OracleSummary {
        schema: SCHEMA,
        command: "oracle-check",
        seed,
        samples,
        sources: sources.to_vec(),
        matching_graphs: matching_set.len(),
        cut_graphs: cut_set.len(),
        comparisons,
        passed: mismatches.is_empty(),
        mismatches,
    })
}
