//! Report-producing commands behind the `factorcrit` binary.
//!
//! Every command returns a serialisable summary plus a pass flag; the binary
//! maps errors and failures to exit codes with [`exit_code`]. Reports contain
//! no timing data unless asked for, so equal inputs give byte-identical JSON.

pub mod corpus;
mod lemmas;
mod oracle_check;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use lemmas::{verify_lemma, LemmaId, LemmaOptions, LemmaSummary, Violation, LEMMA_IDS};
pub use oracle_check::{oracle_check, CorpusSource, OracleSummary};

use crate::connectivity::{
    cyclic_edge_connectivity_value, edge_connectivity, is_super_lambda, min_edge_degree,
    restricted_edge_connectivity, restricted_edge_connectivity_value, vertex_connectivity, zeta,
};
use crate::counting::{girth, independence_number, odd_girth};
use crate::criticality::{is_p_factor_critical_criterion, is_p_factor_critical_direct, CriticalityVerdict};
use crate::error::{Error, Result};
use crate::families::{FamilyGraph, FamilySpec};
use crate::graph::{emit_graph6, parse_graph6, Graph, VertexSet};
use crate::matching::has_perfect_matching_within;
use crate::symmetry::automorphism_generators;
use crate::Measure;

pub const SCHEMA: u32 = 1;
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Sweep graphs up to this order also get the criterion check as a second path.
pub const SWEEP_CROSS_CHECK_MAX_ORDER: usize = 17;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Exit status for an error: 3 for resource caps, 2 for everything else.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_resource_cap() {
        EXIT_CAP
    } else {
        EXIT_INPUT
    }
}

/// Reads a family spec, or failing that a graph6 string.
pub fn parse_input(text: &str) -> Result<FamilyGraph> {
    let text = text.trim();
    match text.parse::<FamilySpec>() {
        Ok(spec) => spec.build(),
        Err(spec_err) => match parse_graph6(text.as_bytes()) {
            Ok(graph) => Ok(FamilyGraph { spec: FamilySpec::Graph6File(text.into()), graph, certificate: None }),
            Err(e) if text.contains(':') => Err(Error::Argument(format!("{spec_err}; as graph6: {e}"))),
            Err(e) => Err(e.into()),
        },
    }
}

fn label(fg: &FamilyGraph) -> Option<String> {
    match fg.spec {
        FamilySpec::Graph6File(_) if fg.certificate.is_none() => None,
        _ => Some(fg.spec.to_string()),
    }
}

/// A boolean that is `"undefined"` when it does not apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag(pub Option<bool>);

impl Serialize for Flag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Some(b) => serializer.serialize_bool(b),
            None => serializer.serialize_str("undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// A vertex whose removal leaves no perfect matching.
    pub factor_critical: Option<VertexSet>,
    pub bicritical: Option<VertexSet>,
    pub three_factor_critical: Option<VertexSet>,
    /// Side of a minimum restricted edge cut, holding vertex 0.
    pub lambda2_fragment: Option<VertexSet>,
    pub superatom: Option<VertexSet>,
    pub max_independent_set: Option<VertexSet>,
}

/// Re-evaluation of a vertex set supplied with `--witness`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub set: VertexSet,
    pub size: usize,
    pub odd_components_after_removal: usize,
    pub remainder_has_perfect_matching: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub seed: u64,
    pub graph6: String,
    pub family: Option<String>,
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub degree: Measure,
    pub connected: bool,
    pub girth: Measure,
    pub odd_girth: Measure,
    pub kappa: Measure,
    pub lambda: Measure,
    pub xi: Measure,
    pub lambda2: Measure,
    pub lambda3: Measure,
    pub lambda_c: Measure,
    pub zeta: Measure,
    pub alpha: Measure,
    pub super_lambda: Flag,
    pub super_lambda2: Flag,
    pub vertex_transitive: bool,
    /// `"certificate"` for generator-supplied symmetry, `"search"` otherwise.
    pub transitivity_source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphism_group_order: Option<u128>,
    pub factor_critical: Flag,
    pub bicritical: Flag,
    pub three_factor_critical: Flag,
    pub witnesses: Witnesses,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_check: Option<WitnessCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Run the automorphism search even when a certificate is present.
    pub verify_symmetry: bool,
    pub timings: bool,
    pub witness: Option<VertexSet>,
    pub seed: Option<u64>,
}

/// Absorbs "does not apply" errors into `Undefined`; caps and real failures pass through.
fn measured(r: Result<usize>) -> Result<Measure> {
    match r {
        Ok(v) => Ok(Measure::Value(v)),
        Err(Error::TooSmall { .. } | Error::Disconnected | Error::NoEdges | Error::Undefined(_)) => {
            Ok(Measure::Undefined)
        }
        Err(e) => Err(e),
    }
}

fn measured_value(r: Result<Measure>) -> Result<Measure> {
    match r {
        Ok(m) => Ok(m),
        Err(Error::TooSmall { .. } | Error::Disconnected | Error::NoEdges | Error::Undefined(_)) => {
            Ok(Measure::Undefined)
        }
        Err(e) => Err(e),
    }
}

fn verdict(g: &Graph, p: usize) -> Result<Option<CriticalityVerdict>> {
    if p > g.n() || p % 2 != g.n() % 2 {
        return Ok(None);
    }
    is_p_factor_critical_direct(g, p).map(Some)
}

struct Clock {
    on: bool,
    last: Instant,
    laps: BTreeMap<&'static str, f64>,
}

impl Clock {
    fn new(on: bool) -> Clock {
        Clock { on, last: Instant::now(), laps: BTreeMap::new() }
    }

    fn lap(&mut self, name: &'static str) {
        if self.on {
            let now = Instant::now();
            let ms = (now - self.last).as_secs_f64() * 1e3;
            self.laps.insert(name, (ms * 1e3).round() / 1e3);
            self.last = now;
        }
    }
}

/// Full invariant vector of one graph.
pub fn analyze(fg: &FamilyGraph, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let g = &fg.graph;
    let n = g.n();
    let mut clock = Clock::new(opts.timings);
    if let Some(x) = opts.witness {
        if !x.is_subset(g.vertices()) {
            return Err(Error::Argument(format!("witness {x} names a vertex outside 0..{n}")));
        }
    }

    let certified = !opts.verify_symmetry && fg.certified_transitive();
    let (vertex_transitive, source, group_order) = if certified {
        (true, "certificate", None)
    } else if n == 0 {
        (true, "search", Some(1))
    } else {
        let group = automorphism_generators(g)?;
        (group.is_transitive(), "search", group.order())
    };
    clock.lap("symmetry");

    let connected = g.is_connected();
    let kappa = measured(vertex_connectivity(g))?;
    let lambda = measured(edge_connectivity(g))?;
    clock.lap("kappa_lambda");

    let xi = measured(min_edge_degree(g))?;
    let r2 = match restricted_edge_connectivity(g, 2) {
        Ok(min) => Some(min),
        Err(Error::TooSmall { .. } | Error::Disconnected) => None,
        Err(e) => return Err(e),
    };
    let lambda2 = r2.as_ref().map_or(Measure::Undefined, |m| m.value);
    let superatom_info = r2.as_ref().filter(|m| !m.value.is_undefined()).map(|m| {
        crate::connectivity::super_lambda2_from_fragments(n, &m.fragments)
    });
    let lambda3 = measured_value(restricted_edge_connectivity_value(g, 3, vertex_transitive))?;
    let lambda_c = measured_value(cyclic_edge_connectivity_value(g, vertex_transitive))?;
    let super_lambda = match is_super_lambda(g) {
        Ok(b) => Some(b),
        Err(Error::TooSmall { .. } | Error::Disconnected) => None,
        Err(e) => return Err(e),
    };
    clock.lap("restricted_cuts");

    let (alpha, max_independent_set) = if n == 0 {
        (Measure::Value(0), Some(VertexSet::empty()))
    } else {
        let (a, set) = independence_number(g)?;
        (Measure::Value(a), Some(set))
    };
    clock.lap("independence");

    let fc = verdict(g, 1)?;
    let bc = verdict(g, 2)?;
    let fc3 = verdict(g, 3)?;
    clock.lap("criticality");

    let witness_check = opts.witness.map(|x| {
        let rest = g.vertices() - x;
        WitnessCheck {
            set: x,
            size: x.len(),
            odd_components_after_removal: g.odd_components(rest),
            remainder_has_perfect_matching: has_perfect_matching_within(g, rest),
        }
    });

    let regular_degree = g.regular_degree();
    Ok(AnalysisReport {
        schema: SCHEMA,
        seed: opts.seed.unwrap_or(DEFAULT_SEED),
        graph6: emit_graph6(g),
        family: label(fg),
        n,
        edges: g.edge_count(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        regular: regular_degree.is_some(),
        degree: regular_degree.into(),
        connected,
        girth: girth(g).into(),
        odd_girth: odd_girth(g).into(),
        kappa,
        lambda,
        xi,
        lambda2,
        lambda3,
        lambda_c,
        zeta: zeta(g),
        alpha,
        super_lambda: Flag(super_lambda),
        super_lambda2: Flag(superatom_info.as_ref().map(|s| s.holds)),
        vertex_transitive,
        transitivity_source: source,
        automorphism_group_order: group_order,
        factor_critical: Flag(fc.as_ref().map(|v| v.holds)),
        bicritical: Flag(bc.as_ref().map(|v| v.holds)),
        three_factor_critical: Flag(fc3.as_ref().map(|v| v.holds)),
        witnesses: Witnesses {
            factor_critical: fc.and_then(|v| v.witness),
            bicritical: bc.and_then(|v| v.witness),
            three_factor_critical: fc3.and_then(|v| v.witness),
            lambda2_fragment: r2.and_then(|m| m.fragments.first().copied()),
            superatom: superatom_info.and_then(|s| s.superatom),
            max_independent_set,
        },
        witness_check,
        timings_ms: opts.timings.then_some(clock.laps),
    })
}

/// One graph of the main sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub family: String,
    pub graph6: String,
    pub n: usize,
    pub degree: Measure,
    pub is_cycle: bool,
    pub three_factor_critical: bool,
    /// Smallest 3-set whose removal leaves no perfect matching.
    pub witness: Option<VertexSet>,
    /// Whether the deficiency criterion agreed, when it was run.
    pub criterion_agrees: Option<bool>,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub order: usize,
    pub graphs: usize,
    pub cycles: usize,
    pub three_factor_critical: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremSummary {
    pub schema: u32,
    pub command: &'static str,
    pub claim: &'static str,
    pub max_order: usize,
    pub graphs_checked: usize,
    pub violation_count: usize,
    pub passed: bool,
    pub per_order: Vec<OrderSummary>,
    pub violations: Vec<SweepEntry>,
    pub graphs: Vec<SweepEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<usize, f64>>,
}

fn sweep_one(fg: &FamilyGraph) -> Result<(SweepEntry, f64)> {
    let start = Instant::now();
    let g = &fg.graph;
    if !g.is_connected() {
        return Err(Error::Family(format!("{}: sweep graph is disconnected", fg.spec)));
    }
    if !fg.certified_transitive() {
        return Err(Error::Family(format!("{}: transitivity certificate does not verify", fg.spec)));
    }
    let direct = is_p_factor_critical_direct(g, 3)?;
    let criterion_agrees = if g.n() <= SWEEP_CROSS_CHECK_MAX_ORDER {
        Some(is_p_factor_critical_criterion(g, 3)?.holds == direct.holds)
    } else {
        None
    };
    let is_cycle = g.is_cycle();
    let entry = SweepEntry {
        family: fg.spec.to_string(),
        graph6: emit_graph6(g),
        n: g.n(),
        degree: g.regular_degree().into(),
        is_cycle,
        three_factor_critical: direct.holds,
        witness: direct.witness,
        criterion_agrees,
        consistent: direct.holds != is_cycle && criterion_agrees != Some(false),
    };
    Ok((entry, start.elapsed().as_secs_f64() * 1e3))
}

/// Checks "3-factor-critical iff not a cycle" over every connected
/// vertex-transitive odd graph the families produce up to `max_order`.
///
/// With `threads` set, work runs in a dedicated pool of that size; results are
/// merged in generation order either way.
pub fn verify_theorem(max_order: usize, threads: Option<usize>, timings: bool) -> Result<TheoremSummary> {
    let specs = corpus::theorem_specs(max_order)?;
    let run = || -> Result<Vec<(SweepEntry, f64)>> {
        specs.par_iter().map(|spec| sweep_one(&spec.build()?)).collect()
    };
    let results = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Argument(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };

    let mut per_order: BTreeMap<usize, OrderSummary> = BTreeMap::new();
    let mut order_ms: BTreeMap<usize, f64> = BTreeMap::new();
    for (e, ms) in &results {
        let row = per_order.entry(e.n).or_insert(OrderSummary {
            order: e.n,
            graphs: 0,
            cycles: 0,
            three_factor_critical: 0,
            violations: 0,
        });
        row.graphs += 1;
        row.cycles += usize::from(e.is_cycle);
        row.three_factor_critical += usize::from(e.three_factor_critical);
        row.violations += usize::from(!e.consistent);
        *order_ms.entry(e.n).or_default() += ms;
    }
    let graphs: Vec<SweepEntry> = results.into_iter().map(|(e, _)| e).collect();
    let violations: Vec<SweepEntry> = graphs.iter().filter(|e| !e.consistent).cloned().collect();
    Ok(TheoremSummary {
        schema: SCHEMA,
        command: "verify-theorem",
        claim: "a connected vertex-transitive graph of odd order at least 5 is 3-factor-critical iff it is not a cycle",
        max_order,
        graphs_checked: graphs.len(),
        violation_count: violations.len(),
        passed: violations.is_empty(),
        per_order: per_order.into_values().collect(),
        violations,
        graphs,
        timings_ms: timings.then(|| order_ms.into_iter().map(|(k, v)| (k, (v * 1e3).round() / 1e3)).collect()),
    })
}

/// Lines printed by `generate`: one graph per spec. `circulants:N` expands to
/// every connected circulant class of order `N`.
pub fn generate(spec: &str) -> Result<Vec<FamilyGraph>> {
    if let Some(n) = spec.strip_prefix("circulants:") {
        let n: usize = n.parse().map_err(|_| Error::Family(format!("not a number: {n:?}")))?;
        return crate::families::circulant_classes(n)?
            .into_iter()
            .map(|steps| FamilySpec::Circulant { n, steps }.build())
            .collect();
    }
    Ok(vec![spec.parse::<FamilySpec>()?.build()?])
}

/// Parses `1,4,7` (or `{1,4,7}`) into a vertex set.
pub fn parse_vertex_set(text: &str) -> Result<VertexSet> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    if inner.trim().is_empty() {
        return Ok(VertexSet::empty());
    }
    inner
        .split(',')
        .map(|t| {
            let v: usize =
                t.trim().parse().map_err(|_| Error::Argument(format!("not a vertex index: {t:?}")))?;
            if v >= crate::graph::MAX_VERTICES {
                return Err(Error::Argument(format!("vertex {v} out of range")));
            }
            Ok(v)
        })
        .collect()
}

/// Accepts decimal or `0x`-prefixed hexadecimal.
pub fn parse_seed(text: &str) -> Result<u64> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|_| Error::Argument(format!("bad seed {text:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(input: &str) -> AnalysisReport {
        analyze(&parse_input(input).unwrap(), &AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn analyze_examples() {
        let c5 = report("circulant:5:1");
        assert_eq!(c5.three_factor_critical, Flag(Some(false)));
        assert_eq!((c5.kappa, c5.lambda), (Measure::Value(2), Measure::Value(2)));
        let c7 = report("circulant:7:1,2");
        assert_eq!(c7.three_factor_critical, Flag(Some(true)));
        assert_eq!(c7.kappa, Measure::Value(4));
        assert!(parse_input("not a graph").is_err());
    }

    #[test]
    fn graph6_input_uses_search() {
        let r = report("Dhc");
        assert_eq!(r.n, 5);
        assert!(r.vertex_transitive);
        assert_eq!(r.transitivity_source, "search");
        assert_eq!(r.automorphism_group_order, Some(10));
        assert_eq!(r.family, None);
    }

    #[test]
    fn star_has_undefined_restricted_measures() {
        let star = FamilyGraph {
            spec: FamilySpec::Graph6File("star".into()),
            graph: Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            certificate: None,
        };
        let r = analyze(&star, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.lambda2, Measure::Undefined);
        assert_eq!(r.lambda_c, Measure::Undefined);
        assert_eq!(r.super_lambda2, Flag(None));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"lambda2\":\"undefined\""));
    }

    #[test]
    fn witness_feeds_back() {
        let c5 = report("cycle:5");
        let w = c5.witnesses.three_factor_critical.unwrap();
        let opts = AnalyzeOptions { witness: Some(w), ..AnalyzeOptions::default() };
        let again = analyze(&parse_input(&c5.graph6).unwrap(), &opts).unwrap();
        assert!(!again.witness_check.unwrap().remainder_has_perfect_matching);
    }

    #[test]
    fn seeds_and_sets_parse() {
        assert_eq!(parse_seed("0xC0FFEE").unwrap(), DEFAULT_SEED);
        assert_eq!(parse_seed("12").unwrap(), 12);
        assert!(parse_seed("x").is_err());
        assert_eq!(parse_vertex_set("{0,2,4}").unwrap().to_vec(), vec![0, 2, 4]);
        assert!(parse_vertex_set("1,a").is_err());
    }

    #[test]
    fn small_sweep() {
        let s = verify_theorem(7, Some(2), false).unwrap();
        assert!(s.passed);
        assert_eq!(s.graphs_checked, 5);
        let c5 = &s.graphs[0];
        assert!(c5.is_cycle && !c5.three_factor_critical);
        assert!(s.graphs[1].three_factor_critical);
    }
}
