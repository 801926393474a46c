//! Property suites, one per supporting statement, each restricted to the graphs
//! that meet its hypotheses.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{build_all, random_graphs, vt_specs};
use super::SCHEMA;
use crate::connectivity::{
    cyclic_edge_connectivity_value, edge_connectivity, is_super_lambda, is_super_lambda2, min_edge_degree,
    restricted_edge_connectivity_value, vertex_connectivity, zeta,
};
use crate::counting::{cycle_census, find_twins, girth, has_triangle, independence_number, odd_girth};
use crate::counting::{singleton_edge_audit, MAX_CENSUS_LENGTH};
use crate::criticality::{check_necessary_conditions, is_p_factor_critical_criterion, is_p_factor_critical_direct};
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, Graph, VertexSet};
use crate::matching::{has_perfect_matching, is_elementary};
use crate::symmetry::{automorphism_generators, block_induced_transitivity_check_with, clique_block_of_size};
use crate::Measure;

/// Accepted values of `verify-lemma --id`.
pub const LEMMA_IDS: &[&str] =
    &["1.1", "2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9", "2.10", "2.11", "3.1", "3.2", "3.3", "3.4", "4"];

/// Family graphs up to this order join the random graphs in the dual-path suite.
const DUAL_PATH_FAMILY_MAX_ORDER: usize = 11;

/// Random graphs in the dual-path and necessary-condition suites have at most this order.
const RANDOM_MAX_ORDER: usize = 10;

/// Largest p tried by the necessary-condition suite on family graphs.
const NECESSARY_MAX_P: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LemmaId(&'static str);

impl LemmaId {
    pub fn as_str(self) -> &'static str {
        self.0
    }

    pub fn statement(self) -> &'static str {
        match self.0 {
            "1.1" => "connected VT graphs: odd order gives factor-critical; even order gives bicritical or elementary bipartite",
            "2.1" => "deleting-p-sets and the odd-component criterion agree on p-factor-criticality",
            "2.2" => "connected k-regular VT graphs have κ > 2k/3",
            "2.3" => "VT graphs of degree 4 or 6 have κ = k",
            "2.4" => "connected VT graphs have λ = k",
            "2.5" => "connected VT graphs with k ≥ 3 are super-λ iff no imprimitive block is a k-clique",
            "2.6" => "connected VT graphs of order ≥ 4 that are odd or triangle-free have λ₂ = ξ",
            "2.7" => "connected VT graphs with k > 2 and girth > 4 are super-λ₂",
            "2.8" => "connected VT odd graphs with k > 2 and girth > 3 are super-λ₂",
            "2.9" => "imprimitive blocks of VT graphs induce VT subgraphs and have size dividing n",
            "2.10" => "VT graphs with n ≥ 6, girth ≥ 4, not (k = 3, g = 4): λ₃ = 3k−4 or λ₃ | n with 2k−2 ≤ λ₃ ≤ 3k−5",
            "2.11" => "connected VT graphs with k ≥ 4 and girth ≥ 5 have λ_c = ζ",
            "3.1" => "connected VT odd graphs with k ≥ 4 have α < (n−1)/2",
            "3.2" => "VT graphs with a triangle: singletons of G−X never outnumber edges of G[X]",
            "3.3" => "connected 4-regular VT triangle-free odd graphs have no twins",
            "3.4" => "connected VT odd graphs with k = 4, girth 4: every edge is in ≥ 2 quadrangles, shared by an adjacent edge",
            "4" => "p-factor-critical with 1 ≤ p < n implies κ ≥ p and λ ≥ p+1",
            _ => unreachable!("ids are validated on parse"),
        }
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LemmaId> {
        LEMMA_IDS
            .iter()
            .find(|&&id| id == s.trim())
            .map(|&id| LemmaId(id))
            .ok_or_else(|| Error::Argument(format!("unknown lemma id {s:?}; expected one of {}", LEMMA_IDS.join(", "))))
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph: String,
    pub graph6: String,
    pub detail: String,
    pub witness: Option<VertexSet>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaSummary {
    pub schema: u32,
    pub command: &'static str,
    pub id: String,
    pub statement: &'static str,
    pub max_order: usize,
    pub seed: u64,
    pub samples: usize,
    pub corpus_size: usize,
    pub hypothesis_matched: usize,
    pub checks: usize,
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

/// One graph under test. `transitive` is true only for certified family graphs.
struct Case {
    name: String,
    graph: Graph,
    transitive: bool,
}

#[derive(Debug, Default)]
struct Tally {
    matched: bool,
    checks: usize,
    violations: Vec<Violation>,
    /// Free-form counters merged into the notes.
    counters: Vec<(&'static str, usize)>,
}

impl Tally {
    fn check(&mut self, case: &Case, ok: bool, detail: impl FnOnce() -> String, witness: Option<VertexSet>) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                graph: case.name.clone(),
                graph6: emit_graph6(&case.graph),
                detail: detail(),
                witness,
            });
        }
    }

    fn count(&mut self, what: &'static str) {
        self.counters.push((what, 1));
    }
}

fn vt_cases(max_order: usize) -> Result<Vec<Case>> {
    Ok(build_all(&vt_specs(max_order)?)?
        .into_iter()
        .map(|fg| Case { name: fg.spec.to_string(), graph: fg.graph, transitive: true })
        .collect())
}

fn random_cases(seed: u64, count: usize) -> Vec<Case> {
    random_graphs(seed, count, 1, RANDOM_MAX_ORDER)
        .into_iter()
        .enumerate()
        .map(|(i, graph)| Case { name: format!("random#{i}"), graph, transitive: false })
        .collect()
}

fn degree(g: &Graph) -> Result<usize> {
    g.regular_degree().ok_or_else(|| Error::Hypothesis("vertex-transitive graph is not regular".into()))
}

fn value(m: Measure) -> usize {
    m.value().expect("defined under the suite hypotheses")
}

/// Options shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct LemmaOptions {
    pub max_order: usize,
    pub seed: u64,
    /// Random graphs (2.1, 4) or random vertex sets per graph (3.2).
    pub samples: usize,
}

/// Runs one suite over its corpus.
pub fn verify_lemma(id: LemmaId, opts: LemmaOptions) -> Result<LemmaSummary> {
    let mut cases = vt_cases(opts.max_order)?;
    match id.as_str() {
        "2.1" => {
            cases.retain(|c| c.graph.n() <= DUAL_PATH_FAMILY_MAX_ORDER);
            cases.extend(random_cases(opts.seed, opts.samples));
        }
        "4" => cases.extend(random_cases(opts.seed, opts.samples)),
        _ => {}
    }
    if cases.is_empty() {
        return Err(Error::Argument("empty corpus".into()));
    }

    let tallies: Vec<Tally> = cases
        .par_iter()
        .enumerate()
        .map(|(i, case)| {
            let mut t = Tally::default();
            run_case(id, case, i, opts, &mut t)?;
            Ok(t)
        })
        .collect::<Result<_>>()?;

    let mut matched = 0;
    let mut checks = 0;
    let mut violations = Vec::new();
    let mut counters: Vec<(&'static str, usize)> = Vec::new();
    for t in tallies {
        matched += usize::from(t.matched);
        checks += t.checks;
        violations.extend(t.violations);
        for (what, k) in t.counters {
            match counters.iter_mut().find(|(w, _)| *w == what) {
                Some(slot) => slot.1 += k,
                None => counters.push((what, k)),
            }
        }
    }
    counters.sort();
    let notes = counters.into_iter().map(|(what, k)| format!("{what}: {k}")).collect();
    Ok(LemmaSummary {
        schema: SCHEMA,
        command: "verify-lemma",
        id: id.to_string(),
        statement: id.statement(),
        max_order: opts.max_order,
        seed: opts.seed,
        samples: opts.samples,
        corpus_size: cases.len(),
        hypothesis_matched: matched,
        checks,
        passed: violations.is_empty(),
        violations,
        notes,
    })
}

fn run_case(id: LemmaId, case: &Case, index: usize, opts: LemmaOptions, t: &mut Tally) -> Result<()> {
    let g = &case.graph;
    let n = g.n();
    match id.as_str() {
        "1.1" => {
            t.matched = true;
            if n % 2 == 1 {
                let v = is_p_factor_critical_direct(g, 1)?;
                t.check(case, v.holds, || "odd order but not factor-critical".into(), v.witness);
            } else {
                let bicritical = is_p_factor_critical_direct(g, 2)?;
                let elementary_bipartite = g.is_bipartite() && is_elementary(g);
                if elementary_bipartite {
                    t.count("elementary bipartite");
                }
                if bicritical.holds {
                    t.count("bicritical");
                }
                t.check(
                    case,
                    bicritical.holds || elementary_bipartite,
                    || "even order, neither bicritical nor elementary bipartite".into(),
                    bicritical.witness,
                );
            }
        }
        "2.1" => {
            t.matched = true;
            for p in 1..=3 {
                if p > n || p % 2 != n % 2 {
                    continue;
                }
                let direct = is_p_factor_critical_direct(g, p)?;
                let criterion = is_p_factor_critical_criterion(g, p)?;
                t.check(
                    case,
                    direct.holds == criterion.holds,
                    || format!("p = {p}: direct says {}, criterion says {}", direct.holds, criterion.holds),
                    direct.witness.or(criterion.witness),
                );
            }
        }
        "2.2" => {
            let k = degree(g)?;
            t.matched = true;
            let kappa = vertex_connectivity(g)?;
            t.check(case, 3 * kappa > 2 * k, || format!("κ = {kappa}, k = {k}"), None);
        }
        "2.3" => {
            let k = degree(g)?;
            if k == 4 || k == 6 {
                t.matched = true;
                let kappa = vertex_connectivity(g)?;
                t.check(case, kappa == k, || format!("κ = {kappa}, k = {k}"), None);
            }
        }
        "2.4" => {
            let k = degree(g)?;
            t.matched = true;
            let lambda = edge_connectivity(g)?;
            t.check(case, lambda == k, || format!("λ = {lambda}, k = {k}"), None);
        }
        "2.5" => {
            let k = degree(g)?;
            if k >= 3 {
                t.matched = true;
                let group = automorphism_generators(g)?;
                let block = clique_block_of_size(g, &group, k);
                let super_lambda = is_super_lambda(g)?;
                if block.is_some() {
                    t.count("graphs with a k-clique block");
                }
                if !super_lambda {
                    t.count("graphs that are not super-λ");
                }
                t.check(
                    case,
                    super_lambda == block.is_none(),
                    || format!("super-λ = {super_lambda}, k-clique block = {:?}", block.map(|b| b.to_string())),
                    block,
                );
            }
        }
        "2.6" => {
            let xi = min_edge_degree(g)?;
            let lambda2 = restricted_edge_connectivity_value(g, 2, case.transitive)?;
            if let Measure::Value(l2) = lambda2 {
                t.check(case, l2 <= xi, || format!("λ₂ = {l2} exceeds ξ = {xi}"), None);
            }
            if n >= 4 && (n % 2 == 1 || !has_triangle(g)) {
                t.matched = true;
                t.check(case, lambda2 == Measure::Value(xi), || format!("λ₂ = {lambda2}, ξ = {xi}"), None);
            }
        }
        "2.7" | "2.8" => {
            let k = degree(g)?;
            let gi = girth(g).unwrap_or(usize::MAX);
            let hyp = if id.as_str() == "2.7" { k > 2 && gi > 4 } else { n % 2 == 1 && k > 2 && gi > 3 };
            if hyp {
                t.matched = true;
                let s = is_super_lambda2(g)?;
                t.check(case, s.holds, || "a minimum restricted cut does not isolate an edge".into(), s.superatom);
            }
        }
        "2.9" => {
            t.matched = true;
            let group = automorphism_generators(g)?;
            for block in group.blocks_containing(0) {
                if block.len() < 2 {
                    continue;
                }
                t.count("nontrivial blocks checked");
                t.check(case, n.is_multiple_of(block.len()), || format!("block size {} does not divide n", block.len()), Some(block));
                let vt = block_induced_transitivity_check_with(g, &group, block)?;
                t.check(case, vt, || "block induces a graph that is not vertex-transitive".into(), Some(block));
            }
        }
        "2.10" => {
            let k = degree(g)?;
            let gi = girth(g).unwrap_or(usize::MAX);
            if n >= 6 && gi >= 4 && !(k == 3 && gi == 4) {
                t.matched = true;
                let l3 = value(restricted_edge_connectivity_value(g, 3, case.transitive)?);
                let main = l3 + 4 == 3 * k;
                let divisor = n.is_multiple_of(l3) && 2 * k <= l3 + 2 && l3 + 5 <= 3 * k;
                if divisor {
                    t.count("divisor branch");
                }
                t.check(case, main || divisor, || format!("λ₃ = {l3}, k = {k}, n = {n}"), None);
            }
        }
        "2.11" => {
            let k = degree(g)?;
            let gi = girth(g).unwrap_or(usize::MAX);
            if k >= 4 && gi >= 5 && gi != usize::MAX {
                t.matched = true;
                let lc = cyclic_edge_connectivity_value(g, case.transitive)?;
                let z = zeta(g);
                t.check(case, lc == z && !lc.is_undefined(), || format!("λ_c = {lc}, ζ = {z}"), None);
            }
        }
        "3.1" => {
            let k = degree(g)?;
            if n % 2 == 1 && k >= 4 {
                t.matched = true;
                let (alpha, set) = independence_number(g)?;
                t.check(case, 2 * alpha + 1 < n, || format!("α = {alpha}, n = {n}"), Some(set));
                // Counting premise: the shortest odd cycles cover every vertex equally often.
                if let Some(og) = odd_girth(g).filter(|&l| l <= MAX_CENSUS_LENGTH) {
                    let stats = cycle_census(g, og)?;
                    let sum: u64 = stats.per_vertex.iter().sum();
                    t.check(case, stats.uniform_vertex_count().is_some(), || format!("{og}-cycles uneven per vertex"), None);
                    t.check(case, sum == og as u64 * stats.total, || format!("{og}-cycle handshake fails"), None);
                }
            }
        }
        "3.2" => {
            if !has_triangle(g) {
                t.count("corpus graphs without a triangle (skipped)");
                return Ok(());
            }
            t.matched = true;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(index as u64);
            for _ in 0..opts.samples {
                let density: f64 = rng.gen_range(0.05..0.95);
                let x: VertexSet = (0..n).filter(|_| rng.gen_bool(density)).collect();
                let audit = singleton_edge_audit(g, x);
                t.check(
                    case,
                    audit.passes,
                    || format!("{} singletons but {} edges inside X", audit.singletons, audit.edges),
                    Some(x),
                );
            }
        }
        "3.3" => {
            let k = degree(g)?;
            if k == 4 && n % 2 == 1 && !has_triangle(g) {
                t.matched = true;
                let twins = find_twins(g);
                let witness = twins.first().map(|&(u, v)| VertexSet::singleton(u).with(v));
                t.check(case, twins.is_empty(), || format!("{} twin pairs", twins.len()), witness);
            }
        }
        "3.4" => {
            let k = degree(g)?;
            if k == 4 && n % 2 == 1 && girth(g) == Some(4) {
                t.matched = true;
                let stats = cycle_census(g, 4)?;
                let m = stats.uniform_vertex_count();
                t.check(case, m.is_some(), || "quadrangles uneven per vertex".into(), None);
                let m = m.unwrap_or(0);
                t.check(case, m % 4 == 0, || format!("m = {m} is not a multiple of 4"), None);
                t.check(case, 4 * stats.total == m * n as u64, || format!("4·n₄ = {} but m·n = {}", 4 * stats.total, m * n as u64), None);
                let edge_sum: u64 = stats.per_edge.iter().map(|&(_, c)| c).sum();
                t.check(case, edge_sum == 4 * stats.total, || "quadrangle edge handshake fails".into(), None);
                for &((u, v), c) in &stats.per_edge {
                    let e = VertexSet::singleton(u).with(v);
                    t.check(case, c >= 2, || format!("edge {u}-{v} lies in {c} quadrangles"), Some(e));
                    let twin_edge = [(u, v), (v, u)].iter().any(|&(a, b)| {
                        g.neighbors(a).iter().any(|w| w != b && stats.edge_count(a, w) == c)
                    });
                    t.check(case, twin_edge, || format!("no edge adjacent to {u}-{v} shares its count {c}"), Some(e));
                }
            }
        }
        "4" => {
            if n < 2 {
                return Ok(());
            }
            let max_p = if case.transitive { NECESSARY_MAX_P.min(n - 1) } else { n - 1 };
            for p in 1..=max_p {
                if p % 2 != n % 2 {
                    continue;
                }
                let v = is_p_factor_critical_direct(g, p)?;
                if v.holds {
                    t.matched = true;
                    t.count("p-factor-critical instances");
                    let ok = check_necessary_conditions(g, p)?;
                    t.check(case, ok, || format!("{p}-factor-critical but κ < {p} or λ < {}", p + 1), None);
                    // Parity descent: p-factor-critical implies (p−2)-factor-critical.
                    let lower = match p {
                        1 => true,
                        2 => has_perfect_matching(g),
                        _ => is_p_factor_critical_direct(g, p - 2)?.holds,
                    };
                    t.check(case, lower, || format!("{p}-factor-critical but not {}-factor-critical", p - 2), None);
                }
            }
        }
        _ => unreachable!("ids are validated on parse"),
    }
    Ok(())
}
