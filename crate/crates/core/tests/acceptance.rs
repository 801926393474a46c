//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal.

// The tolerance is pinned at zero, which makes `len() <= TOLERANCE` look trivial to clippy.
#![allow(clippy::absurd_extreme_comparisons)]

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use factorcrit::connectivity::{
    cyclic_edge_connectivity_value, is_super_lambda, is_super_lambda2, min_edge_degree, restricted_edge_connectivity,
    restricted_edge_connectivity_value, zeta, ORACLE_MAX_EDGES,
};
use factorcrit::counting::cycle_census;
use factorcrit::criticality::{is_bicritical, is_p_factor_critical_criterion, is_p_factor_critical_direct};
use factorcrit::families::{circulant, kneser, petersen, FamilySpec};
use factorcrit::harness::corpus::{build_all, random_graphs, vt_specs};
use factorcrit::harness::{oracle_check, verify_lemma, verify_theorem, CorpusSource, LemmaOptions, DEFAULT_SEED};
use factorcrit::matching::is_elementary;
use factorcrit::oracle::{exhaustive_cut_oracle, OracleMode};
use factorcrit::symmetry::has_clique_block_of_size_k;
use factorcrit::{Graph, Measure};

/// Wall-clock budget for the order-15 sweep.
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
/// Random graphs in the dual-path comparison.
const RANDOM_GRAPHS: usize = 500;
/// Random vertex sets per graph in the singleton/edge sweep.
const SUBSETS_PER_GRAPH: usize = 500;
/// Default corpus order for the lemma suites.
const CORPUS_ORDER: usize = 15;
/// Every count-valued comparison below is exact.
const TOLERANCE: usize = 0;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lemma(id: &str, samples: usize) -> Result<usize, String> {
    let opts = LemmaOptions { max_order: CORPUS_ORDER, seed: DEFAULT_SEED, samples };
    let s = verify_lemma(id.parse().map_err(|e| format!("{e}"))?, opts).map_err(|e| format!("{id}: {e}"))?;
    ensure(s.violations.len() <= TOLERANCE, format!("{id}: {} violations, first {:?}", s.violations.len(), s.violations.first()))?;
    ensure(s.hypothesis_matched > 0, format!("{id}: no graph met the hypotheses"))?;
    Ok(s.hypothesis_matched)
}

fn spec_graph(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().unwrap().build().unwrap().graph
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let s = verify_theorem(15, None, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(s.violation_count == 0, format!("{} violations", s.violation_count))?;
    for order in [9, 15] {
        let cayley = s.graphs.iter().filter(|e| e.n == order && e.family.starts_with("cayley:")).count();
        ensure(cayley > 0, format!("no Cayley graphs of order {order} in the sweep"))?;
    }
    for order in (5..=15).step_by(2) {
        ensure(s.per_order.iter().any(|o| o.order == order), format!("order {order} missing"))?;
    }
    ensure(elapsed < SWEEP_BUDGET, format!("sweep took {elapsed:?}"))?;
    Ok(format!("{} graphs, 0 violations, {:.2}s", s.graphs_checked, elapsed.as_secs_f64()))
}

fn criterion_2() -> Verdict {
    let mut graphs = random_graphs(DEFAULT_SEED, RANDOM_GRAPHS, 1, 10);
    let families = build_all(&vt_specs(11).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let family_count = families.iter().filter(|fg| fg.graph.n() <= 11).count();
    graphs.extend(families.into_iter().filter(|fg| fg.graph.n() <= 11).map(|fg| fg.graph));
    let mut comparisons = 0;
    for g in &graphs {
        for p in 1..=3usize {
            if p > g.n() || p % 2 != g.n() % 2 {
                continue;
            }
            let a = is_p_factor_critical_direct(g, p).map_err(|e| e.to_string())?.holds;
            let b = is_p_factor_critical_criterion(g, p).map_err(|e| e.to_string())?.holds;
            ensure(a == b, format!("mismatch at p = {p} on {g:?}"))?;
            comparisons += 1;
        }
    }
    Ok(format!("{RANDOM_GRAPHS} random + {family_count} family graphs, {comparisons} comparisons, 0 mismatches"))
}

fn criterion_3() -> Verdict {
    let g = circulant(13, &[1, 5]).map_err(|e| e.to_string())?;
    let l2 = restricted_edge_connectivity(&g, 2).map_err(|e| e.to_string())?.value;
    let xi = min_edge_degree(&g).map_err(|e| e.to_string())?;
    ensure(l2 == Measure::Value(6) && xi == 6, format!("λ₂ = {l2}, ξ = {xi}"))?;
    let sup = is_super_lambda2(&g).map_err(|e| e.to_string())?;
    ensure(sup.holds, format!("superatom {:?}", sup.superatom))?;
    let corpus = build_all(&vt_specs(CORPUS_ORDER).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for fg in corpus.iter().filter(|fg| fg.graph.edge_count() <= ORACLE_MAX_EDGES) {
        let ours = restricted_edge_connectivity(&fg.graph, 2).map_err(|e| e.to_string())?.value;
        let oracle = exhaustive_cut_oracle(&fg.graph, OracleMode::Restricted(2)).map_err(|e| e.to_string())?;
        ensure(ours == oracle, format!("{}: fragment {ours}, oracle {oracle}", fg.spec))?;
        checked += 1;
    }
    ensure(checked > 0, "no corpus graph small enough for the oracle")?;
    Ok(format!("λ₂ = 6 = ξ, super-λ₂; oracle agrees on {checked} corpus graphs with |E| ≤ {ORACLE_MAX_EDGES}"))
}

fn criterion_4() -> Verdict {
    let mut parts = Vec::new();
    for id in ["2.4", "2.2", "2.3", "2.6", "2.5"] {
        parts.push(format!("{id}: {}", lemma(id, 0)?));
    }
    let prism = spec_graph("prism:3");
    let not_super = !is_super_lambda(&prism).map_err(|e| e.to_string())?;
    let clique_block = has_clique_block_of_size_k(&prism).map_err(|e| e.to_string())?;
    ensure(not_super && clique_block, "prism C3 × K2 is not the expected counterexample")?;
    Ok(format!("matched {}; prism counterexample confirmed", parts.join(", ")))
}

fn criterion_5() -> Verdict {
    let g = petersen();
    let k = 3;
    let l3 = restricted_edge_connectivity_value(&g, 3, false).map_err(|e| e.to_string())?;
    ensure(l3 == Measure::Value(3 * k - 4), format!("λ₃ = {l3}"))?;
    let admissible_divisors: Vec<usize> = (2 * k - 2..=3 * k - 5).filter(|d| 10 % d == 0).collect();
    ensure(admissible_divisors.is_empty(), format!("divisors {admissible_divisors:?}"))?;
    let oracle = exhaustive_cut_oracle(&g, OracleMode::Restricted(3)).map_err(|e| e.to_string())?;
    ensure(oracle == l3, format!("oracle {oracle}"))?;
    Ok("Petersen λ₃ = 5 = 3k−4, no divisor of 10 in [4, 4], oracle agrees".into())
}

fn criterion_6() -> Verdict {
    let p = petersen();
    let lc = cyclic_edge_connectivity_value(&p, false).map_err(|e| e.to_string())?;
    ensure(lc == Measure::Value(5) && zeta(&p) == Measure::Value(5), format!("Petersen λ_c = {lc}, ζ = {}", zeta(&p)))?;
    let k73 = kneser(7, 3).map_err(|e| e.to_string())?;
    let lc = cyclic_edge_connectivity_value(&k73, true).map_err(|e| e.to_string())?;
    ensure(lc == Measure::Value(12) && zeta(&k73) == Measure::Value(12), format!("K(7,3) λ_c = {lc}, ζ = {}", zeta(&k73)))?;
    Ok("Petersen λ_c = ζ = 5; K(7,3) λ_c = ζ = 12, computed exactly".into())
}

fn criterion_7() -> Verdict {
    let m31 = lemma("3.1", 0)?;
    let m33 = lemma("3.3", 0)?;
    let m32 = lemma("3.2", SUBSETS_PER_GRAPH)?;
    let g = circulant(13, &[1, 5]).map_err(|e| e.to_string())?;
    let stats = cycle_census(&g, 4).map_err(|e| e.to_string())?;
    let m = stats.uniform_vertex_count().ok_or("quadrangle counts differ between vertices")?;
    ensure(m % 4 == 0 && 4 * stats.total == 13 * m, format!("m = {m}, n₄ = {}", stats.total))?;
    ensure(stats.per_edge.iter().all(|&(_, c)| c >= 2), "an edge lies in fewer than 2 quadrangles")?;
    Ok(format!(
        "α bound on {m31}, twins on {m33}, {SUBSETS_PER_GRAPH} subsets on each of {m32} graphs; C13(1,5): m = {m}, n₄ = {}",
        stats.total
    ))
}

fn criterion_8() -> Verdict {
    let matched = lemma("1.1", 0)?;
    let p = petersen();
    ensure(is_bicritical(&p).map_err(|e| e.to_string())?, "Petersen is not bicritical")?;
    let c6 = spec_graph("cycle:6");
    ensure(c6.is_bipartite() && is_elementary(&c6), "C6 is not elementary bipartite")?;
    Ok(format!("{matched} corpus graphs; Petersen bicritical; C6 elementary bipartite"))
}

fn criterion_9() -> Verdict {
    let s = oracle_check(&[CorpusSource::Families, CorpusSource::Random], DEFAULT_SEED, 300).map_err(|e| e.to_string())?;
    ensure(s.mismatches.len() <= TOLERANCE, format!("{} mismatches, first {:?}", s.mismatches.len(), s.mismatches.first()))?;
    Ok(format!("{} comparisons over {} matching and {} cut graphs", s.comparisons, s.matching_graphs, s.cut_graphs))
}

fn criterion_10() -> Verdict {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_factorcrit"))
            .args(["verify-theorem", "--max-order", "15", "--threads", threads])
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let four = run("4")?;
    ensure(one.status.success() && four.status.success(), "verify-theorem exited nonzero")?;
    ensure(!one.stdout.is_empty() && one.stdout == four.stdout, "outputs differ between 1 and 4 threads")?;
    Ok(format!("{} identical bytes with 1 and 4 threads", one.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("odd VT sweep to order 15: 3-factor-critical iff not a cycle", criterion_1),
        ("direct and criterion verdicts agree", criterion_2),
        ("C13(1,5) restricted connectivity and fragment oracle", criterion_3),
        ("connectivity suite on the VT corpus", criterion_4),
        ("Petersen λ₃", criterion_5),
        ("cyclic edge connectivity", criterion_6),
        ("independence, twins, quadrangles, singleton sweep", criterion_7),
        ("factor-critical, bicritical, elementary", criterion_8),
        ("oracle gate", criterion_9),
        ("deterministic sweep output", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
