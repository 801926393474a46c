//! Randomised invariants, each checked against a definition or an exhaustive
//! reference rather than against another fast path.

use factorcrit::connectivity::{
    cyclic_edge_connectivity, cyclic_edge_connectivity_value, edge_connectivity, min_edge_degree,
    restricted_edge_connectivity, restricted_edge_connectivity_value, vertex_connectivity, ORACLE_MAX_EDGES,
};
use factorcrit::counting::{cycle_census, independence_number};
use factorcrit::criticality::{is_p_factor_critical_criterion, is_p_factor_critical_direct};
use factorcrit::families::FamilySpec;
use factorcrit::harness::corpus::{build_all, vt_specs};
use factorcrit::matching::{has_perfect_matching_within, maximum_matching};
use factorcrit::oracle::{
    berge_tutte_matching_number, brute_force_matching_number, count_automorphisms_naive, exhaustive_cut_oracle,
    OracleMode,
};
use factorcrit::symmetry::automorphism_generators;
use factorcrit::{Graph, Measure, VertexSet};
use proptest::prelude::*;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

/// Connected graphs with at most `max_edges` edges: a random tree plus chords.
fn arb_sparse_connected(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(move |n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let chords = proptest::collection::vec((0..n, 0..n), 0..=max_edges + 1 - n);
        (parents, chords).prop_map(move |(parents, chords)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            for (u, v) in chords {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(1, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), any::<u64>().prop_map(move |bits| VertexSet::from_bits(bits as u128) & VertexSet::full(n)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cut_is_symmetric((g, x) in arb_graph_and_set(30)) {
        prop_assert_eq!(g.cut_size(x), g.cut_size(x.complement(g.n())));
        let by_edges = g.edges().iter().filter(|&&(u, v)| x.contains(u) != x.contains(v)).count();
        prop_assert_eq!(g.cut_size(x), by_edges);
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(1, 40)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn cut_function_is_submodular((g, x) in arb_graph_and_set(20), bits in any::<u32>()) {
        let y = VertexSet::from_bits(bits as u128) & g.vertices();
        prop_assert!(g.cut_size(x | y) + g.cut_size(x & y) <= g.cut_size(x) + g.cut_size(y));
    }

    #[test]
    fn kappa_lambda_delta_chain(g in arb_graph(2, 16)) {
        let kappa = vertex_connectivity(&g).unwrap();
        let lambda = edge_connectivity(&g).unwrap();
        prop_assert!(kappa <= lambda && lambda <= g.min_degree(), "κ={} λ={} δ={}", kappa, lambda, g.min_degree());
    }

    #[test]
    fn matching_agrees_with_references(g in arb_graph(1, 10)) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.len(), berge_tutte_matching_number(&g).unwrap());
        prop_assert_eq!(m.len(), brute_force_matching_number(&g).unwrap());
    }

    #[test]
    fn criticality_paths_agree(g in arb_graph(1, 11), p in 0usize..=4) {
        prop_assume!(p <= g.n());
        if p % 2 != g.n() % 2 {
            prop_assert!(is_p_factor_critical_direct(&g, p).is_err());
            prop_assert!(is_p_factor_critical_criterion(&g, p).is_err());
            return Ok(());
        }
        let a = is_p_factor_critical_direct(&g, p).unwrap();
        let b = is_p_factor_critical_criterion(&g, p).unwrap();
        prop_assert_eq!(a.holds, b.holds);
        if let Some(w) = a.witness {
            prop_assert_eq!(w.len(), p);
            prop_assert!(!has_perfect_matching_within(&g, g.vertices() - w));
        }
    }

    #[test]
    fn fragments_match_oracle(g in arb_sparse_connected(10, ORACLE_MAX_EDGES)) {
        prop_assume!(g.edge_count() <= ORACLE_MAX_EDGES);
        let lambda = edge_connectivity(&g).unwrap();
        prop_assert_eq!(Measure::Value(lambda), exhaustive_cut_oracle(&g, OracleMode::Restricted(1)).unwrap());
        for s in [2, 3] {
            let oracle = exhaustive_cut_oracle(&g, OracleMode::Restricted(s)).unwrap();
            let full = restricted_edge_connectivity(&g, s).unwrap();
            prop_assert_eq!(full.value, oracle, "s = {}", s);
            prop_assert_eq!(restricted_edge_connectivity_value(&g, s, false).unwrap(), oracle);
            for x in &full.fragments {
                prop_assert_eq!(Measure::Value(g.cut_size(*x)), oracle);
            }
        }
        let oracle = exhaustive_cut_oracle(&g, OracleMode::Cyclic).unwrap();
        prop_assert_eq!(cyclic_edge_connectivity(&g).unwrap().value, oracle);
        prop_assert_eq!(cyclic_edge_connectivity_value(&g, false).unwrap(), oracle);
    }

    #[test]
    fn restricted_value_bounded_by_edge_degree(g in arb_sparse_connected(12, 24)) {
        if let (Ok(xi), Measure::Value(l2)) = (min_edge_degree(&g), restricted_edge_connectivity(&g, 2).unwrap().value) {
            prop_assert!(l2 <= xi);
        }
    }

    #[test]
    fn cycle_census_handshake(g in arb_graph(3, 10), len in 3usize..=6) {
        let stats = cycle_census(&g, len).unwrap();
        prop_assert_eq!(stats.per_vertex.iter().sum::<u64>(), len as u64 * stats.total);
        prop_assert_eq!(stats.per_edge.iter().map(|&(_, c)| c).sum::<u64>(), len as u64 * stats.total);
    }

    #[test]
    fn automorphisms_match_naive_count(g in arb_graph(1, 7)) {
        let group = automorphism_generators(&g).unwrap();
        prop_assert_eq!(group.order(), Some(count_automorphisms_naive(&g) as u128));
        for perm in group.generators() {
            prop_assert!(perm.is_automorphism_of(&g));
        }
        for orbit in group.orbits() {
            let d = g.degree(orbit.first().unwrap());
            prop_assert!(orbit.iter().all(|v| g.degree(v) == d));
        }
    }

    #[test]
    fn independence_matches_brute_force(g in arb_graph(1, 14)) {
        let (alpha, set) = independence_number(&g).unwrap();
        prop_assert_eq!(set.len(), alpha);
        prop_assert_eq!(g.edges_within(set), 0);
        let n = g.n();
        let brute = (0u32..1 << n)
            .map(|b| VertexSet::from_bits(b as u128))
            .filter(|&x| g.edges_within(x) == 0)
            .map(|x| x.len())
            .max()
            .unwrap();
        prop_assert_eq!(alpha, brute);
    }

    #[test]
    fn induced_subgraph_connectivity_is_consistent((g, x) in arb_graph_and_set(20)) {
        prop_assume!(!x.is_empty());
        let sub = g.induced(x).unwrap();
        prop_assert_eq!(sub.n(), x.len());
        prop_assert_eq!(sub.edge_count(), g.edges_within(x));
        prop_assert_eq!(sub.is_connected(), g.is_connected_within(x));
    }
}

#[test]
fn transitive_shortcut_matches_full_search() {
    let corpus = build_all(&vt_specs(13).unwrap()).unwrap();
    let mut checked = 0;
    for fg in corpus.iter().filter(|fg| fg.graph.n() <= 14) {
        let g = &fg.graph;
        for s in [2, 3] {
            let full = restricted_edge_connectivity(g, s).map(|m| m.value);
            let fast = restricted_edge_connectivity_value(g, s, true);
            assert_eq!(full.ok(), fast.ok(), "{} s = {s}", fg.spec);
        }
        let full = cyclic_edge_connectivity(g).map(|m| m.value);
        assert_eq!(full.ok(), cyclic_edge_connectivity_value(g, true).ok(), "{}", fg.spec);
        checked += 1;
    }
    assert!(checked > 20);
}

#[test]
fn family_specs_build_certified_graphs() {
    for spec in ["cycle:9", "circulant:11:1,3", "petersen", "kneser:6:2", "prism:5", "cayley:z3xz3"] {
        let fg = spec.parse::<FamilySpec>().unwrap().build().unwrap();
        assert!(fg.certified_transitive(), "{spec}");
    }
}
