//! Graph collections the suites run over.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{
    circulant_classes, connection_sets, FamilyGraph, FamilySpec, GroupTable, SHIPPED_TABLES,
};
use crate::graph::Graph;

/// Largest order for which every connection set of a shipped table is used;
/// above it only the table's own connection set is.
pub const FULL_CAYLEY_MAX_ORDER: usize = 15;

/// Largest order accepted for circulant enumeration in sweeps.
pub const SWEEP_MAX_ORDER: usize = 31;

/// Named graphs added to every vertex-transitive corpus: the girth-5 and
/// girth-6 Kneser graphs and small prisms (C3 × K2 has triangle blocks).
pub const NAMED_EXTRAS: &[&str] = &["petersen", "prism:3", "prism:4", "prism:5", "prism:6", "kneser:7:3"];

fn check_sweep_order(max_order: usize) -> Result<()> {
    if max_order > SWEEP_MAX_ORDER {
        return Err(Error::ResourceCap { what: "sweep order", size: max_order, cap: SWEEP_MAX_ORDER });
    }
    Ok(())
}

/// Specs for every Cayley graph the sweeps use from one shipped table.
fn cayley_specs(name: &str, table: &GroupTable, default_s: &[usize], max_order: usize) -> Vec<FamilySpec> {
    let m = table.order();
    if m <= FULL_CAYLEY_MAX_ORDER {
        if m > max_order {
            return Vec::new();
        }
        connection_sets(table)
            .into_iter()
            .map(|s| FamilySpec::Cayley { table: name.to_string(), connection: Some(s) })
            .collect()
    } else {
        let mut s = default_s.to_vec();
        s.sort_unstable();
        vec![FamilySpec::Cayley { table: name.to_string(), connection: Some(s) }]
    }
}

/// Connected odd-order graphs for the main sweep: circulant classes of odd
/// order `5..=max_order`, then Cayley graphs of shipped tables up to `max_order`.
pub fn theorem_specs(max_order: usize) -> Result<Vec<FamilySpec>> {
    if max_order < 5 || max_order.is_multiple_of(2) {
        return Err(Error::Argument(format!("max order must be odd and at least 5, got {max_order}")));
    }
    check_sweep_order(max_order)?;
    let mut specs = Vec::new();
    for n in (5..=max_order).step_by(2) {
        specs.extend(circulant_classes(n)?.into_iter().map(|steps| FamilySpec::Circulant { n, steps }));
    }
    for (name, _) in SHIPPED_TABLES {
        let (table, s) = GroupTable::shipped(name)?;
        if table.order() <= max_order {
            specs.extend(cayley_specs(name, &table, &s, max_order));
        }
    }
    Ok(specs)
}

/// Specs of the connected vertex-transitive corpus: circulant classes of order
/// `3..=max_order`, Cayley graphs of shipped tables, and [`NAMED_EXTRAS`].
pub fn vt_specs(max_order: usize) -> Result<Vec<FamilySpec>> {
    check_sweep_order(max_order)?;
    let mut specs = Vec::new();
    for n in 3..=max_order {
        specs.extend(circulant_classes(n)?.into_iter().map(|steps| FamilySpec::Circulant { n, steps }));
    }
    for (name, _) in SHIPPED_TABLES {
        let (table, s) = GroupTable::shipped(name)?;
        specs.extend(cayley_specs(name, &table, &s, max_order));
    }
    for extra in NAMED_EXTRAS {
        specs.push(extra.parse()?);
    }
    Ok(specs)
}

/// Builds every spec; certificates are checked and a failing one is an error.
pub fn build_all(specs: &[FamilySpec]) -> Result<Vec<FamilyGraph>> {
    specs
        .iter()
        .map(|spec| {
            let fg = spec.build()?;
            if !fg.certified_transitive() {
                return Err(Error::Family(format!("{spec}: transitivity certificate does not verify")));
            }
            Ok(fg)
        })
        .collect()
}

/// `count` Erdős–Rényi graphs with order uniform in `min_order..=max_order` and
/// edge probability uniform in `[0.15, 0.85]`, reproducible from `seed`.
pub fn random_graphs(seed: u64, count: usize, min_order: usize, max_order: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_order..=max_order);
            let density = rng.gen_range(0.15..0.85);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(density) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).expect("generated edges are simple")
        })
        .collect()
}

/// Connected random graphs with at most `max_edges` edges: a random spanning
/// tree plus random extra edges.
pub fn random_sparse_connected(seed: u64, count: usize, max_order: usize, max_edges: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(4..=max_order);
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let budget = max_edges.min(n * (n - 1) / 2);
            let target = rng.gen_range(edges.len()..=budget);
            while edges.len() < target {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, &edges).expect("generated edges are simple")
        })
        .collect()
}
