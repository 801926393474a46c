//! p-factor-criticality, decided either directly (delete every p-set and look
//! for a perfect matching) or through the odd-component deficiency criterion
//! `c₀(G−X) ≤ |X| − p` for all `|X| ≥ p`.

use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::has_perfect_matching_within;

/// Largest order accepted by the criterion search (it visits up to 2^n sets).
pub const CRITERION_MAX_ORDER: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Via {
    Direct,
    DeficiencyCriterion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityVerdict {
    pub p: usize,
    pub holds: bool,
    /// Lexicographically smallest violating set when `holds` is false.
    pub witness: Option<VertexSet>,
    pub via: Via,
}

fn check_parity(g: &Graph, p: usize) -> Result<()> {
    let n = g.n();
    if p > n {
        return Err(Error::PTooLarge { n, p });
    }
    if p % 2 != n % 2 {
        return Err(Error::Parity { n, p });
    }
    Ok(())
}

/// Next k-subset of `{0..n}` in lexicographic order, in place.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every `k`-subset of `{0..n}` in lexicographic order until it
/// returns `Some`.
pub(crate) fn find_combination<T>(n: usize, k: usize, mut f: impl FnMut(VertexSet) -> Option<T>) -> Option<T> {
    if k > n {
        return None;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if let Some(t) = f(c.iter().copied().collect()) {
            return Some(t);
        }
        if !next_combination(&mut c, n) {
            return None;
        }
    }
}

/// Deletes every p-set and checks the remainder for a perfect matching.
pub fn is_p_factor_critical_direct(g: &Graph, p: usize) -> Result<CriticalityVerdict> {
    check_parity(g, p)?;
    let all = g.vertices();
    let witness = find_combination(g.n(), p, |x| (!has_perfect_matching_within(g, all - x)).then_some(x));
    Ok(CriticalityVerdict { p, holds: witness.is_none(), witness, via: Via::Direct })
}

/// Searches for `X` with `|X| ≥ p` and `c₀(G−X) > |X| − p`.
///
/// Since `c₀(G−X) ≤ n − |X|`, only `|X| ≤ (n+p)/2` can violate. Enumeration is
/// split across threads by the low bits of the subset mask; the reduction keeps
/// the lexicographically smallest violation.
pub fn is_p_factor_critical_criterion(g: &Graph, p: usize) -> Result<CriticalityVerdict> {
    check_parity(g, p)?;
    let n = g.n();
    if n > CRITERION_MAX_ORDER {
        return Err(Error::ResourceCap { what: "criterion search order", size: n, cap: CRITERION_MAX_ORDER });
    }
    let max_size = (n + p) / 2;
    let all = g.vertices();
    let violates = |x: VertexSet| {
        let s = x.len();
        s >= p && s <= max_size && g.odd_components(all - x) + p > s
    };

    let split = n.min(8);
    let high_count = 1u128 << (n - split);
    let witness = (0u128..1 << split)
        .into_par_iter()
        .filter_map(|low| {
            (0..high_count)
                .map(|high| VertexSet::from_bits(low | (high << split)))
                .filter(|&x| violates(x))
                .min()
        })
        .min();
    Ok(CriticalityVerdict { p, holds: witness.is_none(), witness, via: Via::DeficiencyCriterion })
}

pub fn is_factor_critical(g: &Graph) -> Result<bool> {
    if g.n().is_multiple_of(2) {
        return Err(Error::Parity { n: g.n(), p: 1 });
    }
    Ok(is_p_factor_critical_direct(g, 1)?.holds)
}

pub fn is_bicritical(g: &Graph) -> Result<bool> {
    if g.n() % 2 == 1 {
        return Err(Error::Parity { n: g.n(), p: 2 });
    }
    Ok(is_p_factor_critical_direct(g, 2)?.holds)
}

/// `κ(G) ≥ p` and `λ(G) ≥ p+1`, the connectivity forced by p-factor-criticality.
pub fn check_necessary_conditions(g: &Graph, p: usize) -> Result<bool> {
    let kappa = vertex_connectivity(g)?;
    let lambda = edge_connectivity(g)?;
    Ok(kappa >= p && lambda > p)
}
