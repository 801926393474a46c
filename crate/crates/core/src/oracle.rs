//! Exhaustive reference computations used to cross-check the production
//! algorithms. Deliberately naive: each one follows a definition literally.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use crate::connectivity::{exhaustive_cut_oracle, OracleMode};

/// Largest order for [`berge_tutte_matching_number`].
pub const DEFICIENCY_MAX_ORDER: usize = 20;

/// Largest order for [`brute_force_matching_number`].
pub const BRUTE_MATCHING_MAX_ORDER: usize = 12;

/// `ν(G) = min_X (n + |X| − c₀(G−X)) / 2`, minimised over every vertex subset.
pub fn berge_tutte_matching_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > DEFICIENCY_MAX_ORDER {
        return Err(Error::ResourceCap { what: "deficiency oracle order", size: n, cap: DEFICIENCY_MAX_ORDER });
    }
    let all = g.vertices();
    let nu = (0u128..1 << n)
        .map(VertexSet::from_bits)
        .map(|x| (n + x.len()).saturating_sub(g.odd_components(all - x)) / 2)
        .min()
        .expect("at least the empty set");
    Ok(nu)
}

/// Maximum matching size by trying every way to pair off the lowest vertex.
pub fn brute_force_matching_number(g: &Graph) -> Result<usize> {
    if g.n() > BRUTE_MATCHING_MAX_ORDER {
        return Err(Error::ResourceCap { what: "brute-force matching order", size: g.n(), cap: BRUTE_MATCHING_MAX_ORDER });
    }
    fn best(g: &Graph, free: VertexSet) -> usize {
        let Some(v) = free.first() else {
            return 0;
        };
        let rest = free.without(v);
        let mut top = best(g, rest);
        for w in g.neighbors(v) & rest {
            top = top.max(1 + best(g, rest.without(w)));
        }
        top
    }
    Ok(best(g, g.vertices()))
}

/// Counts automorphisms by plain backtracking over vertex images, with no
/// refinement. Practical only for small or sparse graphs.
pub fn count_automorphisms_naive(g: &Graph) -> u64 {
    fn extend(g: &Graph, image: &mut Vec<usize>, used: VertexSet) -> u64 {
        let v = image.len();
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for w in g.vertices() - used {
            if g.degree(w) != g.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if consistent {
                image.push(w);
                total += extend(g, image, used.with(w));
                image.pop();
            }
        }
        total
    }
    extend(g, &mut Vec::with_capacity(g.n()), VertexSet::empty())
}
