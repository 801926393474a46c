//! Vertex and edge connectivity, restricted and cyclic edge connectivity,
//! super-λ / super-λ₂ classification and λ₂-superatoms.
//!
//! Restricted and cyclic values are computed in fragment form: the minimum of
//! `d(X)` over vertex sets `X` with `G[X]` and `G[X̄]` both connected and
//! meeting the side condition. A minimum cut of either kind always splits the
//! graph into exactly two components, so this equals the edge-subset
//! definition; [`exhaustive_cut_oracle`] checks that on small graphs.

mod flow;
mod fragments;
mod oracle;

use serde::Serialize;

use crate::counting::{cycle_vertex_sets, girth};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Measure;

pub(crate) use fragments::{FragmentSearch, Goal, SideRule};
pub use oracle::{exhaustive_cut_oracle, OracleMode, ORACLE_MAX_EDGES};

/// Largest order accepted by the fragment searches.
pub const FRAGMENT_MAX_ORDER: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    EdgeCut,
    Restricted,
    ThreeRestricted,
    Cyclic,
}

/// A cut `∇(X)` described by one side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub x: VertexSet,
    pub d: usize,
    /// Component counts of `G[X]` and `G[X̄]`.
    pub side_components: (usize, usize),
    pub kind: CutKind,
}

impl CutReport {
    /// Describes `∇(x)`, failing if it is not a cut of the stated kind.
    pub fn new(g: &Graph, x: VertexSet, kind: CutKind) -> Result<CutReport> {
        let d = g.boundary(x)?.size;
        let rest = x.complement(g.n());
        let (a, b) = (g.components(x), g.components(rest));
        let comps = || a.components.iter().chain(b.components.iter());
        let ok = match kind {
            CutKind::EdgeCut => true,
            CutKind::Restricted => comps().all(|c| c.len() >= 2),
            CutKind::ThreeRestricted => comps().all(|c| c.len() >= 3),
            CutKind::Cyclic => comps().filter(|&&c| g.has_cycle_within(c)).count() >= 2,
        };
        if !ok {
            return Err(Error::Argument(format!("∇{x} is not a {kind:?} cut")));
        }
        Ok(CutReport { x, d, side_components: (a.len(), b.len()), kind })
    }
}

/// Value and minimizing sides of a restricted or cyclic edge connectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutMinimum {
    pub value: Measure,
    /// Minimizing sides up to complement, each given as the side containing
    /// vertex 0, in lexicographic order.
    pub fragments: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperLambda2 {
    pub holds: bool,
    /// A smallest nontrivial λ₂-fragment, when one exists.
    pub superatom: Option<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityProfile {
    pub kappa: usize,
    pub lambda: usize,
    pub xi: Measure,
    pub lambda2: Measure,
    pub lambda3: Measure,
    pub lambda_c: Measure,
    pub zeta: Measure,
    pub super_lambda: bool,
    pub super_lambda2: Option<bool>,
    pub superatom: Option<VertexSet>,
}

fn require_order(g: &Graph, min: usize) -> Result<()> {
    if g.n() < min {
        return Err(Error::TooSmall { n: g.n(), min });
    }
    Ok(())
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn require_fragment_cap(g: &Graph) -> Result<()> {
    if g.n() > FRAGMENT_MAX_ORDER {
        return Err(Error::ResourceCap { what: "fragment search order", size: g.n(), cap: FRAGMENT_MAX_ORDER });
    }
    Ok(())
}

/// κ(G): `n − 1` for complete graphs, otherwise the minimum number of vertices
/// separating some non-adjacent pair.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    require_order(g, 2)?;
    let n = g.n();
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    // Some vertex among the first κ+1 avoids a minimum separator.
    let mut i = 0;
    while i <= best && i < n {
        let far = g.vertices() - g.neighbors(i) - VertexSet::singleton(i);
        for j in far {
            best = best.min(flow::local_vertex_connectivity(g, i, j, best));
        }
        i += 1;
    }
    Ok(best)
}

/// λ(G) via max flow from vertex 0 to every other vertex.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    require_order(g, 2)?;
    let mut best = g.min_degree();
    for t in 1..g.n() {
        if best == 0 {
            break;
        }
        best = best.min(flow::local_edge_connectivity(g, 0, t, best));
    }
    Ok(best)
}

/// Whether every minimum edge cut is the star of a single vertex.
pub fn is_super_lambda(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    require_order(g, 2)?;
    require_fragment_cap(g)?;
    let lambda = edge_connectivity(g)?;
    let rule = SideRule { min_side: 2, cyclic: false };
    let hit = FragmentSearch::new(g, rule, Goal::Value).limit(lambda).run();
    Ok(hit.value.is_none())
}

/// ξ(G): minimum of `deg(u) + deg(v) − 2` over edges.
pub fn min_edge_degree(g: &Graph) -> Result<usize> {
    g.edges()
        .into_iter()
        .map(|(u, v)| g.degree(u) + g.degree(v) - 2)
        .min()
        .ok_or(Error::NoEdges)
}

/// Admissible sides among small connected sets, used to seed the search bound.
fn small_side_bound(g: &Graph, rule: SideRule) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut consider = |x: VertexSet| {
        if FragmentSearch::admissible(g, rule, x) {
            let d = g.cut_size(x);
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    };
    if rule.cyclic {
        if let Some(len) = girth(g) {
            for c in cycle_vertex_sets(g, len) {
                consider(c);
            }
        }
    } else if rule.min_side == 2 {
        for (u, v) in g.edges() {
            consider(VertexSet::singleton(u).with(v));
        }
    } else if rule.min_side == 3 {
        for v in 0..g.n() {
            let nb = g.neighbors(v).to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    consider(VertexSet::singleton(v).with(a).with(b));
                }
            }
        }
    }
    best
}

fn cut_minimum(g: &Graph, rule: SideRule, goal: Goal, transitive: bool) -> Result<CutMinimum> {
    require_connected(g)?;
    require_fragment_cap(g)?;
    let mut search = FragmentSearch::new(g, rule, goal).transitive(transitive && goal == Goal::Value);
    if let Some(b) = small_side_bound(g, rule) {
        search = search.limit(b);
    }
    let out = search.run();
    Ok(CutMinimum { value: out.value.into(), fragments: out.fragments })
}

/// λ_s(G) with all minimizing sides.
pub fn restricted_edge_connectivity(g: &Graph, s: usize) -> Result<CutMinimum> {
    if s == 0 {
        return Err(Error::Argument("s must be positive".into()));
    }
    cut_minimum(g, SideRule { min_side: s, cyclic: false }, Goal::AllMinimizers, false)
}

/// λ_s(G) only. With `transitive` set, the caller vouches that `g` is
/// vertex-transitive and the search seeds a single vertex.
pub fn restricted_edge_connectivity_value(g: &Graph, s: usize, transitive: bool) -> Result<Measure> {
    if s == 0 {
        return Err(Error::Argument("s must be positive".into()));
    }
    Ok(cut_minimum(g, SideRule { min_side: s, cyclic: false }, Goal::Value, transitive)?.value)
}

/// Whether every minimum restricted edge cut isolates an edge; otherwise a
/// λ₂-superatom is returned.
pub fn is_super_lambda2(g: &Graph) -> Result<SuperLambda2> {
    let min = restricted_edge_connectivity(g, 2)?;
    if min.value.is_undefined() {
        return Err(Error::Undefined("λ₂"));
    }
    Ok(super_lambda2_from_fragments(g.n(), &min.fragments))
}

/// Super-λ₂ verdict from all minimizing sides of a restricted edge cut.
pub fn super_lambda2_from_fragments(n: usize, fragments: &[VertexSet]) -> SuperLambda2 {
    let superatom = fragments
        .iter()
        .filter(|x| x.len() != 2 && n - x.len() != 2)
        .map(|&x| if 2 * x.len() <= n { x } else { x.complement(n) })
        .min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    SuperLambda2 { holds: superatom.is_none(), superatom }
}

/// λ_c(G) with all minimizing sides.
pub fn cyclic_edge_connectivity(g: &Graph) -> Result<CutMinimum> {
    cut_minimum(g, SideRule { min_side: 3, cyclic: true }, Goal::AllMinimizers, false)
}

/// λ_c(G) only; see [`restricted_edge_connectivity_value`] for `transitive`.
pub fn cyclic_edge_connectivity_value(g: &Graph, transitive: bool) -> Result<Measure> {
    Ok(cut_minimum(g, SideRule { min_side: 3, cyclic: true }, Goal::Value, transitive)?.value)
}

/// ζ(G): minimum `d(X)` over vertex sets of shortest cycles. Cuts need a
/// proper side, so a Hamiltonian shortest cycle does not count; a graph whose
/// shortest cycles all span it has undefined ζ.
pub fn zeta(g: &Graph) -> Measure {
    let Some(len) = girth(g) else {
        return Measure::Undefined;
    };
    let all = g.vertices();
    cycle_vertex_sets(g, len).into_iter().filter(|&c| c != all).map(|c| g.cut_size(c)).min().into()
}

/// All connectivity invariants of a connected graph.
pub fn connectivity_profile(g: &Graph, transitive: bool) -> Result<ConnectivityProfile> {
    require_connected(g)?;
    require_order(g, 2)?;
    let kappa = vertex_connectivity(g)?;
    let lambda = edge_connectivity(g)?;
    let xi = min_edge_degree(g).ok().into();
    let r2 = restricted_edge_connectivity(g, 2)?;
    let (super_lambda2, superatom) = if r2.value.is_undefined() {
        (None, None)
    } else {
        let s = super_lambda2_from_fragments(g.n(), &r2.fragments);
        (Some(s.holds), s.superatom)
    };
    Ok(ConnectivityProfile {
        kappa,
        lambda,
        xi,
        lambda2: r2.value,
        lambda3: restricted_edge_connectivity_value(g, 3, transitive)?,
        lambda_c: cyclic_edge_connectivity_value(g, transitive)?,
        zeta: zeta(g),
        super_lambda: is_super_lambda(g)?,
        super_lambda2,
        superatom,
    })
}
