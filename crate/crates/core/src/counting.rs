//! Short-cycle statistics, girth and odd girth, independence number and twin
//! detection.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// Longest cycle length the census will enumerate.
pub const MAX_CENSUS_LENGTH: usize = 12;

/// Largest order accepted by the independence-number search.
pub const MAX_INDEPENDENCE_ORDER: usize = 40;

/// Counts of simple cycles of one fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStats {
    pub length: usize,
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
    /// Number of distinct cycles of `length`.
    pub total: u64,
    /// Cycles through each vertex.
    pub per_vertex: Vec<u64>,
    /// Cycles through each edge, in `Graph::edges` order.
    pub per_edge: Vec<(Edge, u64)>,
}

impl CycleStats {
    pub fn edge_count(&self, u: usize, v: usize) -> u64 {
        let key = (u.min(v), u.max(v));
        self.per_edge
            .binary_search_by(|(e, _)| e.cmp(&key))
            .map(|i| self.per_edge[i].1)
            .unwrap_or(0)
    }

    /// The common per-vertex count, if all vertices lie on equally many cycles.
    pub fn uniform_vertex_count(&self) -> Option<u64> {
        let first = *self.per_vertex.first()?;
        self.per_vertex.iter().all(|&m| m == first).then_some(first)
    }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle_by_bfs(g, false)
}

/// Length of a shortest odd cycle, `None` iff the graph is bipartite.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    if g.is_bipartite() {
        return None;
    }
    shortest_cycle_by_bfs(g, true)
}

fn shortest_cycle_by_bfs(g: &Graph, odd_only: bool) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    // Non-tree edge: closes a walk of length dist[u]+dist[w]+1
                    // through the root; minimised over all roots it is exact.
                    let len = dist[u] + dist[w] + 1;
                    if (!odd_only || len % 2 == 1) && best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Visits every simple cycle of length `len` exactly once, as a vertex
/// sequence starting at its smallest vertex with `seq[1] < seq[len-1]`.
pub fn for_each_cycle(g: &Graph, len: usize, mut visit: impl FnMut(&[usize])) {
    if len < 3 {
        return;
    }
    let mut path = Vec::with_capacity(len);
    for root in 0..g.n() {
        let allowed = g.vertices() - VertexSet::full(root + 1);
        path.clear();
        path.push(root);
        extend_path(g, root, allowed, VertexSet::singleton(root), len, &mut path, &mut visit);
    }
}

fn extend_path(
    g: &Graph,
    root: usize,
    allowed: VertexSet,
    used: VertexSet,
    len: usize,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().expect("path starts at root");
    if path.len() == len {
        if g.has_edge(last, root) && path[1] < path[len - 1] {
            visit(path);
        }
        return;
    }
    for w in g.neighbors(last) & (allowed - used) {
        path.push(w);
        extend_path(g, root, allowed, used.with(w), len, path, visit);
        path.pop();
    }
}

/// Vertex sets of all cycles of length `len`, deduplicated and sorted.
pub fn cycle_vertex_sets(g: &Graph, len: usize) -> Vec<VertexSet> {
    let mut sets = Vec::new();
    for_each_cycle(g, len, |c| sets.push(c.iter().copied().collect::<VertexSet>()));
    sets.sort();
    sets.dedup();
    sets
}

/// Exact counts of cycles of length `len` in total, per vertex and per edge.
pub fn cycle_census(g: &Graph, len: usize) -> Result<CycleStats> {
    if !(3..=MAX_CENSUS_LENGTH).contains(&len) {
        return Err(Error::Argument(format!("cycle length {len} outside 3..={MAX_CENSUS_LENGTH}")));
    }
    let n = g.n();
    let edges = g.edges();
    let mut per_vertex = vec![0u64; n];
    let mut per_edge_matrix = vec![0u64; n * n];
    let mut total = 0u64;
    for_each_cycle(g, len, |c| {
        total += 1;
        for (i, &v) in c.iter().enumerate() {
            per_vertex[v] += 1;
            let w = c[(i + 1) % c.len()];
            per_edge_matrix[v.min(w) * n + v.max(w)] += 1;
        }
    });
    let per_edge = edges.into_iter().map(|(u, v)| ((u, v), per_edge_matrix[u * n + v])).collect();
    Ok(CycleStats { length: len, girth: girth(g), odd_girth: odd_girth(g), total, per_vertex, per_edge })
}

/// α(G) and a maximum independent set, by branch and bound with a greedy
/// clique-cover bound (each clique contributes at most one vertex).
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.n() > MAX_INDEPENDENCE_ORDER {
        return Err(Error::ResourceCap { what: "independence search order", size: g.n(), cap: MAX_INDEPENDENCE_ORDER });
    }
    let mut best = (0, VertexSet::empty());
    expand_independent(g, VertexSet::empty(), g.vertices(), &mut best);
    Ok(best)
}

fn expand_independent(g: &Graph, current: VertexSet, mut candidates: VertexSet, best: &mut (usize, VertexSet)) {
    let order = clique_cover_order(g, candidates);
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.0 {
            return;
        }
        let next = current.with(v);
        let rest = candidates - g.neighbors(v) - VertexSet::singleton(v);
        if rest.is_empty() {
            if next.len() > best.0 {
                *best = (next.len(), next);
            }
        } else {
            expand_independent(g, next, rest, best);
        }
        candidates.remove(v);
    }
}

/// Greedily partitions `p` into cliques; returns vertices with the number of
/// cliques used up to and including theirs, in nondecreasing order.
fn clique_cover_order(g: &Graph, p: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut uncovered = p;
    let mut class = 0;
    while !uncovered.is_empty() {
        class += 1;
        let mut open = uncovered;
        while let Some(v) = open.first() {
            out.push((v, class));
            uncovered.remove(v);
            open &= g.neighbors(v);
        }
    }
    out
}

/// Unordered pairs `u < v` with `N(u) = N(v)`.
pub fn find_twins(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.neighbors(u) == g.neighbors(v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Both sides of the singleton-versus-edge inequality for one vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingletonEdgeAudit {
    /// Isolated vertices of `G − X`.
    pub singletons: usize,
    /// Edges of `G[X]`.
    pub edges: usize,
    pub passes: bool,
    /// Whether `G` has a triangle (the inequality is only claimed then).
    pub has_triangle: bool,
}

pub fn has_triangle(g: &Graph) -> bool {
    (0..g.n()).any(|u| g.neighbors(u).iter().any(|v| v > u && !(g.neighbors(u) & g.neighbors(v)).is_empty()))
}

pub fn singleton_edge_audit(g: &Graph, x: VertexSet) -> SingletonEdgeAudit {
    let x = x & g.vertices();
    let rest = g.vertices() - x;
    let singletons = rest.iter().filter(|&v| (g.neighbors(v) & rest).is_empty()).count();
    let edges = g.edges_within(x);
    SingletonEdgeAudit { singletons, edges, passes: singletons <= edges, has_triangle: has_triangle(g) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v - u == 1 || (u == 0 && v == n - 1)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).unwrap()
    }

    #[test]
    fn census_examples() {
        let s = cycle(5);
        let c = cycle_census(&s, 5).unwrap();
        assert_eq!(c.total, 1);
        assert_eq!(c.per_vertex, vec![1; 5]);
        let c = cycle_census(&complete(5), 3).unwrap();
        assert_eq!(c.total, 10);
        assert_eq!(c.uniform_vertex_count(), Some(6));
        assert!(c.per_edge.iter().all(|&(_, t)| t == 3));
        assert!(cycle_census(&s, 2).is_err());
        assert!(cycle_census(&s, 13).is_err());
    }

    #[test]
    fn census_k4_quadrangles() {
        // K4 has 3 Hamiltonian 4-cycles.
        let c = cycle_census(&complete(4), 4).unwrap();
        assert_eq!(c.total, 3);
        assert_eq!(c.edge_count(0, 1), 2);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(7)), Some(7));
        assert_eq!(girth(&complete(5)), Some(3));
        assert_eq!(girth(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()), None);
        assert_eq!(odd_girth(&cycle(6)), None);
        assert_eq!(odd_girth(&complete(5)), Some(3));
        assert_eq!(odd_girth(&cycle(9)), Some(9));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&cycle(5)).unwrap().0, 2);
        let (a, set) = independence_number(&cycle(8)).unwrap();
        assert_eq!(a, 4);
        assert_eq!(cycle(8).edges_within(set), 0);
        assert_eq!(independence_number(&complete(6)).unwrap().0, 1);
    }

    #[test]
    fn twin_examples() {
        assert_eq!(find_twins(&cycle(4)), vec![(0, 2), (1, 3)]);
        assert!(find_twins(&complete(5)).is_empty());
    }

    #[test]
    fn singleton_audit_examples() {
        let k5 = complete(5);
        let a = singleton_edge_audit(&k5, [0, 1, 2, 3].into_iter().collect());
        assert_eq!((a.singletons, a.edges, a.passes), (1, 6, true));
        let a = singleton_edge_audit(&cycle(6), [1, 3, 5].into_iter().collect());
        assert_eq!((a.singletons, a.edges, a.passes, a.has_triangle), (3, 0, false, false));
    }
}
