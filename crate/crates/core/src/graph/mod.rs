//! Simple undirected graphs on at most 128 vertices, stored as adjacency bitsets,
//! and the set calculus used throughout the crate: boundaries, neighborhoods,
//! components and induced subgraphs.

mod graph6;
mod vertex_set;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

pub use graph6::{emit_graph6, parse_graph6, parse_graph6_with_width};
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

/// Default bitset width used when `FACTORCRIT_MAX_WIDTH` is not set.
pub const DEFAULT_WIDTH: usize = 64;

/// Environment variable selecting the vertex width (64 or 128).
pub const WIDTH_ENV: &str = "FACTORCRIT_MAX_WIDTH";

/// The vertex width accepted by parsers and generators.
///
/// Read once from `FACTORCRIT_MAX_WIDTH`; anything other than `128` means 64.
pub fn configured_width() -> usize {
    static WIDTH: OnceLock<usize> = OnceLock::new();
    *WIDTH.get_or_init(|| match std::env::var(WIDTH_ENV).ok().as_deref().map(str::trim) {
        Some("128") => 128,
        _ => DEFAULT_WIDTH,
    })
}

pub type Edge = (usize, usize);

/// An immutable simple undirected graph.
///
/// Invariants: adjacency is symmetric, loop-free, and no bit at or above `n` is set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", emit_graph6(self))
    }
}

/// Connected components of an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub components: Vec<VertexSet>,
    pub odd_count: usize,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// The edges leaving a vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Boundary {
    pub edges: Vec<Edge>,
    pub size: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        Self::check_order(n)?;
        let mut adj = vec![VertexSet::empty(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u},{v})")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph where `u ~ v` iff `adjacent(u, v)`, evaluated for `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        Self::check_order(n)?;
        let mut adj = vec![VertexSet::empty(); n];
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        Self::check_order(n)?;
        let full = VertexSet::full(n);
        for (u, &row) in adj.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::InvalidGraph(format!("row {u} has bits beyond n={n}")));
            }
            if row.contains(u) {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return Err(Error::InvalidGraph(format!("asymmetric adjacency {u}->{v}")));
            }
        }
        Ok(Graph { n, adj })
    }

    fn check_order(n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::ResourceCap { what: "vertex count", size: n, cap: MAX_VERTICES });
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.len()).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of edges with both ends in `x`.
    pub fn edges_within(&self, x: VertexSet) -> usize {
        x.iter().map(|v| (self.adj[v] & x).len()).sum::<usize>() / 2
    }

    /// Number of edges between the disjoint sets `a` and `b`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> usize {
        a.iter().map(|v| (self.adj[v] & b).len()).sum()
    }

    /// `d(X)`: the number of edges with exactly one end in `x`. No preconditions.
    #[inline]
    pub fn cut_size(&self, x: VertexSet) -> usize {
        let outside = x.complement(self.n);
        self.edges_between(x, outside)
    }

    /// `∇(X)` together with its size. `x` must be a nonempty proper subset.
    pub fn boundary(&self, x: VertexSet) -> Result<Boundary> {
        let x = x & self.vertices();
        if x.is_empty() || x == self.vertices() {
            return Err(Error::TrivialSet);
        }
        let outside = x.complement(self.n);
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                if x.contains(u) != x.contains(v) {
                    debug_assert!(outside.contains(u) || outside.contains(v));
                    edges.push((u, v));
                }
            }
        }
        let size = edges.len();
        Ok(Boundary { edges, size })
    }

    /// `N(X)`: vertices outside `x` with a neighbor in `x`.
    pub fn neighborhood(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for v in x.iter().filter(|&v| v < self.n) {
            out |= self.adj[v];
        }
        out - x
    }

    /// The vertices of `carrier` reachable from `start` inside `G[carrier]`.
    pub fn reach_within(&self, start: usize, carrier: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier {
                next |= self.adj[v];
            }
            next &= carrier - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `G[carrier]` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, carrier: VertexSet) -> bool {
        match carrier.first() {
            None => true,
            Some(s) => self.reach_within(s, carrier) == carrier,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Connected components of `G[carrier]`, ordered by smallest vertex.
    pub fn components(&self, carrier: VertexSet) -> ComponentPartition {
        let mut rest = carrier & self.vertices();
        let mut components = Vec::new();
        while let Some(s) = rest.first() {
            let comp = self.reach_within(s, rest);
            rest -= comp;
            components.push(comp);
        }
        let odd_count = components.iter().filter(|c| c.len() % 2 == 1).count();
        ComponentPartition { components, odd_count }
    }

    /// Number of odd components of `G[carrier]`.
    pub fn odd_components(&self, carrier: VertexSet) -> usize {
        let mut rest = carrier & self.vertices();
        let mut odd = 0;
        while let Some(s) = rest.first() {
            let comp = self.reach_within(s, rest);
            rest -= comp;
            odd += comp.len() % 2;
        }
        odd
    }

    /// `G[X]`, relabelled by ascending original index.
    pub fn induced(&self, x: VertexSet) -> Result<Graph> {
        let x = x & self.vertices();
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        let labels = x.to_vec();
        Graph::from_fn(labels.len(), |i, j| self.has_edge(labels[i], labels[j]))
    }

    /// Two-colours the graph; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = VertexSet::empty();
        let mut seen = VertexSet::empty();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            side.insert(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let u_side = side.contains(u);
                for w in self.adj[u] {
                    if seen.contains(w) {
                        if side.contains(w) == u_side {
                            return None;
                        }
                    } else {
                        seen.insert(w);
                        if !u_side {
                            side.insert(w);
                        }
                        stack.push(w);
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regular_degree() == Some(2) && self.is_connected()
    }

    /// Whether `G[carrier]` contains a cycle.
    pub fn has_cycle_within(&self, carrier: VertexSet) -> bool {
        let comps = self.components(carrier);
        self.edges_within(carrier) + comps.len() > carrier.len()
    }

    /// Disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        Graph::from_fn(n, |u, v| {
            if v < self.n {
                self.has_edge(u, v)
            } else if u >= self.n {
                other.has_edge(u - self.n, v - self.n)
            } else {
                false
            }
        })
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Argument("relabelling has wrong length".into()));
        }
        let mut inv = vec![usize::MAX; self.n];
        for (v, &p) in perm.iter().enumerate() {
            if p >= self.n || inv[p] != usize::MAX {
                return Err(Error::Argument("relabelling is not a bijection".into()));
            }
            inv[p] = v;
        }
        Graph::from_fn(self.n, |a, b| self.has_edge(inv[a], inv[b]))
    }
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

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(cycle(5).boundary(set(&[0])).unwrap().size, 2);
        let b = complete(5).boundary(set(&[0, 1])).unwrap();
        assert_eq!(b.size, 6);
        assert_eq!(b.edges.len(), 6);
        assert_eq!(cycle(5).boundary(VertexSet::empty()), Err(Error::TrivialSet));
        assert_eq!(cycle(5).boundary(VertexSet::full(5)), Err(Error::TrivialSet));
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(cycle(5).neighborhood(set(&[0])), set(&[1, 4]));
        assert_eq!(complete(5).neighborhood(set(&[0, 1])), set(&[2, 3, 4]));
        assert!(cycle(5).neighborhood(VertexSet::full(5)).is_empty());
    }

    #[test]
    fn component_examples() {
        let c5 = cycle(5);
        let p = c5.components(set(&[1, 3]));
        assert_eq!(p.components, vec![set(&[1]), set(&[3])]);
        assert_eq!(p.odd_count, 2);
        let p = c5.components(set(&[1, 2, 3, 4]));
        assert_eq!(p.len(), 1);
        assert_eq!(p.odd_count, 0);
        let p = complete(5).components(set(&[3, 4]));
        assert_eq!(p.components, vec![set(&[3, 4])]);
        assert_eq!(p.odd_count, 0);
    }

    #[test]
    fn induced_examples() {
        assert_eq!(complete(5).induced(set(&[1, 2, 4])).unwrap(), complete(3));
        let path = cycle(5).induced(set(&[0, 1, 2])).unwrap();
        assert_eq!(path.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(cycle(5).induced(VertexSet::full(5)).unwrap(), cycle(5));
        assert_eq!(cycle(5).induced(VertexSet::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(0, &[]).is_err());
        assert!(Graph::from_adjacency(vec![set(&[1]), set(&[])]).is_err());
    }

    #[test]
    fn bipartite_and_cycles() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(cycle(5).is_cycle());
        assert!(!complete(4).is_cycle());
        assert!(cycle(4).has_cycle_within(VertexSet::full(4)));
        assert!(!cycle(4).has_cycle_within(set(&[0, 1, 2])));
    }
}
