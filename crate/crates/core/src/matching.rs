//! Maximum matchings in general graphs via augmenting paths with blossom
//! shrinking, plus perfect-matching, allowed-edge and elementary-graph tests.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Edge, Graph, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`
/// and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Checks that the edges exist in `g` and are pairwise disjoint.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::empty();
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || seen.contains(u) || seen.contains(v) {
                return false;
            }
            seen.insert(u);
            seen.insert(v);
        }
        true
    }
}

/// Maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    maximum_matching_within(g, g.vertices())
}

/// Maximum matching of `G[carrier]`, reported in original labels.
pub fn maximum_matching_within(g: &Graph, carrier: VertexSet) -> Matching {
    let mate = Blossom::new(g, carrier & g.vertices()).solve();
    let edges = (0..g.n())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    Matching { edges }
}

/// Size of a maximum matching of `G[carrier]`.
pub fn matching_number_within(g: &Graph, carrier: VertexSet) -> usize {
    let mate = Blossom::new(g, carrier & g.vertices()).solve();
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    has_perfect_matching_within(g, g.vertices())
}

/// Whether `G[carrier]` has a perfect matching.
pub fn has_perfect_matching_within(g: &Graph, carrier: VertexSet) -> bool {
    let carrier = carrier & g.vertices();
    if carrier.len() % 2 == 1 {
        return false;
    }
    // Cheap necessary conditions before running the matcher.
    if carrier.iter().any(|v| (g.neighbors(v) & carrier).is_empty()) {
        return false;
    }
    2 * matching_number_within(g, carrier) == carrier.len()
}

/// Edges lying in at least one perfect matching. Empty when `g` has none.
pub fn allowed_edges(g: &Graph) -> Vec<Edge> {
    if !has_perfect_matching(g) {
        return Vec::new();
    }
    let all = g.vertices();
    g.edges()
        .into_iter()
        .filter(|&(u, v)| has_perfect_matching_within(g, all.without(u).without(v)))
        .collect()
}

/// Whether the allowed edges of `g` form a connected spanning subgraph.
pub fn is_elementary(g: &Graph) -> bool {
    let allowed = allowed_edges(g);
    if allowed.is_empty() {
        return false;
    }
    let Ok(h) = Graph::from_edges(g.n(), &allowed) else {
        return false;
    };
    h.is_connected()
}

/// Edmonds' algorithm: grow an alternating forest from one exposed root at a
/// time, contracting odd cycles into their base.
struct Blossom<'a> {
    g: &'a Graph,
    carrier: VertexSet,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: VertexSet,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, carrier: VertexSet) -> Self {
        let n = g.n();
        Blossom {
            g,
            carrier,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: VertexSet::empty(),
            queue: VecDeque::new(),
        }
    }

    fn solve(mut self) -> Vec<usize> {
        // Roots are tried in ascending order; a root that fails once can never
        // be augmented later, so one pass suffices.
        for root in self.carrier {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_path(root) {
                self.augment(end);
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = VertexSet::empty();
        loop {
            a = self.base[a];
            seen.insert(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen.contains(b) {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut VertexSet) {
        while self.base[v] != b {
            in_blossom.insert(self.base[v]);
            in_blossom.insert(self.base[self.mate[v]]);
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        self.in_tree = VertexSet::singleton(root);
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) & self.carrier {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer = to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    let cur = self.lca(v, to);
                    let mut in_blossom = VertexSet::empty();
                    self.mark_path(v, cur, to, &mut in_blossom);
                    self.mark_path(to, cur, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom.contains(self.base[i]) {
                            self.base[i] = cur;
                            if !self.in_tree.contains(i) {
                                self.in_tree.insert(i);
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_tree.insert(m);
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v - u == 1 || (u == 0 && v == n - 1)).unwrap()
    }

    #[test]
    fn matching_examples() {
        assert_eq!(maximum_matching(&cycle(5)).len(), 2);
        let k5 = Graph::from_fn(5, |_, _| true).unwrap();
        let k4 = k5.induced(VertexSet::full(4)).unwrap();
        let m = maximum_matching(&k4);
        assert_eq!(m.len(), 2);
        assert!(m.is_valid_in(&k4));
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(!has_perfect_matching(&cycle(5)));
        assert!(has_perfect_matching(&cycle(6)));
        let two_isolated: VertexSet = [1, 3].into_iter().collect();
        assert!(!has_perfect_matching_within(&cycle(5), two_isolated));
    }

    #[test]
    fn allowed_edge_examples() {
        assert_eq!(allowed_edges(&cycle(6)).len(), 6);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(allowed_edges(&k2), vec![(0, 1)]);
        assert!(allowed_edges(&cycle(5)).is_empty());
    }

    #[test]
    fn elementary_examples() {
        assert!(is_elementary(&cycle(6)));
        assert!(is_elementary(&Graph::from_edges(2, &[(0, 1)]).unwrap()));
        let two = cycle(6).disjoint_union(&cycle(6)).unwrap();
        assert!(!is_elementary(&two));
        assert!(!is_elementary(&cycle(5)));
    }

    #[test]
    fn matching_is_deterministic() {
        let g = cycle(6);
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
        assert_eq!(maximum_matching(&g).edges, vec![(0, 1), (2, 3), (4, 5)]);
    }
}
