//! Branch-and-bound enumeration of connected vertex sets with small boundary.
//!
//! Every candidate side `X` is grown from a seed vertex (its smallest element)
//! by repeatedly taking an unassigned neighbour of `X` and either adding it to
//! `X` or excluding it for good. Edges from `X` to excluded vertices are
//! certainly cut, which gives the bound. Each connected set is produced once.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::graph::{Graph, VertexSet};

/// Side conditions a fragment must satisfy besides both sides being connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SideRule {
    /// Minimum number of vertices on each side.
    pub min_side: usize,
    /// Both sides must contain a cycle.
    pub cyclic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Only the minimum value matters.
    Value,
    /// Collect every set attaining the minimum.
    AllMinimizers,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SearchOutcome {
    pub value: Option<usize>,
    /// Minimizing sides, normalised to the side containing vertex 0, sorted.
    /// Complete only for `Goal::AllMinimizers` without the transitive shortcut.
    pub fragments: Vec<VertexSet>,
}

pub(crate) struct FragmentSearch<'g> {
    g: &'g Graph,
    rule: SideRule,
    goal: Goal,
    /// Only cuts of size at most this are of interest.
    limit: usize,
    /// Seed only vertex 0; valid for vertex-transitive graphs (value only).
    transitive: bool,
}

impl<'g> FragmentSearch<'g> {
    pub fn new(g: &'g Graph, rule: SideRule, goal: Goal) -> Self {
        FragmentSearch { g, rule, goal, limit: g.edge_count(), transitive: false }
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn transitive(mut self, yes: bool) -> Self {
        self.transitive = yes;
        self
    }

    /// Whether `x` is an admissible side: connected both ways and meeting the rule.
    pub fn admissible(g: &Graph, rule: SideRule, x: VertexSet) -> bool {
        let rest = x.complement(g.n());
        x.len() >= rule.min_side
            && rest.len() >= rule.min_side
            && g.is_connected_within(x)
            && g.is_connected_within(rest)
            && (!rule.cyclic || (g.edges_within(x) >= x.len() && g.edges_within(rest) >= rest.len()))
    }

    pub fn run(self) -> SearchOutcome {
        let n = self.g.n();
        if n < 2 * self.rule.min_side.max(1) {
            return SearchOutcome { value: None, fragments: Vec::new() };
        }
        let shared = AtomicUsize::new(self.limit);
        let seeds: Vec<usize> = if self.transitive { vec![0] } else { (0..n).collect() };
        let found: Vec<(usize, VertexSet)> = seeds
            .par_iter()
            .flat_map_iter(|&seed| {
                let mut local = Vec::new();
                let excluded = VertexSet::full(seed);
                let x = VertexSet::singleton(seed);
                let cut = self.g.edges_between(x, excluded);
                let mut worker = Worker { s: &self, bound: &shared, found: &mut local };
                worker.grow(x, excluded, cut);
                local
            })
            .collect();

        let value = found.iter().map(|&(d, _)| d).min();
        let mut fragments: Vec<VertexSet> = found
            .into_iter()
            .filter(|&(d, _)| Some(d) == value)
            .map(|(_, x)| if x.contains(0) { x } else { x.complement(n) })
            .collect();
        fragments.sort();
        fragments.dedup();
        SearchOutcome { value, fragments }
    }
}

struct Worker<'a, 'g> {
    s: &'a FragmentSearch<'g>,
    bound: &'a AtomicUsize,
    found: &'a mut Vec<(usize, VertexSet)>,
}

impl Worker<'_, '_> {
    fn grow(&mut self, x: VertexSet, excluded: VertexSet, cut: usize) {
        if cut > self.bound.load(Ordering::Relaxed) {
            return;
        }
        let g = self.s.g;
        let n = g.n();
        let frontier = g.neighborhood(x) - excluded;
        if frontier.is_empty() || x.len() == n / 2 {
            let d = cut + g.edges_between(x, frontier);
            self.leaf(x, d);
            return;
        }
        // Branch on the frontier vertex most tied to X.
        let v = frontier
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & x).len(), std::cmp::Reverse(v)))
            .expect("frontier is nonempty");
        let into_x = (g.neighbors(v) & x).len();
        self.grow(x.with(v), excluded, cut + (g.neighbors(v) & excluded).len());
        self.grow(x, excluded.with(v), cut + into_x);
    }

    fn leaf(&mut self, x: VertexSet, d: usize) {
        let bound = self.bound.load(Ordering::Relaxed);
        if d > bound || !FragmentSearch::admissible(self.s.g, self.s.rule, x) {
            return;
        }
        self.found.push((d, x));
        let next = match self.s.goal {
            Goal::AllMinimizers => d,
            Goal::Value => d.saturating_sub(1),
        };
        self.bound.fetch_min(next, Ordering::Relaxed);
    }
}
