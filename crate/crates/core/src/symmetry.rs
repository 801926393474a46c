//! Automorphism groups, orbits, vertex-transitivity and imprimitive blocks.
//!
//! The automorphism search individualises vertex pairs and refines colourings
//! of two copies of the graph together (1-dimensional Weisfeiler–Leman); a
//! mismatch in colour-class sizes prunes the branch. Walking down a
//! stabiliser chain with one search per unresolved orbit point yields a
//! generating set of the full group and its order.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the automorphism search.
pub const AUTOMORPHISM_MAX_ORDER: usize = 40;

/// A bijection of `{0..n}` given by its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let mut seen = VertexSet::empty();
        for &v in &image {
            if v >= image.len() || seen.contains(v) {
                return Err(Error::Argument("image vector is not a bijection".into()));
            }
            seen.insert(v);
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn apply_set(&self, x: VertexSet) -> VertexSet {
        x.iter().map(|v| self.image[v]).collect()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.image.len() == g.n() && (0..g.n()).all(|v| self.apply_set(g.neighbors(v)) == g.neighbors(self.image[v]))
    }
}

/// A permutation group given by generators, with its orbit partition.
#[derive(Debug, Clone, Serialize)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    orbits: Vec<VertexSet>,
    /// Basic orbit lengths along the stabiliser chain, when known.
    basic_orbits: Option<Vec<usize>>,
}

/// A partition of the vertices into blocks of equal size permuted by the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    pub blocks: Vec<VertexSet>,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, |b| b.len())
    }

    pub fn block_of(&self, v: usize) -> Option<VertexSet> {
        self.blocks.iter().copied().find(|b| b.contains(v))
    }
}

impl PermGroup {
    /// Group generated by `generators`, each checked to be a permutation of `{0..n}`.
    pub fn from_generators(n: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if generators.iter().any(|p| p.len() != n) {
            return Err(Error::Argument(format!("generator length differs from n={n}")));
        }
        Ok(Self::build(n, generators, None))
    }

    fn build(n: usize, generators: Vec<Permutation>, basic_orbits: Option<Vec<usize>>) -> PermGroup {
        let mut orbits = Vec::new();
        let mut rest = VertexSet::full(n);
        while let Some(v) = rest.first() {
            let o = orbit_of(VertexSet::singleton(v), &generators);
            rest -= o;
            orbits.push(o);
        }
        PermGroup { n, generators, orbits, basic_orbits }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Orbits ordered by smallest element.
    pub fn orbits(&self) -> &[VertexSet] {
        &self.orbits
    }

    pub fn orbit(&self, v: usize) -> VertexSet {
        self.orbits.iter().copied().find(|o| o.contains(v)).unwrap_or(VertexSet::singleton(v))
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    /// Group order from the stabiliser chain; `None` for groups built from
    /// bare generators or when the product overflows.
    pub fn order(&self) -> Option<u128> {
        self.basic_orbits.as_ref()?.iter().try_fold(1u128, |acc, &l| acc.checked_mul(l as u128))
    }

    pub fn basic_orbits(&self) -> Option<&[usize]> {
        self.basic_orbits.as_deref()
    }

    pub fn all_automorphisms_of(&self, g: &Graph) -> bool {
        self.generators.iter().all(|p| p.is_automorphism_of(g))
    }

    /// The finest block system in which all of `seed` lies in one block.
    pub fn block_system(&self, seed: VertexSet) -> BlockSystem {
        let mut uf: Vec<usize> = (0..self.n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        let mut queue = VecDeque::new();
        if let Some(first) = seed.first() {
            for s in seed.iter().skip(1) {
                let (a, b) = (find(&mut uf, first), find(&mut uf, s));
                if a != b {
                    uf[a.max(b)] = a.min(b);
                    queue.push_back((first, s));
                }
            }
        }
        while let Some((x, y)) = queue.pop_front() {
            for p in &self.generators {
                let (gx, gy) = (p.apply(x), p.apply(y));
                let (a, b) = (find(&mut uf, gx), find(&mut uf, gy));
                if a != b {
                    uf[a.max(b)] = a.min(b);
                    queue.push_back((gx, gy));
                }
            }
        }
        let mut classes: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for v in 0..self.n {
            let r = find(&mut uf, v);
            classes.entry(r).or_default().insert(v);
        }
        let mut blocks: Vec<VertexSet> = classes.into_values().collect();
        blocks.sort();
        BlockSystem { blocks }
    }

    /// The smallest block containing `seed`.
    pub fn block_closure(&self, seed: VertexSet) -> VertexSet {
        match seed.first() {
            None => VertexSet::empty(),
            Some(v) => self.block_system(seed).block_of(v).expect("every vertex is in a class"),
        }
    }

    /// Whether `x` is a block: every group element maps it to itself or off it.
    pub fn is_block(&self, x: VertexSet) -> bool {
        !x.is_empty() && self.block_closure(x) == x
    }

    /// Every block containing `v` other than `{v}` and `V`, sorted.
    pub fn blocks_containing(&self, v: usize) -> Vec<VertexSet> {
        let all = VertexSet::full(self.n);
        let mut found: Vec<VertexSet> = Vec::new();
        let mut queue: VecDeque<VertexSet> = VecDeque::from([VertexSet::singleton(v)]);
        while let Some(b) = queue.pop_front() {
            for w in all - b {
                let bigger = self.block_closure(b.with(w));
                if bigger != all && !found.contains(&bigger) {
                    found.push(bigger);
                    queue.push_back(bigger);
                }
            }
        }
        found.sort();
        found
    }
}

/// Closure of `start` under the generators.
fn orbit_of(start: VertexSet, generators: &[Permutation]) -> VertexSet {
    let mut orbit = start;
    let mut frontier: Vec<usize> = start.to_vec();
    while let Some(v) = frontier.pop() {
        for p in generators {
            let w = p.apply(v);
            if !orbit.contains(w) {
                orbit.insert(w);
                frontier.push(w);
            }
        }
    }
    orbit
}

/// Jointly refined colours of two copies of `g` in which `left[i]` (first copy)
/// and `right[i]` (second copy) are individualised with colour `i+1`.
/// `None` when some colour class has different sizes in the two copies.
fn refine_pair(g: &Graph, left: &[usize], right: &[usize]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n();
    let mut colors = vec![0u32; 2 * n];
    for (i, (&a, &b)) in left.iter().zip(right).enumerate() {
        colors[a] = i as u32 + 1;
        colors[n + b] = i as u32 + 1;
    }
    let mut count = count_classes(&colors);
    loop {
        let mut signatures: Vec<(u32, Vec<u32>)> = Vec::with_capacity(2 * n);
        for idx in 0..2 * n {
            let (v, offset) = if idx < n { (idx, 0) } else { (idx - n, n) };
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| colors[w + offset]).collect();
            nb.sort_unstable();
            signatures.push((colors[idx], nb));
        }
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in &signatures {
            ids.insert(s, 0);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u32;
        }
        let next: Vec<u32> = signatures.iter().map(|s| ids[s]).collect();
        let next_count = ids.len();
        colors = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    let mut balance: BTreeMap<u32, i64> = BTreeMap::new();
    for (idx, &c) in colors.iter().enumerate() {
        *balance.entry(c).or_default() += if idx < n { 1 } else { -1 };
    }
    if balance.values().any(|&b| b != 0) {
        return None;
    }
    let right_colors = colors.split_off(n);
    Some((colors, right_colors))
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// The first non-singleton colour class (by colour id) of a colouring.
fn first_open_cell(colors: &[u32]) -> Option<VertexSet> {
    let mut cells: BTreeMap<u32, VertexSet> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().insert(v);
    }
    cells.into_values().find(|c| c.len() > 1)
}

/// An automorphism mapping `left[i] ↦ right[i]` for all `i`, if one exists.
fn find_extension(g: &Graph, left: &mut Vec<usize>, right: &mut Vec<usize>) -> Option<Permutation> {
    let (lc, rc) = refine_pair(g, left, right)?;
    let Some(cell) = first_open_cell(&lc) else {
        let mut image = vec![0; g.n()];
        for (v, &c) in lc.iter().enumerate() {
            image[v] = rc.iter().position(|&d| d == c).expect("balanced colouring");
        }
        let p = Permutation { image };
        return p.is_automorphism_of(g).then_some(p);
    };
    let x = cell.first().expect("nonempty cell");
    let color = lc[x];
    for y in (0..g.n()).filter(|&y| rc[y] == color) {
        left.push(x);
        right.push(y);
        let found = find_extension(g, left, right);
        left.pop();
        right.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// An automorphism of `g` sending `from` to `to`, if any.
pub fn find_automorphism_mapping(g: &Graph, from: usize, to: usize) -> Option<Permutation> {
    find_extension(g, &mut vec![from], &mut vec![to])
}

/// Generators of the full automorphism group of `g`, with its order.
pub fn automorphism_generators(g: &Graph) -> Result<PermGroup> {
    automorphism_generators_capped(g, AUTOMORPHISM_MAX_ORDER)
}

pub fn automorphism_generators_capped(g: &Graph, cap: usize) -> Result<PermGroup> {
    if g.n() > cap {
        return Err(Error::ResourceCap { what: "automorphism search order", size: g.n(), cap });
    }
    let mut base: Vec<usize> = Vec::new();
    let mut generators = Vec::new();
    let mut basic = Vec::new();
    loop {
        let (colors, _) = refine_pair(g, &base, &base).expect("identity is balanced");
        let Some(cell) = first_open_cell(&colors) else {
            break;
        };
        let b = cell.first().expect("nonempty cell");
        let mut level: Vec<Permutation> = Vec::new();
        let mut orbit = VertexSet::singleton(b);
        for v in cell - orbit {
            if orbit.contains(v) {
                continue;
            }
            let mut left = base.clone();
            let mut right = base.clone();
            left.push(b);
            right.push(v);
            if let Some(p) = find_extension(g, &mut left, &mut right) {
                level.push(p);
                orbit = orbit_of(VertexSet::singleton(b), &level);
            }
        }
        basic.push(orbit.len());
        generators.extend(level);
        base.push(b);
    }
    Ok(PermGroup::build(g.n(), generators, Some(basic)))
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    Ok(automorphism_generators(g)?.is_transitive())
}

/// The smallest block of a transitive group containing both seed vertices.
pub fn minimal_block(group: &PermGroup, a: usize, b: usize) -> Result<VertexSet> {
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    Ok(group.block_closure(VertexSet::singleton(a).with(b)))
}

fn transitive_regular(g: &Graph, min_degree: usize) -> Result<(PermGroup, usize)> {
    if !g.is_connected() {
        return Err(Error::Hypothesis("graph must be connected".into()));
    }
    let k = g.regular_degree().ok_or_else(|| Error::Hypothesis("graph is not regular".into()))?;
    if k < min_degree {
        return Err(Error::Hypothesis(format!("degree {k} below {min_degree}")));
    }
    let group = automorphism_generators(g)?;
    if !group.is_transitive() {
        return Err(Error::Hypothesis("graph is not vertex-transitive".into()));
    }
    Ok((group, k))
}

/// Whether some imprimitive block of a connected vertex-transitive graph of
/// degree `k ≥ 3` is a clique on exactly `k` vertices.
pub fn has_clique_block_of_size_k(g: &Graph) -> Result<bool> {
    let (group, k) = transitive_regular(g, 3)?;
    Ok(clique_block_of_size(g, &group, k).is_some())
}

/// A block containing vertex 0 that induces a clique on `size` vertices.
pub fn clique_block_of_size(g: &Graph, group: &PermGroup, size: usize) -> Option<VertexSet> {
    group
        .blocks_containing(0)
        .into_iter()
        .find(|&b| b.len() == size && 2 * g.edges_within(b) == size * (size - 1))
}

/// Whether the subgraph induced by an imprimitive block is vertex-transitive.
pub fn block_induced_transitivity_check(g: &Graph, block: VertexSet) -> Result<bool> {
    let group = automorphism_generators(g)?;
    block_induced_transitivity_check_with(g, &group, block)
}

pub fn block_induced_transitivity_check_with(g: &Graph, group: &PermGroup, block: VertexSet) -> Result<bool> {
    let block = block & g.vertices();
    if block == g.vertices() || !group.is_block(block) {
        return Err(Error::NotABlock);
    }
    is_vertex_transitive(&g.induced(block)?)
}
