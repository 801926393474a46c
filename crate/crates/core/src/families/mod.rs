//! Generators for vertex-transitive families (cycles, complete graphs,
//! circulants, Cayley graphs, Kneser graphs, prisms) and graph6 file ingestion.
//!
//! Each generated graph carries a symmetry certificate: a list of
//! automorphisms whose generated group is transitive. Certificates are always
//! re-verified against the graph before being believed.

mod group_table;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

pub use group_table::{GroupTable, SHIPPED_TABLES};

use crate::error::{Error, Result};
use crate::graph::{configured_width, parse_graph6, Graph, VertexSet};
use crate::symmetry::Permutation;

/// A named member of a graph family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    Circulant { n: usize, steps: Vec<usize> },
    /// A Cayley graph over a shipped table (by name) or a table file (by path);
    /// `connection` overrides the table's own `S:` line.
    Cayley { table: String, connection: Option<Vec<usize>> },
    Petersen,
    Kneser { n: usize, k: usize },
    /// `C_m × K₂`: vertices `0..m` and `m..2m` form the two cycles.
    Prism(usize),
    Graph6File(PathBuf),
}

/// A generated graph with its spec and (if known) a transitivity certificate.
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub certificate: Option<Vec<Permutation>>,
}

impl FamilyGraph {
    /// Whether the certificate exists, consists of automorphisms and acts transitively.
    pub fn certified_transitive(&self) -> bool {
        self.certificate.as_ref().is_some_and(|gens| certify_transitive(&self.graph, gens))
    }
}

/// Checks that `generators` are automorphisms of `g` whose orbit of vertex 0 is `V`.
pub fn certify_transitive(g: &Graph, generators: &[Permutation]) -> bool {
    if !generators.iter().all(|p| p.is_automorphism_of(g)) {
        return false;
    }
    let mut orbit = VertexSet::singleton(0);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for p in generators {
            let w = p.apply(v);
            if !orbit.contains(w) {
                orbit.insert(w);
                stack.push(w);
            }
        }
    }
    orbit == g.vertices()
}

fn check_width(n: usize) -> Result<()> {
    let width = configured_width();
    if n > width {
        return Err(Error::ResourceCap { what: "vertex count", size: n, cap: width });
    }
    Ok(())
}

fn rotation(n: usize) -> Permutation {
    Permutation::new((0..n).map(|i| (i + 1) % n).collect()).expect("rotation is a bijection")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `C_n(S)`: `i ~ j` iff `(i − j) mod n ∈ ±S`.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Family(format!("circulant order {n} below 3")));
    }
    if steps.is_empty() {
        return Err(Error::Family("empty step set".into()));
    }
    if let Some(&s) = steps.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(Error::Family(format!("step {s} outside 1..={}", n / 2)));
    }
    check_width(n)?;
    Graph::from_fn(n, |u, v| {
        let d = v - u;
        steps.iter().any(|&s| d == s || d == n - s)
    })
}

/// Whether `C_n(S)` is connected, i.e. `gcd(S ∪ {n}) = 1`.
pub fn circulant_is_connected(n: usize, steps: &[usize]) -> bool {
    steps.iter().fold(n, |acc, &s| gcd(acc, s)) == 1
}

fn canonical_steps(n: usize, steps: &[usize], multiplier: usize) -> Vec<usize> {
    let mut out: Vec<usize> = steps
        .iter()
        .map(|&s| {
            let t = s * multiplier % n;
            t.min(n - t)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// One representative per multiplier class of connected circulants of order `n`
/// (any parity), each the lexicographically smallest step set of its class.
pub fn circulant_classes(n: usize) -> Result<Vec<Vec<usize>>> {
    if n < 3 {
        return Err(Error::Family(format!("circulant order {n} below 3")));
    }
    check_width(n)?;
    let half = n / 2;
    let units: Vec<usize> = (1..n).filter(|&a| gcd(a, n) == 1).collect();
    let mut reps = Vec::new();
    for mask in 1u64..1 << half {
        let steps: Vec<usize> = (0..half).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if !circulant_is_connected(n, &steps) {
            continue;
        }
        let is_rep = units.iter().all(|&a| canonical_steps(n, &steps, a) >= steps);
        if is_rep {
            reps.push(steps);
        }
    }
    reps.sort();
    Ok(reps)
}

/// Connected circulant classes of odd order `n ≥ 5`, as family specs.
pub fn enumerate_circulants(n: usize) -> Result<Vec<FamilySpec>> {
    if n.is_multiple_of(2) {
        return Err(Error::Family(format!("order {n} is even; the sweep covers odd orders")));
    }
    if n < 5 {
        return Err(Error::Family(format!("order {n} below 5")));
    }
    Ok(circulant_classes(n)?
        .into_iter()
        .map(|steps| FamilySpec::Circulant { n, steps })
        .collect())
}

/// Cayley graph `Cay(Γ, S)`: `g ~ h` iff `g⁻¹h ∈ S`.
pub fn cayley(table: &GroupTable, connection: &[usize]) -> Result<Graph> {
    let m = table.order();
    check_width(m)?;
    let s: VertexSet = connection.iter().copied().filter(|&x| x < m).collect();
    if s.len() != connection.len() {
        return Err(Error::Family("connection set has repeated or out-of-range elements".into()));
    }
    if s.contains(table.identity()) {
        return Err(Error::Family("connection set contains the identity".into()));
    }
    if let Some(x) = s.iter().find(|&x| !s.contains(table.inverse(x))) {
        return Err(Error::Family(format!("connection set not inverse-closed at {x}")));
    }
    Graph::from_fn(m, |g, h| s.contains(table.mul(table.inverse(g), h)))
}

/// Left translations `x ↦ a·x` for `a ∈ S`.
fn left_translations(table: &GroupTable, connection: &[usize]) -> Vec<Permutation> {
    connection
        .iter()
        .map(|&a| Permutation::new((0..table.order()).map(|x| table.mul(a, x)).collect()).expect("group row"))
        .collect()
}

/// Every inverse-closed, identity-free generating connection set of `table`,
/// as sorted element lists in lexicographic order.
pub fn connection_sets(table: &GroupTable) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..table.order() {
        if x == table.identity() {
            continue;
        }
        let inv = table.inverse(x);
        if inv >= x {
            classes.push(if inv == x { vec![x] } else { vec![x, inv] });
        }
    }
    let mut out = Vec::new();
    for mask in 1u64..1 << classes.len() {
        let mut s: Vec<usize> = (0..classes.len())
            .filter(|i| mask >> i & 1 == 1)
            .flat_map(|i| classes[i].iter().copied())
            .collect();
        s.sort_unstable();
        if table.generates(&s) {
            out.push(s);
        }
    }
    out.sort();
    out
}

fn combination_index(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    crate::criticality::find_combination(n, k, |x| {
        out.push(x);
        None::<()>
    });
    out
}

/// Kneser graph `K(n, k)`: `k`-subsets of `{0..n}` in lexicographic order,
/// adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    Ok(kneser_with_certificate(n, k)?.0)
}

fn kneser_with_certificate(n: usize, k: usize) -> Result<(Graph, Vec<Permutation>)> {
    if k == 0 || n < 2 * k + 1 {
        // K(2k, k) is a perfect matching; still allowed for k ≥ 1.
        if k == 0 || n < 2 * k {
            return Err(Error::Family(format!("kneser({n},{k}) needs n ≥ 2k and k ≥ 1")));
        }
    }
    let count = binomial(n, k).ok_or(Error::ResourceCap { what: "vertex count", size: usize::MAX, cap: configured_width() })?;
    check_width(count)?;
    let subsets = combination_index(n, k);
    let g = Graph::from_fn(subsets.len(), |a, b| subsets[a].is_disjoint(subsets[b]))?;
    let index_of = |x: VertexSet| subsets.binary_search(&x).expect("k-subset present");
    let induced = |map: &dyn Fn(usize) -> usize| {
        let image = subsets.iter().map(|s| index_of(s.iter().map(map).collect())).collect();
        Permutation::new(image).expect("ground permutation induces a bijection")
    };
    let cert = vec![induced(&|i| (i + 1) % n), induced(&|i| if i < 2 { 1 - i } else { i })];
    Ok((g, cert))
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    (0..k).try_fold(1usize, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("K(5,2) is within width")
}

/// `C_m × K₂`.
pub fn prism(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::Family(format!("prism needs m ≥ 3, got {m}")));
    }
    check_width(2 * m)?;
    Graph::from_fn(2 * m, |u, v| {
        let (a, b) = (u % m, v % m);
        let ring = (u < m) == (v < m) && (b == (a + 1) % m || a == (b + 1) % m);
        ring || v == u + m
    })
}

impl FamilySpec {
    /// Generates the graph with its symmetry certificate.
    pub fn build(&self) -> Result<FamilyGraph> {
        let (graph, certificate) = match self {
            FamilySpec::Cycle(n) => {
                let g = circulant(*n, &[1])?;
                (g, Some(vec![rotation(*n)]))
            }
            FamilySpec::Complete(n) => {
                check_width(*n)?;
                let g = Graph::from_fn(*n, |_, _| true)?;
                (g, Some(vec![rotation(*n)]))
            }
            FamilySpec::Circulant { n, steps } => (circulant(*n, steps)?, Some(vec![rotation(*n)])),
            FamilySpec::Cayley { table, connection } => {
                let (t, default_s) = load_table(table)?;
                let s = connection.clone().unwrap_or(default_s);
                let g = cayley(&t, &s)?;
                (g, Some(left_translations(&t, &s)))
            }
            FamilySpec::Petersen => {
                let (g, cert) = kneser_with_certificate(5, 2)?;
                (g, Some(cert))
            }
            FamilySpec::Kneser { n, k } => {
                let (g, cert) = kneser_with_certificate(*n, *k)?;
                (g, Some(cert))
            }
            FamilySpec::Prism(m) => {
                let g = prism(*m)?;
                let rot = (0..2 * m).map(|v| if v < *m { (v + 1) % m } else { m + (v - m + 1) % m }).collect();
                let swap = (0..2 * m).map(|v| (v + m) % (2 * m)).collect();
                let cert = vec![Permutation::new(rot)?, Permutation::new(swap)?];
                (g, Some(cert))
            }
            FamilySpec::Graph6File(path) => {
                let text = std::fs::read(path)
                    .map_err(|e| Error::Family(format!("cannot read {}: {e}", path.display())))?;
                let line = text
                    .split(|&b| b == b'\n')
                    .find(|l| !l.iter().all(u8::is_ascii_whitespace))
                    .ok_or_else(|| Error::Family(format!("{} holds no graph6 line", path.display())))?;
                (parse_graph6(line)?, None)
            }
        };
        Ok(FamilyGraph { spec: self.clone(), graph, certificate })
    }
}

/// A shipped table by name, or a table file by path.
pub fn load_table(name_or_path: &str) -> Result<(GroupTable, Vec<usize>)> {
    if SHIPPED_TABLES.iter().any(|(n, _)| *n == name_or_path) {
        return GroupTable::shipped(name_or_path);
    }
    let text = std::fs::read_to_string(name_or_path)
        .map_err(|e| Error::GroupTable(format!("cannot read {name_or_path}: {e}")))?;
    GroupTable::parse(&text)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Circulant { n, steps } => write!(f, "circulant:{n}:{}", join(steps)),
            FamilySpec::Cayley { table, connection: None } => write!(f, "cayley:{table}"),
            FamilySpec::Cayley { table, connection: Some(s) } => write!(f, "cayley:{table}:{}", join(s)),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Kneser { n, k } => write!(f, "kneser:{n}:{k}"),
            FamilySpec::Prism(m) => write!(f, "prism:{m}"),
            FamilySpec::Graph6File(p) => write!(f, "graph6-file:{}", p.display()),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_num(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Family(format!("not a number: {s:?}")))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(parse_num).collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `cycle:N`, `complete:N`, `circulant:N:s1,s2,..`, `petersen`,
    /// `kneser:N:K`, `prism:M`, `cayley:TABLE[:e1,e2,..]`, `graph6-file:PATH`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let parts: Vec<&str> = if rest.is_empty() { Vec::new() } else { rest.split(':').collect() };
        let spec = match (kind, parts.as_slice()) {
            ("cycle", [n]) => FamilySpec::Cycle(parse_num(n)?),
            ("complete", [n]) => FamilySpec::Complete(parse_num(n)?),
            ("circulant", [n, steps]) => {
                let mut steps = parse_list(steps)?;
                steps.sort_unstable();
                steps.dedup();
                FamilySpec::Circulant { n: parse_num(n)?, steps }
            }
            ("petersen", []) => FamilySpec::Petersen,
            ("kneser", [n, k]) => FamilySpec::Kneser { n: parse_num(n)?, k: parse_num(k)? },
            ("prism", [m]) => FamilySpec::Prism(parse_num(m)?),
            ("cayley", [table]) => FamilySpec::Cayley { table: table.to_string(), connection: None },
            ("cayley", [table, s]) => {
                FamilySpec::Cayley { table: table.to_string(), connection: Some(parse_list(s)?) }
            }
            ("graph6-file", _) if !rest.is_empty() => FamilySpec::Graph6File(PathBuf::from(rest)),
            _ => return Err(Error::Family(format!("unrecognised family spec {s:?}"))),
        };
        Ok(spec)
    }
}
