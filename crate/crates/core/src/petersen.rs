//! The Petersen graph in its Kneser labeling, its automorphisms, and its cycles.
//!
//! Vertices of the Kneser model are the 2-subsets of {1..5}, ordered by their
//! sorted label pairs; two vertices are adjacent iff the subsets are disjoint.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::group::{Perm, PermutationGroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is not isomorphic to the Petersen graph: {0}")]
    NotPetersen(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edge {0}-{1} is a loop or repeated")]
    BadEdge(String, String),
}

/// A finite simple graph with named vertices. Vertex indices follow the order
/// the names were given in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![BTreeSet::new(); names.len()];
        let mut stored = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| i.to_string());
            if u >= names.len() || v >= names.len() || u == v || adjacency[u].contains(&v) {
                return Err(GraphError::BadEdge(name(u), name(v)));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
            stored.push((u, v));
        }
        Ok(Graph {
            names,
            edges: stored,
            adjacency,
        })
    }

    pub fn from_named_edges(names: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let find = |n: &str| {
            names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| GraphError::UnknownVertex(n.to_string()))
        };
        let idx = edges
            .iter()
            .map(|(u, v)| Ok((find(u)?, find(v)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        Graph::new(names, &idx)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Edges as stored, with their original endpoint order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Index of the stored edge joining `u` and `v`.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.vertex_count()
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.adjacent(p.apply(u), p.apply(v)))
    }

    pub fn girth(&self) -> Option<usize> {
        enumerate_cycles(self).keys().next().copied()
    }
}

/// Kneser label of each vertex of [`build_petersen`], in vertex order.
pub fn kneser_labels() -> Vec<(u8, u8)> {
    let mut labels = Vec::with_capacity(10);
    for a in 1..=5u8 {
        for b in a + 1..=5 {
            labels.push((a, b));
        }
    }
    labels
}

pub fn kneser_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    kneser_labels()
        .iter()
        .position(|&l| l == (a, b))
        .expect("label outside {1..5}")
}

/// The Petersen graph with vertices named `12`, `13`, …, `45`.
pub fn build_petersen() -> Graph {
    let labels = kneser_labels();
    let names = labels.iter().map(|(a, b)| format!("{a}{b}")).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in labels.iter().enumerate() {
        for (j, &(c, d)) in labels.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(names, &edges).expect("Kneser graph is simple")
}

/// An automorphism of a labeled graph, optionally remembering the permutation
/// of {1..5} it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAutomorphism {
    pub mapping: Perm,
    pub source_perm: Option<Perm>,
}

/// Action of a permutation of {1..5} (0-based, degree 5) on the Kneser vertices.
pub fn s5_action(perm: &Perm) -> GraphAutomorphism {
    assert_eq!(
        perm.degree(),
        5,
        "S5 action needs a permutation of five points"
    );
    let labels = kneser_labels();
    let images = labels
        .iter()
        .map(|&(a, b)| {
            let pa = perm.apply(a as usize - 1) as u8 + 1;
            let pb = perm.apply(b as usize - 1) as u8 + 1;
            kneser_index(pa, pb)
        })
        .collect();
    GraphAutomorphism {
        mapping: Perm::from_images(images).expect("S5 acts by bijections"),
        source_perm: Some(perm.clone()),
    }
}

pub fn symmetric_group_s5() -> PermutationGroup {
    let five_cycle = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
    let transposition = Perm::from_cycles(5, &[&[0, 1]]).unwrap();
    PermutationGroup::generate(5, &[five_cycle, transposition]).unwrap()
}

/// The automorphism group of the Kneser model as the image of S5.
pub fn automorphism_group() -> PermutationGroup {
    let gens: Vec<Perm> = symmetric_group_s5()
        .generators()
        .iter()
        .map(|g| s5_action(g).mapping)
        .collect();
    PermutationGroup::generate(10, &gens).unwrap()
}

/// Exhaustive backtracking search for adjacency-preserving bijections.
pub fn brute_force_automorphisms(graph: &Graph) -> Vec<Perm> {
    let mut out = Vec::new();
    let n = graph.vertex_count();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    isomorphisms_rec(graph, graph, 0, &mut image, &mut used, &mut out, usize::MAX);
    out.into_iter()
        .map(|m| Perm::from_images(m).unwrap())
        .collect()
}

fn isomorphisms_rec(
    from: &Graph,
    to: &Graph,
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let n = from.vertex_count();
    if v == n {
        out.push(image.clone());
        return;
    }
    for w in 0..n {
        if used[w] || from.degree(v) != to.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| from.adjacent(u, v) == to.adjacent(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        isomorphisms_rec(from, to, v + 1, image, used, out, limit);
        used[w] = false;
        image[v] = usize::MAX;
    }
}

/// An isomorphism from `graph` onto the Kneser model, as vertex images.
pub fn verify_petersen_isomorphic(graph: &Graph) -> Result<Vec<usize>, GraphError> {
    let model = build_petersen();
    if graph.vertex_count() != 10 || graph.edge_count() != 15 {
        return Err(GraphError::NotPetersen(format!(
            "{} vertices and {} edges",
            graph.vertex_count(),
            graph.edge_count()
        )));
    }
    if (0..10).any(|v| graph.degree(v) != 3) {
        return Err(GraphError::NotPetersen("not 3-regular".into()));
    }
    let mut image = vec![usize::MAX; 10];
    let mut used = vec![false; 10];
    let mut out = Vec::new();
    isomorphisms_rec(graph, &model, 0, &mut image, &mut used, &mut out, 1);
    out.pop()
        .ok_or_else(|| GraphError::NotPetersen("no adjacency-preserving bijection".into()))
}

/// A simple cycle in canonical form: starts at its smallest vertex and runs in
/// the direction whose second vertex is smaller.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn canonical(seq: &[usize]) -> Cycle {
        let n = seq.len();
        let start = (0..n).min_by_key(|&i| seq[i]).unwrap_or(0);
        let forward: Vec<usize> = (0..n).map(|k| seq[(start + k) % n]).collect();
        let backward: Vec<usize> = (0..n).map(|k| seq[(start + n - k) % n]).collect();
        Cycle(forward.min(backward))
    }

    /// Checks that `seq` is a cycle of `graph` and canonicalizes it.
    pub fn in_graph(graph: &Graph, seq: &[usize]) -> Option<Cycle> {
        let n = seq.len();
        let distinct: BTreeSet<usize> = seq.iter().copied().collect();
        if n < 3 || distinct.len() != n {
            return None;
        }
        (0..n)
            .all(|k| graph.adjacent(seq[k], seq[(k + 1) % n]))
            .then(|| Cycle::canonical(seq))
    }

    pub fn from_names(graph: &Graph, names: &[&str]) -> Option<Cycle> {
        let seq: Option<Vec<usize>> = names.iter().map(|n| graph.index_of(n)).collect();
        Cycle::in_graph(graph, &seq?)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    /// Consecutive vertex pairs in traversal order, closing the loop.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |k| (self.0[k], self.0[(k + 1) % n]))
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.steps()
            .any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn image(&self, p: &Perm) -> Cycle {
        let seq: Vec<usize> = self.0.iter().map(|&v| p.apply(v)).collect();
        Cycle::canonical(&seq)
    }

    pub fn display(&self, graph: &Graph) -> String {
        let spaced = graph.names().iter().any(|n| n.chars().count() != 1);
        let parts: Vec<&str> = self.0.iter().map(|&v| graph.name(v)).collect();
        parts.join(if spaced { "," } else { "" })
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.0)
    }
}

/// Two vertex-disjoint 5-cycles covering the Petersen graph; `first < second`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePair {
    pub first: Cycle,
    pub second: Cycle,
}

impl CyclePair {
    pub fn new(a: Cycle, b: Cycle) -> CyclePair {
        if a <= b {
            CyclePair {
                first: a,
                second: b,
            }
        } else {
            CyclePair {
                first: b,
                second: a,
            }
        }
    }

    pub fn image(&self, p: &Perm) -> CyclePair {
        CyclePair::new(self.first.image(p), self.second.image(p))
    }
}

/// Every simple cycle exactly once, grouped by length.
pub fn enumerate_cycles(graph: &Graph) -> BTreeMap<usize, Vec<Cycle>> {
    let n = graph.vertex_count();
    let mut found: BTreeSet<Cycle> = BTreeSet::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend_cycles(graph, start, &mut path, &mut on_path, &mut found);
        on_path[start] = false;
        path.pop();
    }
    let mut by_len: BTreeMap<usize, Vec<Cycle>> = BTreeMap::new();
    for c in found {
        by_len.entry(c.len()).or_default().push(c);
    }
    by_len
}

// DFS restricted to vertices above `start`; each cycle is recorded from its
// smallest vertex, once per direction, and deduplicated by canonical form.
fn extend_cycles(
    graph: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut BTreeSet<Cycle>,
) {
    let last = *path.last().unwrap();
    for &next in graph.neighbors(last) {
        if next == start && path.len() >= 3 {
            if path[1] < last {
                found.insert(Cycle(path.clone()));
            }
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            path.push(next);
            extend_cycles(graph, start, path, on_path, found);
            path.pop();
            on_path[next] = false;
        }
    }
}

pub fn disjoint_five_cycle_pairs(graph: &Graph) -> Vec<CyclePair> {
    let cycles = enumerate_cycles(graph);
    let fives = cycles.get(&5).cloned().unwrap_or_default();
    let mut pairs = BTreeSet::new();
    for (i, a) in fives.iter().enumerate() {
        let sa = a.vertex_set();
        for b in &fives[i + 1..] {
            if sa.is_disjoint(&b.vertex_set()) {
                pairs.insert(CyclePair::new(a.clone(), b.clone()));
            }
        }
    }
    pairs.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerMode {
    Pointwise,
    Setwise,
}

#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Cycle(&'a Cycle),
    Pair(&'a CyclePair),
}

/// Subgroup of `group` fixing the target pointwise or setwise. A pair is
/// fixed setwise when it is mapped to itself as an unordered pair.
pub fn stabilizer(
    group: &PermutationGroup,
    target: Target<'_>,
    mode: StabilizerMode,
) -> PermutationGroup {
    let keep = |p: &Perm| match (target, mode) {
        (Target::Cycle(c), StabilizerMode::Pointwise) => {
            c.vertices().iter().all(|&v| p.apply(v) == v)
        }
        (Target::Cycle(c), StabilizerMode::Setwise) => &c.image(p) == c,
        (Target::Pair(pr), StabilizerMode::Pointwise) => pr
            .first
            .vertices()
            .iter()
            .chain(pr.second.vertices())
            .all(|&v| p.apply(v) == v),
        (Target::Pair(pr), StabilizerMode::Setwise) => &pr.image(p) == pr,
    };
    group.filter(keep).expect("stabilizers are subgroups")
}

/// Structural facts about disjoint 5-cycles, each checked exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub pair_count: usize,
    pub five_cycle_count: usize,
    /// Every 5-cycle has trivial pointwise stabilizer.
    pub pointwise_trivial: bool,
    /// Every involution fixing both cycles of a pair fixes one vertex on each.
    pub involutions_fix_one_vertex_each: bool,
    /// Two such involutions with the same fixed vertices coincide.
    pub involutions_determined_by_fixed_vertices: bool,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.pair_count == 6
            && self.five_cycle_count == 12
            && self.pointwise_trivial
            && self.involutions_fix_one_vertex_each
            && self.involutions_determined_by_fixed_vertices
    }
}

pub fn verify_lemma() -> LemmaReport {
    let graph = build_petersen();
    let group = automorphism_group();
    let pairs = disjoint_five_cycle_pairs(&graph);
    let fives = enumerate_cycles(&graph).remove(&5).unwrap_or_default();
    let pointwise_trivial = fives
        .iter()
        .all(|c| stabilizer(&group, Target::Cycle(c), StabilizerMode::Pointwise).order() == 1);
    let mut fix_one = true;
    let mut determined = true;
    for pair in &pairs {
        let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), Perm> = BTreeMap::new();
        for p in group.elements().filter(|p| p.order() == 2) {
            if pair.first.image(p) != pair.first || pair.second.image(p) != pair.second {
                continue;
            }
            let fixed = |c: &Cycle| -> Vec<usize> {
                c.vertices()
                    .iter()
                    .copied()
                    .filter(|&v| p.apply(v) == v)
                    .collect()
            };
            let key = (fixed(&pair.first), fixed(&pair.second));
            fix_one &= key.0.len() == 1 && key.1.len() == 1;
            if let Some(q) = seen.insert(key, p.clone()) {
                determined &= &q == p;
            }
        }
    }
    LemmaReport {
        pair_count: pairs.len(),
        five_cycle_count: fives.len(),
        pointwise_trivial,
        involutions_fix_one_vertex_each: fix_one,
        involutions_determined_by_fixed_vertices: determined,
    }
}
