//! Planar diagram codes for spatial graphs.
//!
//! An embedding file is line oriented (`#` starts a comment):
//!
//! ```text
//! graph    v <name>                          one per vertex
//! graph    e <edge-id> <u> <v>               one per edge
//! vertex   <name> : <dart> <dart> <dart>     counterclockwise dart order
//! crossing <id> : <dart> <dart> <dart> <dart> counterclockwise from the incoming under-strand
//! arc      <dart> -- <dart> on <edge-id>
//! decorate <edge-id> knot <name> dir <fwd|bwd> sign <+|->
//! ```
//!
//! Darts are `<edge-id>.<n>`. Along an edge stored as `u v`, dart `e.0` sits at
//! `u`, each crossing passage contributes an incoming dart `e.(2i+1)` and an
//! outgoing dart `e.(2i+2)`, and the last dart sits at `v`. Arcs join
//! `e.(2i)` with `e.(2i+1)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::group::{Perm, Sign, SignedAutomorphism};
use crate::knot::{KnotDiagram, KnotError, PdCrossing};
use crate::petersen::{enumerate_cycles, Cycle, Graph, GraphError};
use crate::table::KnotName;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid diagram: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Validation(Vec<Violation>),
    #[error("not a cycle of the underlying graph")]
    NotACycle,
    #[error("cycles share a vertex")]
    NotDisjoint,
    #[error("underlying graph is not a single cycle")]
    NotAKnot,
    #[error(transparent)]
    Knot(#[from] KnotError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: &'static str,
    pub detail: String,
}

impl Violation {
    fn new(kind: &'static str, detail: impl Into<String>) -> Self {
        Violation {
            kind,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.detail)
    }
}

/// Orders names so that digit runs compare numerically (`x2 < x10`).
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(&cb) {
        let ord = match (da, db) {
            (true, true) => {
                let ta = sa.trim_start_matches('0');
                let tb = sb.trim_start_matches('0');
                ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
            }
            _ => sa.cmp(sb),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    fn token(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }
}

/// A knot tied into an edge, oriented relative to the edge's stored endpoint order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    pub knot: KnotName,
    pub direction: Direction,
    pub sign: Sign,
}

impl Decoration {
    pub fn new(knot: KnotName, direction: Direction, sign: Sign) -> Self {
        Decoration {
            knot,
            direction,
            sign,
        }
    }

    /// Image under a homeomorphism of the given orientation character whose
    /// automorphism reverses (`flip`) or keeps the edge's stored endpoint order.
    pub fn transport(&self, flip: bool, sign: Sign) -> Decoration {
        Decoration {
            knot: self.knot,
            direction: if flip {
                self.direction.flipped()
            } else {
                self.direction
            },
            sign: self.sign * sign,
        }
    }

    /// Smallest representative of the orbit under the knot's symmetry set.
    pub fn canonical(&self) -> Decoration {
        let sym = self.knot.symmetry();
        let mut best = *self;
        for (m, r) in [(true, false), (false, true), (true, true)] {
            if sym.contains(m, r) {
                let cand = Decoration {
                    knot: self.knot,
                    direction: if r {
                        self.direction.flipped()
                    } else {
                        self.direction
                    },
                    sign: if m {
                        self.sign * Sign::Minus
                    } else {
                        self.sign
                    },
                };
                best = best.min(cand);
            }
        }
        best
    }
}

/// Canonical multiset of decorations, for equality up to knot symmetries.
pub fn canonical_decorations(decos: &[Decoration]) -> Vec<Decoration> {
    let mut out: Vec<Decoration> = decos
        .iter()
        .filter(|d| d.knot != KnotName::Unknot)
        .map(Decoration::canonical)
        .collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingRecord {
    pub id: String,
    /// Counterclockwise from the incoming under-strand.
    pub darts: [Dart; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialDiagram {
    graph: Graph,
    edge_ids: Vec<String>,
    rotations: Vec<Vec<Dart>>,
    crossings: Vec<CrossingRecord>,
    arcs: Vec<(Dart, Dart)>,
    decorations: BTreeMap<usize, Vec<Decoration>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Vertex(usize),
    Crossing(usize),
}

/// Location of every dart, derived from a validated diagram.
struct Incidence {
    node_of: HashMap<Dart, (Node, usize)>,
    /// Highest dart index per edge.
    last: Vec<usize>,
}

impl SpatialDiagram {
    /// Assembles a diagram from parts and validates it. Vertices and edges are
    /// re-sorted into natural name order.
    pub fn new(
        vertex_names: Vec<String>,
        edges: Vec<(String, String, String)>,
        rotations: BTreeMap<String, Vec<(String, usize)>>,
        crossings: Vec<(String, [(String, usize); 4])>,
        arcs: Vec<((String, usize), (String, usize), String)>,
        decorations: Vec<(String, Decoration)>,
    ) -> Result<Self, DiagramError> {
        let mut violations = Vec::new();
        let mut names = vertex_names;
        names.sort_by(|a, b| natural_cmp(a, b));
        let before = names.len();
        names.dedup();
        if names.len() != before {
            violations.push(Violation::new("duplicate vertex", "vertex declared twice"));
        }
        let mut edges = edges;
        edges.sort_by(|a, b| natural_cmp(&a.0, &b.0));
        let edge_ids: Vec<String> = edges.iter().map(|e| e.0.clone()).collect();
        if edge_ids.windows(2).any(|w| w[0] == w[1]) {
            violations.push(Violation::new("duplicate edge", "edge id declared twice"));
        }
        let vindex: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let eindex: HashMap<&str, usize> = edge_ids
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut endpoint_pairs = Vec::new();
        for (id, u, v) in &edges {
            match (vindex.get(u.as_str()), vindex.get(v.as_str())) {
                (Some(&a), Some(&b)) => endpoint_pairs.push((a, b)),
                _ => violations.push(Violation::new(
                    "undeclared vertex",
                    format!("edge {id} uses an undeclared endpoint"),
                )),
            }
        }
        if !violations.is_empty() {
            return Err(DiagramError::Validation(violations));
        }
        let graph = Graph::new(names.clone(), &endpoint_pairs).map_err(|e: GraphError| {
            DiagramError::Validation(vec![Violation::new("bad edge", e.to_string())])
        })?;

        let mut dart_violations = Vec::new();
        let mut dart = |(e, i): &(String, usize)| -> Option<Dart> {
            match eindex.get(e.as_str()) {
                Some(&edge) => Some(Dart { edge, index: *i }),
                None => {
                    dart_violations.push(Violation::new(
                        "undeclared dart",
                        format!("{e}.{i} refers to an unknown edge"),
                    ));
                    None
                }
            }
        };

        let mut rot = vec![Vec::new(); names.len()];
        for (vname, darts) in &rotations {
            let resolved: Vec<Dart> = darts.iter().filter_map(&mut dart).collect();
            match vindex.get(vname.as_str()) {
                Some(&v) => rot[v] = resolved,
                None => violations.push(Violation::new(
                    "undeclared vertex",
                    format!("rotation for unknown vertex {vname}"),
                )),
            }
        }
        let mut crossing_list = Vec::new();
        for (id, ds) in &crossings {
            let resolved: Vec<Dart> = ds.iter().filter_map(&mut dart).collect();
            if let Ok(darts) = <[Dart; 4]>::try_from(resolved) {
                crossing_list.push(CrossingRecord {
                    id: id.clone(),
                    darts,
                });
            }
        }
        crossing_list.sort_by(|a, b| natural_cmp(&a.id, &b.id));
        let mut arc_list = Vec::new();
        let mut mismatched = Vec::new();
        for (a, b, on) in &arcs {
            if let (Some(da), Some(db)) = (dart(a), dart(b)) {
                if eindex.get(on.as_str()) != Some(&da.edge) || da.edge != db.edge {
                    mismatched.push(Violation::new(
                        "arc mismatch",
                        format!("arc {}.{} -- {}.{} is not on edge {on}", a.0, a.1, b.0, b.1),
                    ));
                }
                arc_list.push((da.min(db), da.max(db)));
            }
        }
        arc_list.sort();
        violations.append(&mut dart_violations);
        violations.append(&mut mismatched);
        let mut deco_map: BTreeMap<usize, Vec<Decoration>> = BTreeMap::new();
        for (e, d) in decorations {
            match eindex.get(e.as_str()) {
                Some(&edge) => deco_map.entry(edge).or_default().push(d),
                None => violations.push(Violation::new(
                    "undeclared edge",
                    format!("decoration on unknown edge {e}"),
                )),
            }
        }
        if !violations.is_empty() {
            return Err(DiagramError::Validation(violations));
        }
        let diagram = SpatialDiagram {
            graph,
            edge_ids,
            rotations: rot,
            crossings: crossing_list,
            arcs: arc_list,
            decorations: deco_map,
        };
        diagram.validate().map_err(DiagramError::Validation)?;
        Ok(diagram)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edge_ids[e]
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edge_ids.iter().position(|x| x == id)
    }

    pub fn crossings(&self) -> &[CrossingRecord] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn arcs(&self) -> &[(Dart, Dart)] {
        &self.arcs
    }

    pub fn decorations(&self) -> &BTreeMap<usize, Vec<Decoration>> {
        &self.decorations
    }

    pub fn decorations_on(&self, edge: usize) -> &[Decoration] {
        self.decorations.get(&edge).map_or(&[], Vec::as_slice)
    }

    /// Copy with one more decoration on `edge`.
    pub fn with_decoration(&self, edge: usize, deco: Decoration) -> SpatialDiagram {
        let mut out = self.clone();
        out.decorations.entry(edge).or_default().push(deco);
        out
    }

    fn dart_token(&self, d: Dart) -> String {
        format!("{}.{}", self.edge_ids[d.edge], d.index)
    }

    fn incidence(&self) -> Incidence {
        let mut node_of = HashMap::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for (p, &d) in rot.iter().enumerate() {
                node_of.insert(d, (Node::Vertex(v), p));
            }
        }
        for (c, x) in self.crossings.iter().enumerate() {
            for (p, &d) in x.darts.iter().enumerate() {
                node_of.insert(d, (Node::Crossing(c), p));
            }
        }
        let mut last = vec![0usize; self.edge_ids.len()];
        for d in node_of.keys() {
            last[d.edge] = last[d.edge].max(d.index);
        }
        Incidence { node_of, last }
    }

    /// Checks every structural invariant; returns all violations found.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        let mut seen: HashMap<Dart, usize> = HashMap::new();
        for d in self
            .rotations
            .iter()
            .flatten()
            .chain(self.crossings.iter().flat_map(|x| x.darts.iter()))
        {
            *seen.entry(*d).or_insert(0) += 1;
        }
        for (d, n) in &seen {
            if *n > 1 {
                v.push(Violation::new("dart reuse", self.dart_token(*d)));
            }
        }
        let inc = self.incidence();
        for (e, &(a, b)) in self.graph.edges().iter().enumerate() {
            let last = inc.last[e];
            let id = &self.edge_ids[e];
            if last.is_multiple_of(2) {
                v.push(Violation::new(
                    "edge chain",
                    format!("edge {id} has an odd number of darts"),
                ));
                continue;
            }
            for i in 0..=last {
                if !seen.contains_key(&Dart { edge: e, index: i }) {
                    v.push(Violation::new("missing dart", format!("{id}.{i}")));
                }
            }
            let at = |i: usize| inc.node_of.get(&Dart { edge: e, index: i }).map(|x| x.0);
            if at(0) != Some(Node::Vertex(a)) {
                v.push(Violation::new(
                    "edge chain",
                    format!("{id}.0 is not at vertex {}", self.graph.name(a)),
                ));
            }
            if at(last) != Some(Node::Vertex(b)) {
                v.push(Violation::new(
                    "edge chain",
                    format!("{id}.{last} is not at vertex {}", self.graph.name(b)),
                ));
            }
            for i in (1..last).step_by(2) {
                let (p, q) = (
                    inc.node_of.get(&Dart { edge: e, index: i }),
                    inc.node_of.get(&Dart {
                        edge: e,
                        index: i + 1,
                    }),
                );
                let ok = match (p, q) {
                    (Some(&(Node::Crossing(c1), p1)), Some(&(Node::Crossing(c2), p2))) => {
                        c1 == c2 && (p1 + 2) % 4 == p2 && (p1 != 2)
                    }
                    _ => false,
                };
                if !ok {
                    v.push(Violation::new(
                        "edge chain",
                        format!("{id}.{i} and {id}.{} are not a straight passage", i + 1),
                    ));
                }
            }
        }
        for (vtx, rot) in self.rotations.iter().enumerate() {
            let expected: BTreeSet<Dart> = self
                .graph
                .edges()
                .iter()
                .enumerate()
                .flat_map(|(e, &(a, b))| {
                    let mut ds = Vec::new();
                    if a == vtx {
                        ds.push(Dart { edge: e, index: 0 });
                    }
                    if b == vtx {
                        ds.push(Dart {
                            edge: e,
                            index: inc.last[e],
                        });
                    }
                    ds
                })
                .collect();
            let actual: BTreeSet<Dart> = rot.iter().copied().collect();
            if expected != actual {
                v.push(Violation::new(
                    "vertex rotation",
                    format!(
                        "vertex {} does not list exactly its edge ends",
                        self.graph.name(vtx)
                    ),
                ));
            }
        }
        let expected_arcs: BTreeSet<(Dart, Dart)> = (0..self.edge_ids.len())
            .flat_map(|e| {
                (0..=inc.last[e]).step_by(2).map(move |i| {
                    (
                        Dart { edge: e, index: i },
                        Dart {
                            edge: e,
                            index: i + 1,
                        },
                    )
                })
            })
            .collect();
        let actual_arcs: BTreeSet<(Dart, Dart)> = self.arcs.iter().copied().collect();
        if expected_arcs != actual_arcs || actual_arcs.len() != self.arcs.len() {
            v.push(Violation::new(
                "arc mismatch",
                "arcs must join e.(2i) with e.(2i+1) along every edge",
            ));
        }
        if v.is_empty() {
            let (nodes, faces, components) = self.map_counts(&inc);
            let edges = self.arcs.len() as i64;
            if nodes - edges + faces != 1 + components {
                v.push(Violation::new(
                    "non-planar map",
                    format!(
                        "V - E + F = {} with {components} component(s)",
                        nodes - edges + faces
                    ),
                ));
            }
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    // (nodes, faces, connected components) of the projection map.
    fn map_counts(&self, inc: &Incidence) -> (i64, i64, i64) {
        let darts: Vec<Dart> = inc.node_of.keys().copied().collect();
        let twin = |d: Dart| Dart {
            edge: d.edge,
            index: d.index ^ 1,
        };
        let next_ccw = |d: Dart| -> Dart {
            let (node, p) = inc.node_of[&d];
            match node {
                Node::Vertex(v) => {
                    let r = &self.rotations[v];
                    r[(p + 1) % r.len()]
                }
                Node::Crossing(c) => self.crossings[c].darts[(p + 1) % 4],
            }
        };
        let mut visited: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = 0;
        for &d in &darts {
            if visited.contains(&d) {
                continue;
            }
            faces += 1;
            let mut h = d;
            while visited.insert(h) {
                h = next_ccw(twin(h));
            }
        }
        let node_count =
            self.rotations.iter().filter(|r| !r.is_empty()).count() + self.crossings.len();
        // Components via union-find over nodes.
        let node_id = |n: Node| match n {
            Node::Vertex(v) => v,
            Node::Crossing(c) => self.rotations.len() + c,
        };
        let total = self.rotations.len() + self.crossings.len();
        let mut parent: Vec<usize> = (0..total).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.arcs {
            if let (Some(&(na, _)), Some(&(nb, _))) = (inc.node_of.get(&a), inc.node_of.get(&b)) {
                let (ra, rb) = (
                    root(&mut parent, node_id(na)),
                    root(&mut parent, node_id(nb)),
                );
                parent[ra] = rb;
            }
        }
        let mut roots = BTreeSet::new();
        for (v, r) in self.rotations.iter().enumerate() {
            if !r.is_empty() {
                roots.insert(root(&mut parent, v));
            }
        }
        for c in 0..self.crossings.len() {
            roots.insert(root(&mut parent, self.rotations.len() + c));
        }
        (node_count as i64, faces, roots.len() as i64)
    }

    /// Bit-exact text form: records sorted by id, single spaces, `\n` endings.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for name in self.graph.names() {
            out.push_str(&format!("graph v {name}\n"));
        }
        for (e, &(a, b)) in self.graph.edges().iter().enumerate() {
            out.push_str(&format!(
                "graph e {} {} {}\n",
                self.edge_ids[e],
                self.graph.name(a),
                self.graph.name(b)
            ));
        }
        for (v, rot) in self.rotations.iter().enumerate() {
            let ds: Vec<String> = rot.iter().map(|&d| self.dart_token(d)).collect();
            out.push_str(&format!(
                "vertex {} : {}\n",
                self.graph.name(v),
                ds.join(" ")
            ));
        }
        for x in &self.crossings {
            let ds: Vec<String> = x.darts.iter().map(|&d| self.dart_token(d)).collect();
            out.push_str(&format!("crossing {} : {}\n", x.id, ds.join(" ")));
        }
        for &(a, b) in &self.arcs {
            out.push_str(&format!(
                "arc {} -- {} on {}\n",
                self.dart_token(a),
                self.dart_token(b),
                self.edge_ids[a.edge]
            ));
        }
        for (&e, decos) in &self.decorations {
            for d in decos {
                out.push_str(&format!(
                    "decorate {} knot {} dir {} sign {}\n",
                    self.edge_ids[e],
                    d.knot,
                    d.direction.token(),
                    d.sign
                ));
            }
        }
        out
    }

    /// Wraps a knot diagram as a triangle graph `p q r` whose edge `rp`
    /// carries every crossing.
    pub fn from_knot(kd: &KnotDiagram) -> SpatialDiagram {
        let m = 2 * kd.crossing_count();
        let names = vec!["p".to_string(), "q".to_string(), "r".to_string()];
        let edges = vec![
            ("pq".to_string(), "p".to_string(), "q".to_string()),
            ("qr".to_string(), "q".to_string(), "r".to_string()),
            ("rp".to_string(), "r".to_string(), "p".to_string()),
        ];
        let last = 2 * m + 1;
        let mut rotations = BTreeMap::new();
        rotations.insert(
            "p".to_string(),
            vec![("rp".to_string(), last), ("pq".to_string(), 0)],
        );
        rotations.insert(
            "q".to_string(),
            vec![("pq".to_string(), 1), ("qr".to_string(), 0)],
        );
        rotations.insert(
            "r".to_string(),
            vec![("qr".to_string(), 1), ("rp".to_string(), 0)],
        );
        // Passage k leads from arc k-1 into arc k.
        let dart_for = |label: usize, enters: bool| -> (String, usize) {
            if enters {
                ("rp".to_string(), 2 * ((label + 1) % m) + 1)
            } else {
                ("rp".to_string(), 2 * label + 2)
            }
        };
        let crossings = kd
            .crossings()
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let darts: [(String, usize); 4] =
                    std::array::from_fn(|p| dart_for(x.arcs[p], x.enters(p)));
                (format!("x{}", i + 1), darts)
            })
            .collect();
        let mut arcs = vec![
            (
                ("pq".to_string(), 0),
                ("pq".to_string(), 1),
                "pq".to_string(),
            ),
            (
                ("qr".to_string(), 0),
                ("qr".to_string(), 1),
                "qr".to_string(),
            ),
        ];
        for i in (0..=last).step_by(2) {
            arcs.push((
                ("rp".to_string(), i),
                ("rp".to_string(), i + 1),
                "rp".to_string(),
            ));
        }
        SpatialDiagram::new(names, edges, rotations, crossings, arcs, Vec::new())
            .expect("a valid knot diagram wraps to a valid embedding")
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> DiagramError {
    DiagramError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses and validates an embedding file.
pub fn parse_embedding(text: &str) -> Result<SpatialDiagram, DiagramError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut rotations: BTreeMap<String, Vec<(String, usize)>> = BTreeMap::new();
    let mut crossings = Vec::new();
    let mut arcs = Vec::new();
    let mut decorations = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        // Tokens with their 1-based columns.
        let mut tokens: Vec<(usize, &str)> = Vec::new();
        let mut start = None;
        for (i, ch) in content.char_indices() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    tokens.push((s + 1, &content[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            tokens.push((s + 1, &content[s..]));
        }
        if tokens.is_empty() {
            continue;
        }
        let col_end = content.trim_end().len() + 1;
        let tok = |i: usize| tokens.get(i).map(|t| t.1);
        let col = |i: usize| tokens.get(i).map_or(col_end, |t| t.0);
        let parse_dart = |i: usize| -> Result<(String, usize), DiagramError> {
            let t = tok(i).ok_or_else(|| syntax(line, col(i), "expected a dart"))?;
            let (e, n) = t
                .rsplit_once('.')
                .ok_or_else(|| syntax(line, col(i), format!("dart `{t}` must be <edge-id>.<n>")))?;
            let n: usize = n
                .parse()
                .map_err(|_| syntax(line, col(i), format!("dart `{t}` has a bad index")))?;
            if e.is_empty() {
                return Err(syntax(
                    line,
                    col(i),
                    format!("dart `{t}` has an empty edge id"),
                ));
            }
            Ok((e.to_string(), n))
        };
        let expect = |i: usize, word: &str| -> Result<(), DiagramError> {
            if tok(i) == Some(word) {
                Ok(())
            } else {
                Err(syntax(line, col(i), format!("expected `{word}`")))
            }
        };
        let name_at = |i: usize, what: &str| -> Result<String, DiagramError> {
            match tok(i) {
                Some(t) if !t.contains('.') && t != ":" => Ok(t.to_string()),
                _ => Err(syntax(line, col(i), format!("expected {what}"))),
            }
        };
        let no_more = |n: usize| -> Result<(), DiagramError> {
            if tokens.len() > n {
                Err(syntax(line, col(n), "unexpected trailing input"))
            } else {
                Ok(())
            }
        };

        match tok(0).unwrap() {
            "graph" => match tok(1) {
                Some("v") => {
                    if tokens.len() < 3 {
                        return Err(syntax(line, col(2), "expected a vertex name"));
                    }
                    for i in 2..tokens.len() {
                        vertices.push(name_at(i, "a vertex name")?);
                    }
                }
                Some("e") => {
                    let id = name_at(2, "an edge id")?;
                    let u = name_at(3, "an endpoint")?;
                    let v = name_at(4, "an endpoint")?;
                    no_more(5)?;
                    edges.push((id, u, v));
                }
                _ => return Err(syntax(line, col(1), "expected `v` or `e`")),
            },
            "vertex" => {
                let name = name_at(1, "a vertex name")?;
                expect(2, ":")?;
                let darts = (3..tokens.len())
                    .map(parse_dart)
                    .collect::<Result<Vec<_>, _>>()?;
                if rotations.insert(name, darts).is_some() {
                    return Err(syntax(line, col(1), "vertex rotation given twice"));
                }
            }
            "crossing" => {
                let id = name_at(1, "a crossing id")?;
                expect(2, ":")?;
                let darts = [
                    parse_dart(3)?,
                    parse_dart(4)?,
                    parse_dart(5)?,
                    parse_dart(6)?,
                ];
                no_more(7)?;
                crossings.push((id, darts));
            }
            "arc" => {
                let a = parse_dart(1)?;
                expect(2, "--")?;
                let b = parse_dart(3)?;
                expect(4, "on")?;
                let on = name_at(5, "an edge id")?;
                no_more(6)?;
                arcs.push((a, b, on));
            }
            "decorate" => {
                let edge = name_at(1, "an edge id")?;
                expect(2, "knot")?;
                let knot = tok(3)
                    .and_then(KnotName::parse)
                    .ok_or_else(|| syntax(line, col(3), "unknown knot name"))?;
                expect(4, "dir")?;
                let direction = match tok(5) {
                    Some("fwd") => Direction::Forward,
                    Some("bwd") => Direction::Backward,
                    _ => return Err(syntax(line, col(5), "expected `fwd` or `bwd`")),
                };
                expect(6, "sign")?;
                let sign = tok(7)
                    .and_then(Sign::parse)
                    .ok_or_else(|| syntax(line, col(7), "expected `+` or `-`"))?;
                no_more(8)?;
                decorations.push((edge, Decoration::new(knot, direction, sign)));
            }
            other => return Err(syntax(line, col(0), format!("unknown record `{other}`"))),
        }
    }
    SpatialDiagram::new(vertices, edges, rotations, crossings, arcs, decorations)
}

/// One step of a cycle traversal: the edge and whether it runs along its stored order.
fn cycle_edges(
    diagram: &SpatialDiagram,
    cycle: &Cycle,
) -> Result<Vec<(usize, bool)>, DiagramError> {
    let g = diagram.graph();
    cycle
        .steps()
        .map(|(u, v)| {
            let e = g.edge_index(u, v).ok_or(DiagramError::NotACycle)?;
            Ok((e, g.edges()[e].0 == u))
        })
        .collect()
}

/// The knot diagram traced by a cycle. Crossings between the cycle and other
/// edges are dropped by deleting the other strand.
pub fn cycle_diagram(diagram: &SpatialDiagram, cycle: &Cycle) -> Result<KnotDiagram, DiagramError> {
    let g = diagram.graph();
    if cycle.vertices().iter().any(|&v| v >= g.vertex_count())
        || Cycle::in_graph(g, cycle.vertices()).is_none()
    {
        return Err(DiagramError::NotACycle);
    }
    let steps = cycle_edges(diagram, cycle)?;
    let on_cycle: BTreeSet<usize> = steps.iter().map(|s| s.0).collect();
    let inc = diagram.incidence();
    let kept = |c: usize| {
        diagram.crossings[c]
            .darts
            .iter()
            .all(|d| on_cycle.contains(&d.edge))
    };

    // (dart, label, enters) for every dart at a kept crossing.
    let mut labels: HashMap<Dart, (usize, bool)> = HashMap::new();
    let mut label = 0usize;
    for &(e, forward) in &steps {
        let last = inc.last[e];
        let seq: Vec<usize> = if forward {
            (0..=last).collect()
        } else {
            (0..=last).rev().collect()
        };
        for k in (1..last).step_by(2) {
            let din = Dart {
                edge: e,
                index: seq[k],
            };
            let dout = Dart {
                edge: e,
                index: seq[k + 1],
            };
            let Node::Crossing(c) = inc.node_of[&din].0 else {
                unreachable!("validated passages sit at crossings")
            };
            if kept(c) {
                labels.insert(din, (label, true));
                label += 1;
                labels.insert(dout, (label, false));
            }
        }
    }
    let total = label;
    if total == 0 {
        return Ok(KnotDiagram::unknot());
    }
    let mut crossings = Vec::new();
    for (c, x) in diagram.crossings.iter().enumerate() {
        if !kept(c) {
            continue;
        }
        let info: Vec<(usize, bool)> = x.darts.iter().map(|d| labels[d]).collect();
        let order = if info[0].1 {
            [0, 1, 2, 3]
        } else {
            [2, 3, 0, 1]
        };
        crossings.push(PdCrossing {
            arcs: order.map(|p| info[p].0 % total),
            over_forward: info[order[1]].1,
        });
    }
    Ok(KnotDiagram::new(crossings)?)
}

/// Linking number of two disjoint cycles, each oriented by its canonical sequence.
pub fn linking_number(diagram: &SpatialDiagram, a: &Cycle, b: &Cycle) -> Result<i64, DiagramError> {
    if !a.vertex_set().is_disjoint(&b.vertex_set()) {
        return Err(DiagramError::NotDisjoint);
    }
    let orient = |c: &Cycle| -> Result<HashMap<usize, i64>, DiagramError> {
        Ok(cycle_edges(diagram, c)?
            .into_iter()
            .map(|(e, fwd)| (e, if fwd { 1 } else { -1 }))
            .collect())
    };
    let (oa, ob) = (orient(a)?, orient(b)?);
    let mut total = 0i64;
    for x in &diagram.crossings {
        let under = x.darts[0].edge;
        let over = x.darts[1].edge;
        let (du, dov) = match (oa.get(&under), ob.get(&over), ob.get(&under), oa.get(&over)) {
            (Some(&u), Some(&o), _, _) => (u, o),
            (_, _, Some(&u), Some(&o)) => (u, o),
            _ => continue,
        };
        // Over-strand runs 1 -> 3 in stored order when dart 1 has the smaller index.
        let over_forward = x.darts[1].index < x.darts[3].index;
        let base = if over_forward { -1 } else { 1 };
        total += base * du * dov;
    }
    debug_assert!(
        total % 2 == 0,
        "two closed curves cross an even number of times"
    );
    Ok(total / 2)
}

/// The knot of a single-cycle embedding (with decorations ignored).
pub fn knot_from_embedding(diagram: &SpatialDiagram) -> Result<KnotDiagram, DiagramError> {
    let g = diagram.graph();
    if (0..g.vertex_count()).any(|v| g.degree(v) != 2) {
        return Err(DiagramError::NotAKnot);
    }
    let cycles = enumerate_cycles(g);
    let all: Vec<&Cycle> = cycles.values().flatten().collect();
    match all.as_slice() {
        [c] if c.len() == g.vertex_count() => cycle_diagram(diagram, c),
        _ => Err(DiagramError::NotAKnot),
    }
}

/// A combinatorial symmetry of the projection, with the signed graph
/// automorphism it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSymmetry {
    pub signed: SignedAutomorphism,
    /// Preserves the counterclockwise order at every node.
    pub orientation_preserving: bool,
    /// Maps under-strands to under-strands.
    pub crossings_preserved: bool,
    /// For each stored edge: its image and whether the endpoint order flips.
    pub edge_map: Vec<(usize, bool)>,
}

/// All symmetries of the projection map that respect crossings and
/// decorations. Planar rotations and turning the page over have sign `+`;
/// reflections in a vertical plane or in the page have sign `-`.
pub fn diagram_symmetries(diagram: &SpatialDiagram) -> Vec<DiagramSymmetry> {
    let inc = diagram.incidence();
    let darts: Vec<Dart> = {
        let mut ds: Vec<Dart> = inc.node_of.keys().copied().collect();
        ds.sort();
        ds
    };
    if darts.is_empty() {
        return vec![];
    }
    let index: HashMap<Dart, usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let twin: Vec<usize> = darts
        .iter()
        .map(|d| {
            index[&Dart {
                edge: d.edge,
                index: d.index ^ 1,
            }]
        })
        .collect();
    let node_size = |n: Node| match n {
        Node::Vertex(v) => diagram.rotations[v].len(),
        Node::Crossing(_) => 4,
    };
    let rotate = |d: usize, step: isize| -> usize {
        let (node, p) = inc.node_of[&darts[d]];
        let size = node_size(node) as isize;
        let q = (p as isize + step).rem_euclid(size) as usize;
        match node {
            Node::Vertex(v) => index[&diagram.rotations[v][q]],
            Node::Crossing(c) => index[&diagram.crossings[c].darts[q]],
        }
    };
    let kind = |d: usize| match inc.node_of[&darts[d]].0 {
        Node::Vertex(v) => (0, diagram.rotations[v].len()),
        Node::Crossing(_) => (1, 4),
    };

    let g = diagram.graph();
    let mut out: Vec<DiagramSymmetry> = Vec::new();
    let mut seen: BTreeSet<SignedAutomorphism> = BTreeSet::new();
    let seed = 0usize;
    for target in 0..darts.len() {
        if kind(target) != kind(seed) {
            continue;
        }
        for &step in &[1isize, -1] {
            let Some(map) = propagate(seed, target, step, darts.len(), &twin, &rotate, &kind)
            else {
                continue;
            };
            // Crossing type: even position shift keeps the under-strand under.
            let mut parities = BTreeSet::new();
            for x in &diagram.crossings {
                let d0 = index[&x.darts[0]];
                let (_, p) = inc.node_of[&darts[map[d0]]];
                parities.insert(p % 2 == 0);
            }
            if parities.len() > 1 {
                continue;
            }
            let crossings_preserved = parities.into_iter().next().unwrap_or(true);
            let orientation_preserving = step == 1;
            let sign = if orientation_preserving == crossings_preserved {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let mut images = vec![usize::MAX; g.vertex_count()];
            for (v, rot) in diagram.rotations.iter().enumerate() {
                if let Some(d) = rot.first() {
                    if let Node::Vertex(w) = inc.node_of[&darts[map[index[d]]]].0 {
                        images[v] = w;
                    }
                }
            }
            let Ok(perm) = Perm::from_images(images) else {
                continue;
            };
            if !g.is_automorphism(&perm) {
                continue;
            }
            let edge_map: Vec<(usize, bool)> = (0..diagram.edge_ids.len())
                .map(|e| {
                    let img = darts[map[index[&Dart { edge: e, index: 0 }]]];
                    (img.edge, img.index != 0)
                })
                .collect();
            let respects_decorations = edge_map.iter().enumerate().all(|(e, &(f, flip))| {
                let moved: Vec<Decoration> = diagram
                    .decorations_on(e)
                    .iter()
                    .map(|d| d.transport(flip, sign))
                    .collect();
                canonical_decorations(&moved) == canonical_decorations(diagram.decorations_on(f))
            });
            if !respects_decorations {
                continue;
            }
            let signed = SignedAutomorphism::new(perm, sign);
            if seen.insert(signed.clone()) {
                out.push(DiagramSymmetry {
                    signed,
                    orientation_preserving,
                    crossings_preserved,
                    edge_map,
                });
            }
        }
    }
    out.sort_by(|a, b| a.signed.cmp(&b.signed));
    out
}

// Extends seed -> target to a dart bijection commuting with the arc involution
// and with the rotation (step = 1) or its inverse (step = -1).
fn propagate(
    seed: usize,
    target: usize,
    step: isize,
    n: usize,
    twin: &[usize],
    rotate: &dyn Fn(usize, isize) -> usize,
    kind: &dyn Fn(usize) -> (u8, usize),
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut stack = vec![(seed, target)];
    while let Some((d, t)) = stack.pop() {
        if map[d] != usize::MAX {
            if map[d] != t {
                return None;
            }
            continue;
        }
        if used[t] || kind(d) != kind(t) {
            return None;
        }
        map[d] = t;
        used[t] = true;
        stack.push((twin[d], twin[t]));
        stack.push((rotate(d, 1), rotate(t, step)));
    }
    map.iter().all(|&m| m != usize::MAX).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PENTAGON: &str = "\
graph v 1
graph v 2
graph v 3
graph v 4
graph v 5
graph e 12 1 2
graph e 23 2 3
graph e 34 3 4
graph e 45 4 5
graph e 51 5 1
vertex 1 : 12.0 51.1
vertex 2 : 23.0 12.1
vertex 3 : 34.0 23.1
vertex 4 : 45.0 34.1
vertex 5 : 51.0 45.1
arc 12.0 -- 12.1 on 12
arc 23.0 -- 23.1 on 23
arc 34.0 -- 34.1 on 34
arc 45.0 -- 45.1 on 45
arc 51.0 -- 51.1 on 51
";

    #[test]
    fn natural_order() {
        assert_eq!(natural_cmp("x2", "x10"), Ordering::Less);
        assert_eq!(natural_cmp("1a", "12"), Ordering::Less);
        assert_eq!(natural_cmp("ab", "ab"), Ordering::Equal);
    }

    #[test]
    fn crossing_free_pentagon() {
        let d = parse_embedding(PENTAGON).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.serialize(), PENTAGON);
        let kd = knot_from_embedding(&d).unwrap();
        assert_eq!(kd.crossing_count(), 0);
    }

    #[test]
    fn undeclared_dart() {
        let text = PENTAGON.replace("vertex 5 : 51.0 45.1", "vertex 5 : 51.0 99.1");
        match parse_embedding(&text) {
            Err(DiagramError::Validation(v)) => {
                assert!(v.iter().any(|x| x.kind == "undeclared dart"))
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn dart_used_twice() {
        let text = PENTAGON.replace("vertex 5 : 51.0 45.1", "vertex 5 : 51.0 45.1 12.0");
        match parse_embedding(&text) {
            Err(DiagramError::Validation(v)) => assert!(v.iter().any(|x| x.kind == "dart reuse")),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_embedding("graph v 1\ncrossing x1 : a.1 b.1\n").unwrap_err();
        assert_eq!(
            err,
            DiagramError::Syntax {
                line: 2,
                column: 22,
                message: "expected a dart".into()
            }
        );
        assert!(matches!(
            parse_embedding("bogus\n"),
            Err(DiagramError::Syntax {
                line: 1,
                column: 1,
                ..
            })
        ));
    }

    #[test]
    fn decoration_canonical_forms() {
        let fwd = Decoration::new(KnotName::K8_17, Direction::Forward, Sign::Plus);
        let bwd_minus = Decoration::new(KnotName::K8_17, Direction::Backward, Sign::Minus);
        let bwd_plus = Decoration::new(KnotName::K8_17, Direction::Backward, Sign::Plus);
        assert_eq!(fwd.canonical(), bwd_minus.canonical());
        assert_ne!(fwd.canonical(), bwd_plus.canonical());
        let fig8 = Decoration::new(KnotName::K4_1, Direction::Backward, Sign::Minus);
        assert_eq!(
            fig8.canonical(),
            Decoration::new(KnotName::K4_1, Direction::Forward, Sign::Plus)
        );
    }

    #[test]
    fn knot_wrapping_round_trips() {
        let kd = KnotDiagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        let emb = SpatialDiagram::from_knot(&kd);
        let back = knot_from_embedding(&parse_embedding(&emb.serialize()).unwrap()).unwrap();
        assert_eq!(back.writhe(), 3);
        assert_eq!(
            crate::knot::jones(&back).unwrap(),
            crate::knot::jones(&kd).unwrap()
        );
    }
}
