//! The built-in knot table: bundled standard diagrams plus symmetry flags.
//!
//! Invariants are not stored; they are recomputed from the bundled diagrams the
//! first time the table is used.

use std::fmt;
use std::sync::OnceLock;

use crate::diagram::{knot_from_embedding, parse_embedding};
use crate::group::Sign;
use crate::knot::{Invariants, KnotDiagram, KnotError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotName {
    Unknot,
    K3_1,
    K4_1,
    K5_1,
    K8_17,
}

impl KnotName {
    pub const ALL: [KnotName; 5] = [
        KnotName::Unknot,
        KnotName::K3_1,
        KnotName::K4_1,
        KnotName::K5_1,
        KnotName::K8_17,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            KnotName::Unknot => "unknot",
            KnotName::K3_1 => "3_1",
            KnotName::K4_1 => "4_1",
            KnotName::K5_1 => "5_1",
            KnotName::K8_17 => "8_17",
        }
    }

    pub fn parse(s: &str) -> Option<KnotName> {
        KnotName::ALL.iter().copied().find(|k| k.as_str() == s)
    }

    pub fn entry(self) -> &'static KnotTableEntry {
        knot_table()
            .entries
            .iter()
            .find(|e| e.name == self)
            .expect("every name has a table entry")
    }

    pub fn symmetry(self) -> SymmetrySet {
        self.entry().symmetry
    }
}

impl fmt::Display for KnotName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which of mirror, reverse and mirror∘reverse carry the knot to itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymmetrySet {
    pub mirror: bool,
    pub reverse: bool,
    pub mirror_reverse: bool,
}

impl SymmetrySet {
    pub const NONE: SymmetrySet = SymmetrySet {
        mirror: false,
        reverse: false,
        mirror_reverse: false,
    };
    pub const ALL: SymmetrySet = SymmetrySet {
        mirror: true,
        reverse: true,
        mirror_reverse: true,
    };

    /// A subset of the Klein group is a subgroup iff it is not exactly two of the three.
    pub fn is_subgroup(&self) -> bool {
        let count = [self.mirror, self.reverse, self.mirror_reverse]
            .iter()
            .filter(|&&b| b)
            .count();
        count != 2
    }

    /// Whether applying (mirror, reverse) is a symmetry.
    pub fn contains(&self, mirror: bool, reverse: bool) -> bool {
        match (mirror, reverse) {
            (false, false) => true,
            (true, false) => self.mirror,
            (false, true) => self.reverse,
            (true, true) => self.mirror_reverse,
        }
    }

    /// Oriented, chirality-signed classes collapse to a sign when at least one
    /// of the three symmetries is present.
    pub fn flips_sign(&self, mirror: bool, reverse: bool) -> bool {
        !self.contains(mirror, reverse)
    }
}

#[derive(Clone, Debug)]
pub struct KnotTableEntry {
    pub name: KnotName,
    /// Diagram of the `+` chirality representative.
    pub diagram: KnotDiagram,
    pub invariants: Invariants,
    pub symmetry: SymmetrySet,
    pub external_flags: bool,
}

impl KnotTableEntry {
    /// Invariants of the `+` or `-` chirality.
    pub fn invariants_for(&self, sign: Sign) -> Invariants {
        match sign {
            Sign::Plus => self.invariants.clone(),
            Sign::Minus => self.invariants.mirror(),
        }
    }

    /// Whether the two chiralities are distinguished by the Jones polynomial.
    pub fn jones_chiral(&self) -> bool {
        !self.invariants.jones.is_palindromic()
    }
}

#[derive(Clone, Debug)]
pub struct KnotTable {
    pub entries: Vec<KnotTableEntry>,
}

const SIDECAR: &str = include_str!("../data/knots/table.txt");
const DIAGRAMS: [(&str, &str); 5] = [
    ("unknot", include_str!("../data/knots/unknot.emb")),
    ("3_1", include_str!("../data/knots/3_1.emb")),
    ("4_1", include_str!("../data/knots/4_1.emb")),
    ("5_1", include_str!("../data/knots/5_1.emb")),
    ("8_17", include_str!("../data/knots/8_17.emb")),
];

/// Parses sidecar lines of the form
/// `knot <name> symmetry <m|r|mr|none>[,...] invertible <yes|no> [external]`.
pub fn parse_symmetry_sidecar(text: &str) -> Result<Vec<(KnotName, SymmetrySet, bool)>, String> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| format!("line {}: {msg}", lineno + 1);
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() < 6 || tok[0] != "knot" || tok[2] != "symmetry" || tok[4] != "invertible" {
            return Err(err(
                "expected `knot <name> symmetry <set> invertible <yes|no>`",
            ));
        }
        let name = KnotName::parse(tok[1]).ok_or_else(|| err("unknown knot"))?;
        let mut set = SymmetrySet::NONE;
        for part in tok[3].split(',') {
            match part {
                "m" => set.mirror = true,
                "r" => set.reverse = true,
                "mr" => set.mirror_reverse = true,
                "all" => set = SymmetrySet::ALL,
                "none" => {}
                _ => return Err(err("bad symmetry flag")),
            }
        }
        let invertible = match tok[5] {
            "yes" => true,
            "no" => false,
            _ => return Err(err("invertible must be yes or no")),
        };
        if invertible != set.reverse {
            return Err(err("invertible flag disagrees with symmetry set"));
        }
        if !set.is_subgroup() {
            return Err(err("symmetry set is not a subgroup"));
        }
        let external = tok.get(6) == Some(&"external");
        out.push((name, set, external));
    }
    Ok(out)
}

fn load_table() -> Result<KnotTable, String> {
    let flags = parse_symmetry_sidecar(SIDECAR)?;
    let mut entries = Vec::new();
    for (name_str, text) in DIAGRAMS {
        let name = KnotName::parse(name_str).ok_or("bad bundled name")?;
        let diagram = parse_embedding(text).map_err(|e| format!("{name_str}: {e}"))?;
        let kd = knot_from_embedding(&diagram).map_err(|e| format!("{name_str}: {e}"))?;
        let invariants = Invariants::of(&kd).map_err(|e: KnotError| e.to_string())?;
        let (_, symmetry, external) = flags
            .iter()
            .find(|(n, _, _)| *n == name)
            .copied()
            .ok_or_else(|| format!("no symmetry flags for {name_str}"))?;
        entries.push(KnotTableEntry {
            name,
            diagram: kd,
            invariants,
            symmetry,
            external_flags: external,
        });
    }
    Ok(KnotTable { entries })
}

pub fn knot_table() -> &'static KnotTable {
    static TABLE: OnceLock<KnotTable> = OnceLock::new();
    TABLE.get_or_init(|| load_table().expect("bundled knot table is valid"))
}
