//! The seven reference embeddings with their expected symmetry groups.
//!
//! Base entries are projections of the spatial models in [`construct`];
//! decorated entries are derived from their base entry by adding knots to
//! edges. Files live in the workspace `corpus/` directory and are also
//! bundled into the library.

pub mod construct;

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::diagram::{parse_embedding, Decoration, Direction, SpatialDiagram};
use crate::geometry::{GeometryError, Point};
use crate::group::{GroupName, Sign};
use crate::petersen::verify_petersen_isomorphic;
use crate::table::KnotName;
use crate::tsg::{
    classify, diagram_certificates, parse_certificates, realizability_catalog, Certificate,
    RealizabilityCatalog, TsgError, TsgReport,
};

/// Direction the base models are projected along.
pub const VIEW: Point = [0.0, 0.0, 1.0];

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus file {file} is corrupt: {message}")]
    Corrupt { file: String, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Tsg(#[from] TsgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntryName {
    Gamma,
    Gamma1,
    Gamma2,
    Lambda,
    Lambda1,
    Delta,
    Delta1,
}

impl EntryName {
    pub const ALL: [EntryName; 7] = [
        EntryName::Gamma,
        EntryName::Gamma1,
        EntryName::Gamma2,
        EntryName::Lambda,
        EntryName::Lambda1,
        EntryName::Delta,
        EntryName::Delta1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EntryName::Gamma => "Gamma",
            EntryName::Gamma1 => "Gamma1",
            EntryName::Gamma2 => "Gamma2",
            EntryName::Lambda => "Lambda",
            EntryName::Lambda1 => "Lambda1",
            EntryName::Delta => "Delta",
            EntryName::Delta1 => "Delta1",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            EntryName::Gamma => "Γ",
            EntryName::Gamma1 => "Γ₁",
            EntryName::Gamma2 => "Γ₂",
            EntryName::Lambda => "Λ",
            EntryName::Lambda1 => "Λ₁",
            EntryName::Delta => "Δ",
            EntryName::Delta1 => "Δ₁",
        }
    }

    pub fn stem(self) -> &'static str {
        match self {
            EntryName::Gamma => "gamma",
            EntryName::Gamma1 => "gamma1",
            EntryName::Gamma2 => "gamma2",
            EntryName::Lambda => "lambda",
            EntryName::Lambda1 => "lambda1",
            EntryName::Delta => "delta",
            EntryName::Delta1 => "delta1",
        }
    }

    pub fn parse(s: &str) -> Option<EntryName> {
        EntryName::ALL.into_iter().find(|n| n.as_str() == s)
    }

    /// The undecorated entry this one is derived from.
    pub fn base(self) -> EntryName {
        match self {
            EntryName::Gamma1 | EntryName::Gamma2 => EntryName::Gamma,
            EntryName::Lambda1 => EntryName::Lambda,
            EntryName::Delta1 => EntryName::Delta,
            other => other,
        }
    }
}

impl fmt::Display for EntryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Group(GroupName),
    Unclaimed,
}

impl Expected {
    fn parse(s: &str) -> Option<Expected> {
        match s {
            "-" => Some(Expected::Unclaimed),
            _ => GroupName::parse(s).map(Expected::Group),
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Group(g) => write!(f, "{g}"),
            Expected::Unclaimed => f.write_str("-"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: EntryName,
    pub file: String,
    pub diagram: SpatialDiagram,
    /// Cited certificates; diagram symmetries are added by [`CorpusEntry::certificates`].
    pub cited: Vec<Certificate>,
    pub expected_full: Expected,
    pub expected_op: Expected,
    pub anchor: String,
}

impl CorpusEntry {
    pub fn certificates(&self) -> Vec<Certificate> {
        let mut out = diagram_certificates(&self.diagram);
        out.extend(self.cited.iter().cloned());
        out
    }

    pub fn classify(&self) -> Result<TsgReport, TsgError> {
        classify(&self.diagram, &self.certificates())
    }

    /// Mismatches between a report and the recorded expectations.
    pub fn check(&self, report: &TsgReport) -> Vec<String> {
        let mut problems = Vec::new();
        for (label, expected, bounds) in [
            ("full", self.expected_full, &report.full),
            ("op", self.expected_op, &report.op),
        ] {
            if let Expected::Group(g) = expected {
                if bounds.exact_name() != Some(g) {
                    problems.push(format!(
                        "{} {label}: expected exactly {g}, got lower {} upper {}{}",
                        self.name,
                        bounds.lower_name(),
                        bounds.upper_name(),
                        if bounds.exact { "" } else { " (not exact)" }
                    ));
                }
            }
        }
        problems
    }
}

const INDEX: &str = include_str!("../../../../corpus/index.txt");

fn bundled_file(name: &str) -> Option<&'static str> {
    Some(match name {
        "gamma.emb" => include_str!("../../../../corpus/gamma.emb"),
        "gamma1.emb" => include_str!("../../../../corpus/gamma1.emb"),
        "gamma2.emb" => include_str!("../../../../corpus/gamma2.emb"),
        "lambda.emb" => include_str!("../../../../corpus/lambda.emb"),
        "lambda1.emb" => include_str!("../../../../corpus/lambda1.emb"),
        "delta.emb" => include_str!("../../../../corpus/delta.emb"),
        "delta1.emb" => include_str!("../../../../corpus/delta1.emb"),
        "delta.cert" => include_str!("../../../../corpus/delta.cert"),
        "delta1.cert" => include_str!("../../../../corpus/delta1.cert"),
        _ => return None,
    })
}

/// The corpus bundled into the library.
pub fn load_corpus() -> Result<Vec<CorpusEntry>, CorpusError> {
    load_with(INDEX, |name| {
        bundled_file(name)
            .map(str::to_string)
            .ok_or_else(|| CorpusError::Io {
                path: name.to_string(),
                message: "not bundled".to_string(),
            })
    })
}

/// The corpus read from a data directory containing `index.txt`.
pub fn load_corpus_from(dir: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let read = |name: &str| {
        let path = dir.join(name);
        std::fs::read_to_string(&path).map_err(|e| CorpusError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    };
    let index = read("index.txt")?;
    load_with(&index, read)
}

struct IndexLine {
    name: EntryName,
    file: String,
    certificates: Option<String>,
    full: Expected,
    op: Expected,
    anchor: String,
}

/// Lines `entry <Name> file <f> [certificates <f>] full <G|-> op <G|-> anchor <text>`.
fn parse_index(text: &str) -> Result<Vec<IndexLine>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let corrupt = |message: &str| CorpusError::Corrupt {
            file: "index.txt".to_string(),
            message: format!("line {}: {message}", i + 1),
        };
        let (head, anchor) = line
            .split_once(" anchor ")
            .ok_or_else(|| corrupt("missing anchor"))?;
        let words: Vec<&str> = head.split_whitespace().collect();
        let mut name = None;
        let mut file = None;
        let mut certificates = None;
        let mut full = None;
        let mut op = None;
        for pair in words.chunks(2) {
            let [key, value] = pair else {
                return Err(corrupt("dangling key"));
            };
            match *key {
                "entry" => name = EntryName::parse(value),
                "file" => file = Some(value.to_string()),
                "certificates" => certificates = Some(value.to_string()),
                "full" => full = Expected::parse(value),
                "op" => op = Expected::parse(value),
                _ => return Err(corrupt(&format!("unknown key `{key}`"))),
            }
        }
        out.push(IndexLine {
            name: name.ok_or_else(|| corrupt("bad or missing entry name"))?,
            file: file.ok_or_else(|| corrupt("missing file"))?,
            certificates,
            full: full.ok_or_else(|| corrupt("bad or missing full expectation"))?,
            op: op.ok_or_else(|| corrupt("bad or missing op expectation"))?,
            anchor: anchor.trim().to_string(),
        });
    }
    let names: BTreeSet<EntryName> = out.iter().map(|l| l.name).collect();
    if names.len() != EntryName::ALL.len() || out.len() != EntryName::ALL.len() {
        return Err(CorpusError::Corrupt {
            file: "index.txt".to_string(),
            message: "expected each of the seven entries exactly once".to_string(),
        });
    }
    Ok(out)
}

fn load_with(
    index: &str,
    read: impl Fn(&str) -> Result<String, CorpusError>,
) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut entries = Vec::new();
    for line in parse_index(index)? {
        let corrupt = |file: &str, message: String| CorpusError::Corrupt {
            file: file.to_string(),
            message,
        };
        let diagram =
            parse_embedding(&read(&line.file)?).map_err(|e| corrupt(&line.file, e.to_string()))?;
        verify_petersen_isomorphic(diagram.graph())
            .map_err(|e| corrupt(&line.file, e.to_string()))?;
        let cited = match &line.certificates {
            Some(f) => parse_certificates(&read(f)?, diagram.graph())
                .map_err(|e| corrupt(f, e.to_string()))?,
            None => Vec::new(),
        };
        entries.push(CorpusEntry {
            name: line.name,
            file: line.file,
            diagram,
            cited,
            expected_full: line.full,
            expected_op: line.op,
            anchor: line.anchor,
        });
    }
    Ok(entries)
}

fn decorate(base: &SpatialDiagram, edges: &[&str], knot: KnotName, sign: Sign) -> SpatialDiagram {
    edges.iter().fold(base.clone(), |d, id| {
        let e = d
            .edge_by_id(id)
            .expect("derivation edges exist in the base entry");
        d.with_decoration(
            e,
            Decoration {
                knot,
                direction: Direction::Forward,
                sign,
            },
        )
    })
}

const OUTER: [&str; 5] = ["12", "23", "34", "45", "51"];
const INNER_DELTA: [&str; 5] = ["ab", "bc", "cd", "de", "ea"];

/// Adds the decorations defining a derived entry to its base diagram.
pub fn derive(name: EntryName, base: &SpatialDiagram) -> SpatialDiagram {
    match name {
        EntryName::Gamma1 => decorate(base, &OUTER, KnotName::K8_17, Sign::Plus),
        EntryName::Gamma2 => decorate(base, &["12", "51"], KnotName::K4_1, Sign::Plus),
        EntryName::Lambda1 => decorate(base, &["a1", "cb", "5d"], KnotName::K8_17, Sign::Plus),
        EntryName::Delta1 => {
            let d = decorate(base, &["1a"], KnotName::K4_1, Sign::Plus);
            let d = decorate(&d, &INNER_DELTA, KnotName::K3_1, Sign::Plus);
            decorate(&d, &OUTER, KnotName::K3_1, Sign::Minus)
        }
        _ => base.clone(),
    }
}

/// The diagram of an entry regenerated from the spatial models.
pub fn regenerate(name: EntryName) -> Result<SpatialDiagram, CorpusError> {
    let model = match name.base() {
        EntryName::Gamma => construct::gamma(),
        EntryName::Lambda => construct::lambda(),
        _ => construct::delta(),
    };
    let base = model.project(VIEW)?;
    Ok(derive(name, &base))
}

/// A built-in embedding whose symmetry group is trivial: the two-edge 4₁
/// entry with a right-handed trefoil added to edge `12`, which breaks its
/// remaining reflection.
pub fn trivial_witness() -> Result<SpatialDiagram, CorpusError> {
    let base = regenerate(EntryName::Gamma2)?;
    Ok(decorate(&base, &["12"], KnotName::K3_1, Sign::Plus))
}

#[derive(Clone, Debug)]
pub struct ReproductionRow {
    pub name: EntryName,
    pub report: TsgReport,
    pub problems: Vec<String>,
}

#[derive(Debug)]
pub struct Reproduction {
    pub rows: Vec<ReproductionRow>,
    pub catalog: Result<RealizabilityCatalog, TsgError>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.catalog.is_ok()
            && self
                .rows
                .iter()
                .all(|r| r.problems.is_empty() && r.report.mod2_ok)
    }
}

/// Classifies every entry, checks expectations, and recomputes the
/// realizability catalog from the exactly determined groups.
pub fn reproduce(entries: &[CorpusEntry]) -> Result<Reproduction, CorpusError> {
    let mut rows = Vec::new();
    let mut full = BTreeSet::new();
    let mut op = BTreeSet::new();
    let mut record = |report: &TsgReport| {
        full.extend(report.full.exact_name());
        op.extend(report.op.exact_name());
    };
    for entry in entries {
        let report = entry.classify()?;
        record(&report);
        let mut problems = entry.check(&report);
        if !report.mod2_ok {
            problems.push(format!(
                "{}: pair parities fail the mod 2 count",
                entry.name
            ));
        }
        rows.push(ReproductionRow {
            name: entry.name,
            report,
            problems,
        });
    }
    let witness = trivial_witness()?;
    record(&classify(&witness, &diagram_certificates(&witness))?);
    let catalog = realizability_catalog(&full, &op);
    Ok(Reproduction { rows, catalog })
}
