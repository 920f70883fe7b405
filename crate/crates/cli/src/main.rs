use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use petersen_tsg::corpus::{load_corpus_from, reproduce, CorpusError, Reproduction};
use petersen_tsg::diagram::{knot_from_embedding, parse_embedding, SpatialDiagram};
use petersen_tsg::knot::Invariants;
use petersen_tsg::knot_id::identify_invariants;
use petersen_tsg::petersen::{
    build_petersen, disjoint_five_cycle_pairs, enumerate_cycles, verify_lemma,
};
use petersen_tsg::tsg::{
    classify_profile, diagram_certificates, invariant_profile, parse_certificates, Certificate,
    Provenance, RealizabilityCatalog, TsgError, TsgReport,
};

#[derive(Parser)]
#[command(
    name = "petersen-tsg",
    version,
    about = "Topological symmetry groups of embedded Petersen graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Certificate file for `analyze`.
    #[arg(long, global = true)]
    certificates: Option<PathBuf>,
    /// Corpus data directory.
    #[arg(long, default_value = "corpus", global = true)]
    data: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check the disjoint 5-cycle facts by exhaustive search.
    VerifyLemma,
    /// Print the cycle census and the six disjoint 5-cycle pairs.
    Cycles,
    /// Bound the symmetry groups of an embedding file.
    Analyze { file: PathBuf },
    /// Identify the knot drawn in an embedding file.
    KnotId { file: PathBuf },
    /// Print the realizable and positively realizable groups.
    Catalog,
    /// Classify the corpus and compare with the expected groups.
    Reproduce,
}

/// Outcome of a command: its output and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

enum Failure {
    Input(String),
    Check(String),
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<SpatialDiagram, Failure> {
    parse_embedding(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn flag(b: bool) -> u8 {
    u8::from(b)
}

fn verify_lemma_cmd(format: Format) -> Outcome {
    let r = verify_lemma();
    let mut out = String::new();
    match format {
        Format::Machine => {
            let _ = writeln!(
                out,
                "lemma pairs={} five_cycles={} pointwise_trivial={} involution_fixed_points={} involution_determined={}",
                r.pair_count,
                r.five_cycle_count,
                flag(r.pointwise_trivial),
                flag(r.involutions_fix_one_vertex_each),
                flag(r.involutions_determined_by_fixed_vertices)
            );
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{} disjoint 5-cycle pairs; pointwise stabilizers {}",
                r.pair_count,
                if r.pointwise_trivial {
                    "trivial"
                } else {
                    "NOT trivial"
                }
            );
            let _ = writeln!(
                out,
                "involutions fixing a pair fix one vertex per cycle: {}",
                if r.involutions_fix_one_vertex_each {
                    "yes"
                } else {
                    "no"
                }
            );
            let _ = writeln!(
                out,
                "such involutions are determined by their fixed vertices: {}",
                if r.involutions_determined_by_fixed_vertices {
                    "yes"
                } else {
                    "no"
                }
            );
        }
    }
    Outcome {
        text: out,
        ok: r.passed(),
    }
}

fn cycles_cmd(format: Format) -> Outcome {
    let g = build_petersen();
    let mut out = String::new();
    for (len, cycles) in enumerate_cycles(&g) {
        match format {
            Format::Machine => {
                let _ = writeln!(out, "cycles len={len} count={}", cycles.len());
            }
            Format::Text => {
                let _ = writeln!(out, "{len}-cycles: {}", cycles.len());
            }
        }
    }
    let pairs = disjoint_five_cycle_pairs(&g);
    if format == Format::Text {
        let _ = writeln!(out, "disjoint 5-cycle pairs: {}", pairs.len());
    }
    for p in &pairs {
        let show = |c: &petersen_tsg::petersen::Cycle| {
            c.vertices()
                .iter()
                .map(|&v| g.name(v))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match format {
            Format::Machine => {
                let _ = writeln!(out, "pair {} | {}", show(&p.first), show(&p.second));
            }
            Format::Text => {
                let _ = writeln!(out, "  ({}) | ({})", show(&p.first), show(&p.second));
            }
        }
    }
    Outcome {
        text: out,
        ok: pairs.len() == 6,
    }
}

fn compact(s: &str) -> String {
    s.replace(' ', "")
}

fn analyze_cmd(
    file: &Path,
    certificates: Option<&Path>,
    format: Format,
) -> Result<Outcome, Failure> {
    let diagram = load_diagram(file)?;
    let profile = invariant_profile(&diagram).map_err(|e| match e {
        TsgError::Graph(_) | TsgError::Diagram(_) => {
            Failure::Input(format!("{}: {e}", file.display()))
        }
        other => Failure::Check(other.to_string()),
    })?;
    let mut certs: Vec<Certificate> = diagram_certificates(&diagram);
    if let Some(path) = certificates {
        let cited = parse_certificates(&read(path)?, diagram.graph())
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        certs.extend(cited);
    }
    let report = classify_profile(&profile, &certs).map_err(|e| Failure::Check(e.to_string()))?;
    let g = diagram.graph();
    let mut out = String::new();
    match format {
        Format::Machine => {
            let _ = writeln!(out, "crossings {}", diagram.crossing_count());
            for (c, k) in profile.knotted_cycles() {
                let _ = writeln!(out, "cycle {} {}", c.display(g), compact(&k.to_string()));
            }
            for (p, lk) in &profile.pair_linking {
                let _ = writeln!(
                    out,
                    "pair {} {} lk={lk}",
                    p.first.display(g),
                    p.second.display(g)
                );
            }
            let _ = writeln!(out, "{}", report.machine_line());
        }
        Format::Text => {
            let _ = writeln!(out, "embedding {}", file.display());
            let _ = writeln!(out, "crossings: {}", diagram.crossing_count());
            let knotted: Vec<_> = profile.knotted_cycles().collect();
            let _ = writeln!(out, "knotted cycles: {}", knotted.len());
            for (c, k) in knotted {
                let _ = writeln!(out, "  {} {k}", c.display(g));
            }
            let _ = writeln!(out, "disjoint 5-cycle pairs:");
            for (p, lk) in &profile.pair_linking {
                let _ = writeln!(
                    out,
                    "  {} | {}  |lk| = {lk}",
                    p.first.display(g),
                    p.second.display(g)
                );
            }
            write_report(&mut out, &report, g.names());
        }
    }
    let ok = report.mod2_ok;
    Ok(Outcome { text: out, ok })
}

fn write_report(out: &mut String, report: &TsgReport, names: &[String]) {
    let _ = writeln!(
        out,
        "mod 2 linking count: {}",
        if report.mod2_ok { "ok" } else { "FAILED" }
    );
    for note in &report.profile_notes {
        let _ = writeln!(out, "note: {note}");
    }
    for note in &report.filter_notes {
        let _ = writeln!(out, "filter: {note}");
    }
    for c in &report.certificates {
        let source = match &c.provenance {
            Provenance::DiagramSymmetry => "diagram symmetry".to_string(),
            Provenance::Cited(text) => format!("cited: {text}"),
        };
        let _ = writeln!(
            out,
            "certificate {} {} ({source})",
            c.signed.sign,
            c.signed.perm.to_cycle_string(names)
        );
    }
    for (label, b) in [("TSG", &report.full), ("TSG+ (op-group)", &report.op)] {
        let _ = writeln!(
            out,
            "{label}: {} <= group <= {}{}",
            b.lower_name(),
            b.upper_name(),
            if b.exact {
                format!(", exactly {}", b.lower_name())
            } else {
                String::new()
            }
        );
    }
}

fn knot_id_cmd(file: &Path, format: Format) -> Result<Outcome, Failure> {
    let diagram = load_diagram(file)?;
    let input = |e: &dyn std::fmt::Display| Failure::Input(format!("{}: {e}", file.display()));
    let kd = knot_from_embedding(&diagram).map_err(|e| input(&e))?;
    let inv = Invariants::of(&kd).map_err(|e| input(&e))?;
    let id = identify_invariants(&inv);
    let mut out = String::new();
    match format {
        Format::Machine => {
            let _ = writeln!(
                out,
                "knot {} crossings={} writhe={} det={}",
                compact(&id.to_string()),
                kd.crossing_count(),
                kd.writhe(),
                inv.determinant
            );
        }
        Format::Text => {
            let _ = writeln!(out, "knot: {id}");
            let _ = writeln!(out, "crossings: {}", kd.crossing_count());
            let _ = writeln!(out, "writhe: {}", kd.writhe());
            let _ = writeln!(out, "jones: {}", inv.jones);
            let _ = writeln!(out, "alexander: {}", inv.alexander);
            let _ = writeln!(out, "determinant: {}", inv.determinant);
        }
    }
    Ok(Outcome {
        text: out,
        ok: true,
    })
}

fn run_corpus(data: &Path) -> Result<Reproduction, Failure> {
    let entries = load_corpus_from(data).map_err(|e| match e {
        CorpusError::Tsg(t) => Failure::Check(t.to_string()),
        other => Failure::Input(other.to_string()),
    })?;
    reproduce(&entries).map_err(|e| Failure::Check(e.to_string()))
}

fn list(groups: &std::collections::BTreeSet<petersen_tsg::GroupName>, sep: &str) -> String {
    groups
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn write_catalog(out: &mut String, catalog: &RealizabilityCatalog, format: Format) {
    match format {
        Format::Machine => {
            let _ = writeln!(out, "realizable {}", list(&catalog.realizable, ","));
            let _ = writeln!(
                out,
                "positively_realizable {}",
                list(&catalog.positively_realizable, ",")
            );
        }
        Format::Text => {
            let _ = writeln!(out, "realizable: {}", list(&catalog.realizable, ", "));
            let _ = writeln!(
                out,
                "positively realizable: {}",
                list(&catalog.positively_realizable, ", ")
            );
        }
    }
}

fn catalog_cmd(data: &Path, format: Format) -> Result<Outcome, Failure> {
    let r = run_corpus(data)?;
    let catalog = r.catalog.map_err(|e| Failure::Check(e.to_string()))?;
    let mut out = String::new();
    write_catalog(&mut out, &catalog, format);
    Ok(Outcome {
        text: out,
        ok: true,
    })
}

fn reproduce_cmd(data: &Path, format: Format) -> Result<Outcome, Failure> {
    let r = run_corpus(data)?;
    let mut out = String::new();
    if format == Format::Text {
        let _ = writeln!(
            out,
            "{:<6} {:<8} {:<8} {:<6} {:<6} status",
            "entry", "TSG", "TSG+", "exact", "mod2"
        );
    }
    for row in &r.rows {
        let rep = &row.report;
        match format {
            Format::Machine => {
                let _ = writeln!(out, "entry {} {}", row.name.as_str(), rep.machine_line());
            }
            Format::Text => {
                let _ = writeln!(
                    out,
                    "{:<6} {:<8} {:<8} {:<6} {:<6} {}",
                    row.name.symbol(),
                    rep.full.lower_name(),
                    rep.op.lower_name(),
                    format!("{}/{}", flag(rep.full.exact), flag(rep.op.exact)),
                    if rep.mod2_ok { "ok" } else { "FAIL" },
                    if row.problems.is_empty() {
                        "ok"
                    } else {
                        "MISMATCH"
                    }
                );
            }
        }
        for p in &row.problems {
            let _ = writeln!(out, "mismatch: {p}");
        }
    }
    match &r.catalog {
        Ok(catalog) => write_catalog(&mut out, catalog, format),
        Err(e) => {
            let _ = writeln!(out, "catalog: {e}");
        }
    }
    let ok = r.passed();
    if format == Format::Machine {
        let _ = writeln!(out, "reproduce {}", if ok { "pass" } else { "fail" });
    }
    Ok(Outcome { text: out, ok })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = match &cli.command {
        Command::VerifyLemma => Ok(verify_lemma_cmd(format)),
        Command::Cycles => Ok(cycles_cmd(format)),
        Command::Analyze { file } => analyze_cmd(file, cli.certificates.as_deref(), format),
        Command::KnotId { file } => knot_id_cmd(file, format),
        Command::Catalog => catalog_cmd(&cli.data, format),
        Command::Reproduce => reproduce_cmd(&cli.data, format),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
