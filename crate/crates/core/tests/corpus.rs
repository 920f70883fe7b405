use std::path::PathBuf;

use petersen_tsg::corpus::{
    derive, load_corpus, load_corpus_from, regenerate, reproduce, trivial_witness, CorpusEntry,
    CorpusError, EntryName, Expected,
};
use petersen_tsg::diagram::{cycle_diagram, diagram_symmetries, linking_number, Direction};
use petersen_tsg::group::{GroupName, Perm, Sign, SignedAutomorphism};
use petersen_tsg::knot::Invariants;
use petersen_tsg::knot_id::{identify_invariants, KnotId};
use petersen_tsg::petersen::{enumerate_cycles, Cycle};
use petersen_tsg::table::KnotName;
use petersen_tsg::tsg::{
    classify, diagram_certificates, invariant_profile, signed_compatible_group, Certificate,
    Provenance, TsgError,
};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn entry(name: EntryName) -> CorpusEntry {
    load_corpus()
        .unwrap()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap()
}

fn cycle(e: &CorpusEntry, names: &[&str]) -> Cycle {
    Cycle::from_names(e.diagram.graph(), names).unwrap()
}

fn chars(s: &str) -> Vec<String> {
    s.chars().map(String::from).collect()
}

fn knot_of(e: &CorpusEntry, c: &Cycle) -> KnotId {
    let kd = cycle_diagram(&e.diagram, c).unwrap();
    identify_invariants(&Invariants::of(&kd).unwrap())
}

fn perm(e: &CorpusEntry, s: &str) -> Perm {
    Perm::parse_cycles(s, e.diagram.graph().names()).unwrap()
}

#[test]
fn seven_entries_with_expectations() {
    let corpus = load_corpus().unwrap();
    let got: Vec<(EntryName, Expected, Expected)> = corpus
        .iter()
        .map(|e| (e.name, e.expected_full, e.expected_op))
        .collect();
    use EntryName::*;
    use Expected::{Group, Unclaimed};
    use GroupName::*;
    assert_eq!(
        got,
        vec![
            (Gamma, Unclaimed, Group(D5)),
            (Gamma1, Unclaimed, Group(Z5)),
            (Gamma2, Unclaimed, Group(Z2)),
            (Lambda, Unclaimed, Group(D3)),
            (Lambda1, Unclaimed, Group(Z3)),
            (Delta, Group(F20), Unclaimed),
            (Delta1, Group(Z4), Unclaimed),
        ]
    );
}

#[test]
fn directory_matches_bundle() {
    let bundled = load_corpus().unwrap();
    let on_disk = load_corpus_from(&data_dir()).unwrap();
    for (a, b) in bundled.iter().zip(&on_disk) {
        assert_eq!(a.name, b.name);
        assert_eq!(a.diagram.serialize(), b.diagram.serialize());
        assert_eq!(a.cited, b.cited);
    }
}

#[test]
fn files_match_regenerated_models() {
    for e in load_corpus().unwrap() {
        let fresh = regenerate(e.name).unwrap();
        assert_eq!(fresh.serialize(), e.diagram.serialize(), "{}", e.name);
    }
}

#[test]
fn derived_entries_come_from_their_base() {
    let corpus = load_corpus().unwrap();
    for e in &corpus {
        let base = corpus.iter().find(|b| b.name == e.name.base()).unwrap();
        assert_eq!(
            derive(e.name, &base.diagram).serialize(),
            e.diagram.serialize()
        );
    }
}

#[test]
fn gamma_drawing() {
    let e = entry(EntryName::Gamma);
    assert_eq!(e.diagram.crossing_count(), 5);
    let pentagon = cycle_diagram(&e.diagram, &cycle(&e, &["1", "2", "3", "4", "5"])).unwrap();
    assert_eq!(pentagon.crossing_count(), 0);
    let star = cycle(&e, &["a", "b", "c", "d", "e"]);
    assert_eq!(
        cycle_diagram(&e.diagram, &star).unwrap().crossing_count(),
        5
    );
    assert_eq!(
        knot_of(&e, &star),
        KnotId::composite(vec![(KnotName::K5_1, Sign::Plus)])
    );
}

#[test]
fn gamma_has_a_single_cinquefoil() {
    let e = entry(EntryName::Gamma);
    let star = cycle(&e, &["a", "b", "c", "d", "e"]);
    for c in enumerate_cycles(e.diagram.graph()).into_values().flatten() {
        let k = knot_of(&e, &c);
        let has_5_1 =
            matches!(&k, KnotId::Composite(f) if f.iter().any(|(n, _)| *n == KnotName::K5_1));
        assert_eq!(has_5_1, c == star, "{}", c.display(e.diagram.graph()));
    }
}

#[test]
fn gamma_linking_and_symmetry() {
    let e = entry(EntryName::Gamma);
    let x = cycle(&e, &["1", "2", "3", "4", "5"]);
    let y = cycle(&e, &["a", "b", "c", "d", "e"]);
    assert_eq!(linking_number(&e.diagram, &x, &y).unwrap(), 0);
    let syms = diagram_symmetries(&e.diagram);
    let phi = SignedAutomorphism::new(perm(&e, "(12345)(acebd)"), Sign::Plus);
    assert!(syms.iter().any(|s| s.signed == phi));
}

#[test]
fn lambda_single_trefoil_and_symmetries() {
    let e = entry(EntryName::Lambda);
    let nine = cycle(
        &e,
        &chars("154baedc2")
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>(),
    );
    let knotted: Vec<Cycle> = enumerate_cycles(e.diagram.graph())
        .into_values()
        .flatten()
        .filter(|c| !knot_of(&e, c).is_unknot())
        .collect();
    assert_eq!(knotted, vec![nine.clone()]);
    let KnotId::Composite(f) = knot_of(&e, &nine) else {
        panic!("trefoil expected")
    };
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].0, KnotName::K3_1);
    let syms = diagram_symmetries(&e.diagram);
    let phi = SignedAutomorphism::new(perm(&e, "(24e)(c5a)(bd1)"), Sign::Plus);
    let psi = SignedAutomorphism::new(perm(&e, "(1c)(ab)(e4)(d5)"), Sign::Plus);
    assert!(syms.iter().any(|s| s.signed == phi));
    assert!(syms.iter().any(|s| s.signed == psi));
}

#[test]
fn delta_hopf_link() {
    let e = entry(EntryName::Delta);
    let x = cycle(&e, &["1", "2", "3", "4", "5"]);
    let y = cycle(&e, &["a", "b", "c", "d", "e"]);
    assert_eq!(linking_number(&e.diagram, &x, &y).unwrap().abs(), 1);
    for c in enumerate_cycles(e.diagram.graph()).into_values().flatten() {
        assert!(knot_of(&e, &c).is_unknot());
    }
    let p = invariant_profile(&e.diagram).unwrap();
    let odd: Vec<_> = p
        .pair_linking
        .iter()
        .filter(|(_, lk)| **lk % 2 == 1)
        .collect();
    assert_eq!(odd.len(), 1);
    assert!(odd[0].0.first == x || odd[0].0.second == x);
}

#[test]
fn delta1_decorations() {
    let e = entry(EntryName::Delta1);
    let d = &e.diagram;
    let on = |id: &str| d.decorations_on(d.edge_by_id(id).unwrap()).to_vec();
    for id in ["12", "23", "34", "45", "51"] {
        let decos = on(id);
        assert_eq!(decos.len(), 1);
        assert_eq!(
            (decos[0].knot, decos[0].sign),
            (KnotName::K3_1, Sign::Minus)
        );
    }
    for id in ["ab", "bc", "cd", "de", "ea"] {
        let decos = on(id);
        assert_eq!((decos[0].knot, decos[0].sign), (KnotName::K3_1, Sign::Plus));
    }
    assert_eq!(on("1a")[0].knot, KnotName::K4_1);
}

#[test]
fn gamma1_decorations_are_coherent() {
    let e = entry(EntryName::Gamma1);
    let d = &e.diagram;
    for id in ["12", "23", "34", "45", "51"] {
        let decos = d.decorations_on(d.edge_by_id(id).unwrap());
        assert_eq!(decos.len(), 1);
        assert_eq!(decos[0].knot, KnotName::K8_17);
        assert_eq!(decos[0].direction, Direction::Forward);
    }
}

#[test]
fn compatible_projections() {
    let order = |name: EntryName, op: bool| {
        let e = entry(name);
        let set = signed_compatible_group(&invariant_profile(&e.diagram).unwrap()).unwrap();
        set.iter()
            .filter(|s| !op || s.sign == Sign::Plus)
            .map(|s| s.perm.clone())
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    };
    assert_eq!(order(EntryName::Gamma, true), 10);
    assert_eq!(order(EntryName::Gamma1, true), 5);
    assert_eq!(order(EntryName::Delta1, false), 4);
}

#[test]
fn delta1_swaps_need_reflection() {
    let e = entry(EntryName::Delta1);
    let x = cycle(&e, &["1", "2", "3", "4", "5"]);
    let set = signed_compatible_group(&invariant_profile(&e.diagram).unwrap()).unwrap();
    for s in &set {
        if x.image(&s.perm) != x {
            assert_eq!(s.sign, Sign::Minus);
        }
    }
}

#[test]
fn every_expectation_reproduced() {
    let corpus = load_corpus().unwrap();
    let r = reproduce(&corpus).unwrap();
    for row in &r.rows {
        assert!(row.problems.is_empty(), "{:?}", row.problems);
        assert!(row.report.mod2_ok);
    }
    assert!(r.catalog.is_ok());
    assert!(r.passed());
}

#[test]
fn certificates_lie_in_compatible_sets() {
    for e in load_corpus().unwrap() {
        let set = signed_compatible_group(&invariant_profile(&e.diagram).unwrap()).unwrap();
        for c in e.certificates() {
            assert!(set.contains(&c.signed), "{}", e.name);
        }
    }
}

#[test]
fn delta_needs_cited_certificates() {
    let e = entry(EntryName::Delta);
    let r = classify(&e.diagram, &diagram_certificates(&e.diagram)).unwrap();
    assert_eq!(r.full.lower.order(), 1);
    assert_eq!(r.full.upper_name(), "F20");
    assert!(!r.full.exact);
}

#[test]
fn contradicting_certificate_is_rejected() {
    let e = entry(EntryName::Gamma1);
    let bad = Certificate {
        signed: SignedAutomorphism::new(perm(&e, "(25)(34)(be)(cd)"), Sign::Plus),
        provenance: Provenance::Cited("reflection".into()),
    };
    match classify(&e.diagram, &[bad]) {
        Err(TsgError::InvalidCertificate { clause, .. }) => assert_eq!(clause, "edge decorations"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn witness_is_trivial() {
    let w = trivial_witness().unwrap();
    let r = classify(&w, &diagram_certificates(&w)).unwrap();
    assert_eq!(r.full.exact_name(), Some(GroupName::Trivial));
    assert_eq!(r.op.exact_name(), Some(GroupName::Trivial));
}

#[test]
fn corrupt_file_is_reported() {
    let dir = std::env::temp_dir().join(format!("petersen-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for f in std::fs::read_dir(data_dir()).unwrap() {
        let f = f.unwrap();
        std::fs::copy(f.path(), dir.join(f.file_name())).unwrap();
    }
    let text = std::fs::read_to_string(dir.join("gamma.emb")).unwrap();
    let broken: String = text
        .lines()
        .filter(|l| !l.starts_with("crossing"))
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(dir.join("gamma.emb"), broken).unwrap();
    let err = load_corpus_from(&dir).unwrap_err();
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(
        matches!(err, CorpusError::Corrupt { ref file, .. } if file == "gamma.emb"),
        "{err}"
    );
}
