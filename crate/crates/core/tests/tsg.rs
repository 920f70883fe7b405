use std::collections::BTreeSet;

use petersen_tsg::corpus::{load_corpus, CorpusEntry, EntryName};
use petersen_tsg::diagram::SpatialDiagram;
use petersen_tsg::group::{GroupName, Perm, Sign, SignedAutomorphism};
use petersen_tsg::knot::KnotDiagram;
use petersen_tsg::knot_id::KnotId;
use petersen_tsg::petersen::{automorphism_group, Cycle};
use petersen_tsg::table::KnotName;
use petersen_tsg::tsg::{
    invariant_profile, parse_certificates, realizability_catalog, theorem_filter, FilterRule,
    TsgError, POSITIVELY_REALIZABLE, REALIZABLE,
};

fn entry(name: EntryName) -> CorpusEntry {
    load_corpus()
        .unwrap()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap()
}

#[test]
fn certificate_file_syntax() {
    let e = entry(EntryName::Delta);
    let g = e.diagram.graph();
    let ok = parse_certificates("# comment\n\ncert - (1a)(2b5e)(3c4d) cited swap\n", g).unwrap();
    assert_eq!(ok.len(), 1);
    assert_eq!(ok[0].signed.sign, Sign::Minus);
    for (text, line) in [
        ("cert + (12345)(acebd)\n", 1),
        ("\ncert * (12345) cited x\n", 2),
        ("cert + (12z) cited x\n", 1),
        ("certificate + (12) cited x\n", 1),
    ] {
        match parse_certificates(text, g) {
            Err(TsgError::CertificateSyntax { line: l, .. }) => assert_eq!(l, line, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn non_petersen_diagram_is_rejected() {
    let d = SpatialDiagram::from_knot(&KnotDiagram::unknot());
    assert!(matches!(invariant_profile(&d), Err(TsgError::Graph(_))));
}

#[test]
fn f20_op_part_loses_its_order_four_elements() {
    let aut = automorphism_group();
    let five = aut.elements().find(|p| p.order() == 5).unwrap().clone();
    let sub: BTreeSet<Perm> = (0..5).map(|k| five.pow(k)).collect();
    // The normalizer of a subgroup of order 5 is a copy of F20.
    let normalizer: Vec<Perm> = aut
        .elements()
        .filter(|g| {
            sub.iter()
                .all(|h| sub.contains(&g.compose(h).compose(&g.inverse())))
        })
        .cloned()
        .collect();
    assert_eq!(normalizer.len(), 20);
    let input: BTreeSet<SignedAutomorphism> = normalizer
        .iter()
        .map(|p| SignedAutomorphism::new(p.clone(), Sign::Plus))
        .collect();
    let out = theorem_filter(&input);
    assert_eq!(out.kept.len(), 10);
    assert!(out.kept.iter().all(|s| s.perm.order() != 4));
    assert_eq!(
        out.notes[0].rule,
        FilterRule::OrientationPreservingOrderFour
    );
    assert_eq!(out.notes[0].removed, 10);
}

#[test]
fn order_six_elements_are_removed_with_either_sign() {
    let aut = automorphism_group();
    let six = aut.elements().find(|p| p.order() == 6).unwrap().clone();
    let input: BTreeSet<SignedAutomorphism> = [Sign::Plus, Sign::Minus]
        .into_iter()
        .map(|s| SignedAutomorphism::new(six.clone(), s))
        .chain([SignedAutomorphism::identity(10)])
        .collect();
    let out = theorem_filter(&input);
    assert_eq!(out.kept.len(), 1);
    assert_eq!(out.notes[0].rule, FilterRule::OrderSix);
}

#[test]
fn decorations_enter_cycle_knots() {
    let e = entry(EntryName::Gamma1);
    let p = invariant_profile(&e.diagram).unwrap();
    let g = e.diagram.graph();
    let outer = Cycle::from_names(g, &["1", "2", "3", "4", "5"]).unwrap();
    let KnotId::Composite(f) = &p.cycle_knots[&outer] else {
        panic!("composite expected")
    };
    assert_eq!(f.len(), 5);
    assert!(f.iter().all(|(k, _)| *k == KnotName::K8_17));
    let star = Cycle::from_names(g, &["a", "b", "c", "d", "e"]).unwrap();
    assert_eq!(
        p.cycle_knots[&star],
        KnotId::composite(vec![(KnotName::K5_1, Sign::Plus)])
    );
}

#[test]
fn machine_line_format() {
    let r = entry(EntryName::Delta).classify().unwrap();
    assert_eq!(
        r.machine_line(),
        "tsg full=F20 op=D5 exact_full=1 exact_op=1 mod2=1"
    );
}

#[test]
fn catalog_requires_certified_classes() {
    use GroupName::*;
    let full: BTreeSet<GroupName> = REALIZABLE.into_iter().collect();
    let op: BTreeSet<GroupName> = POSITIVELY_REALIZABLE.into_iter().collect();
    let c = realizability_catalog(&full, &op).unwrap();
    assert_eq!(c.realizable, full);
    assert_eq!(c.positively_realizable, op);
    let missing: BTreeSet<GroupName> = full.iter().copied().filter(|g| *g != Z4).collect();
    assert!(matches!(
        realizability_catalog(&missing, &op),
        Err(TsgError::CatalogMismatch(_))
    ));
    let everything: BTreeSet<GroupName> = GroupName::ALL.into_iter().collect();
    let c = realizability_catalog(&everything, &everything).unwrap();
    assert_eq!(c.realizable, full);
}
