use petersen_tsg::corpus::{load_corpus, EntryName};
use petersen_tsg::diagram::{diagram_symmetries, linking_number, parse_embedding, DiagramError};
use petersen_tsg::group::{Sign, SignedAutomorphism};
use petersen_tsg::petersen::Cycle;

const GAMMA: &str = include_str!("../../../corpus/gamma.emb");

fn violations(text: &str) -> Vec<String> {
    match parse_embedding(text) {
        Err(DiagramError::Validation(v)) => v.iter().map(|x| x.kind.to_string()).collect(),
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn misordered_rotation_fails_euler_check() {
    let text = GAMMA.replace("vertex 1 : 1a.0 12.0 51.1", "vertex 1 : 12.0 1a.0 51.1");
    assert_ne!(text, GAMMA);
    assert!(violations(&text).iter().any(|k| k == "non-planar map"));
}

#[test]
fn undeclared_dart_is_rejected() {
    let text = GAMMA.replace("vertex 1 : 1a.0 12.0 51.1", "vertex 1 : 1a.0 12.0 51.7");
    assert!(!violations(&text).is_empty());
}

#[test]
fn reused_dart_is_rejected() {
    let text = GAMMA.replace("vertex 1 : 1a.0 12.0 51.1", "vertex 1 : 1a.0 12.0 12.0");
    assert!(violations(&text).iter().any(|k| k == "dart reuse"));
}

#[test]
fn syntax_error_has_a_position() {
    let text = GAMMA.replace("graph e 12 1 2", "graph e 12 1");
    match parse_embedding(&text) {
        Err(DiagramError::Syntax { line, .. }) => {
            let expected = GAMMA.lines().position(|l| l == "graph e 12 1 2").unwrap() + 1;
            assert_eq!(line, expected);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn crossing_free_cycles_do_not_link() {
    let corpus = load_corpus().unwrap();
    let lambda = corpus.iter().find(|e| e.name == EntryName::Lambda).unwrap();
    let g = lambda.diagram.graph();
    // Pairs with no crossing between them have linking number zero.
    for p in petersen_tsg::petersen::disjoint_five_cycle_pairs(g) {
        let lk = linking_number(&lambda.diagram, &p.first, &p.second).unwrap();
        let shares = lambda.diagram.crossings().iter().any(|x| {
            let on = |c: &Cycle| {
                x.darts.iter().any(|d| {
                    let (u, v) = g.edges()[d.edge];
                    c.contains_edge(u, v)
                })
            };
            on(&p.first) && on(&p.second)
        });
        if !shares {
            assert_eq!(lk, 0);
        }
    }
}

#[test]
fn every_diagram_has_the_identity_symmetry() {
    for e in load_corpus().unwrap() {
        let id = SignedAutomorphism::identity(10);
        assert!(diagram_symmetries(&e.diagram)
            .iter()
            .any(|s| s.signed == id));
    }
}

#[test]
fn delta_has_no_planar_symmetry_beyond_identity() {
    let corpus = load_corpus().unwrap();
    let delta = corpus.iter().find(|e| e.name == EntryName::Delta).unwrap();
    let syms = diagram_symmetries(&delta.diagram);
    assert_eq!(syms.len(), 1);
    assert_eq!(syms[0].signed.sign, Sign::Plus);
}

#[test]
fn serialization_round_trips() {
    for e in load_corpus().unwrap() {
        let text = e.diagram.serialize();
        assert_eq!(parse_embedding(&text).unwrap().serialize(), text);
    }
}
