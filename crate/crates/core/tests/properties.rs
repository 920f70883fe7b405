use proptest::prelude::*;

use petersen_tsg::corpus::{construct, load_corpus};
use petersen_tsg::diagram::{
    knot_from_embedding, linking_number, parse_embedding, Decoration, Direction, SpatialDiagram,
};
use petersen_tsg::group::{is_closed_signed, signed_closure, Perm, Sign, SignedAutomorphism};
use petersen_tsg::knot::{alexander, determinant, jones, KnotDiagram};
use petersen_tsg::petersen::{automorphism_group, disjoint_five_cycle_pairs};
use petersen_tsg::table::KnotName;
use petersen_tsg::tsg::invariant_profile;

fn braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|n| {
        let g = n as i32 - 1;
        let letter = (1..=g).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        (Just(n), prop::collection::vec(letter, 1..9))
    })
}

fn knot((n, word): &(usize, Vec<i32>)) -> Option<KnotDiagram> {
    KnotDiagram::from_braid(*n, word).ok()
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jones_survives_markov_moves(b in braid(), rot in 0usize..8) {
        let Some(k) = knot(&b) else { return Ok(()) };
        let (n, word) = &b;
        let j = jones(&k).unwrap();
        let mut stabilized = word.clone();
        stabilized.push(*n as i32);
        let s = KnotDiagram::from_braid(n + 1, &stabilized).unwrap();
        prop_assert_eq!(&jones(&s).unwrap(), &j);
        let r = rot % word.len();
        let conj: Vec<i32> = word[r..].iter().chain(&word[..r]).copied().collect();
        let c = KnotDiagram::from_braid(*n, &conj).unwrap();
        prop_assert_eq!(&jones(&c).unwrap(), &j);
    }

    #[test]
    fn invariants_agree_at_minus_one(b in braid()) {
        let Some(k) = knot(&b) else { return Ok(()) };
        let j = jones(&k).unwrap();
        let a = alexander(&k).unwrap();
        let det = determinant(&k).unwrap();
        prop_assert_eq!(j.eval_unit(1), 1);
        prop_assert_eq!(a.eval_unit(1), 1);
        prop_assert_eq!(j.eval_unit(-1).unsigned_abs(), det);
        prop_assert_eq!(a.eval_unit(-1).unsigned_abs(), det);
    }

    #[test]
    fn mirror_and_reverse(b in braid()) {
        let Some(k) = knot(&b) else { return Ok(()) };
        let j = jones(&k).unwrap();
        prop_assert_eq!(jones(&k.mirror()).unwrap(), j.invert());
        prop_assert_eq!(&jones(&k.reverse()).unwrap(), &j);
        prop_assert_eq!(alexander(&k.mirror()).unwrap(), alexander(&k).unwrap());
    }

    #[test]
    fn connected_sum_multiplies(a in braid(), b in braid()) {
        let (Some(x), Some(y)) = (knot(&a), knot(&b)) else { return Ok(()) };
        let s = x.connected_sum(&y);
        prop_assert_eq!(jones(&s).unwrap(), &jones(&x).unwrap() * &jones(&y).unwrap());
        prop_assert_eq!(determinant(&s).unwrap(), determinant(&x).unwrap() * determinant(&y).unwrap());
    }

    #[test]
    fn knot_embedding_round_trip(b in braid()) {
        let Some(k) = knot(&b) else { return Ok(()) };
        let d = SpatialDiagram::from_knot(&k);
        let text = d.serialize();
        let back = parse_embedding(&text).unwrap();
        prop_assert_eq!(&back.serialize(), &text);
        let k2 = knot_from_embedding(&back).unwrap();
        prop_assert_eq!(jones(&k2).unwrap(), jones(&k).unwrap());
    }

    #[test]
    fn signed_closure_is_a_group(picks in prop::collection::vec((0usize..120, sign()), 0..3)) {
        let aut: Vec<Perm> = automorphism_group().elements().cloned().collect();
        let gens: Vec<SignedAutomorphism> = picks
            .iter()
            .map(|&(i, s)| SignedAutomorphism::new(aut[i].clone(), s))
            .collect();
        let set = signed_closure(10, &gens);
        prop_assert!(is_closed_signed(&set));
        prop_assert!(set.contains(&SignedAutomorphism::identity(10)));
        for s in &set {
            prop_assert!(set.contains(&s.inverse()));
        }
        for g in &gens {
            prop_assert!(set.contains(g));
        }
    }

    #[test]
    fn decoration_transport_is_an_action(
        k in prop::sample::select(KnotName::ALL.to_vec()),
        fwd in any::<bool>(),
        s in sign(),
        f1 in any::<bool>(), s1 in sign(),
        f2 in any::<bool>(), s2 in sign(),
    ) {
        let d = Decoration {
            knot: k,
            direction: if fwd { Direction::Forward } else { Direction::Backward },
            sign: s,
        };
        let twice = d.transport(f1, s1).transport(f2, s2);
        let once = d.transport(f1 != f2, s1 * s2);
        prop_assert_eq!(twice.canonical(), once.canonical());
        prop_assert_eq!(d.transport(false, Sign::Plus).canonical(), d.canonical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn gamma_profile_is_independent_of_view(
        x in -0.3f64..0.3,
        y in -0.3f64..0.3,
    ) {
        let reference = invariant_profile(&construct::gamma().project([0.0, 0.0, 1.0]).unwrap()).unwrap();
        let Ok(d) = construct::gamma().project([x, y, 1.0]) else { return Ok(()) };
        let p = invariant_profile(&d).unwrap();
        prop_assert_eq!(p.cycle_knots, reference.cycle_knots);
        prop_assert_eq!(p.pair_linking, reference.pair_linking);
    }
}

#[test]
fn linking_number_is_symmetric() {
    for e in load_corpus().unwrap() {
        for p in disjoint_five_cycle_pairs(e.diagram.graph()) {
            let a = linking_number(&e.diagram, &p.first, &p.second).unwrap();
            let b = linking_number(&e.diagram, &p.second, &p.first).unwrap();
            assert_eq!(a, b, "{}", e.name);
        }
    }
}
