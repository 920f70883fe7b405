use std::collections::BTreeMap;

use petersen_tsg::group::{
    contains_klein_four, element_order_spectrum, identify, subgroup_classes, GroupName, Perm,
    PermutationGroup,
};
use petersen_tsg::petersen::{
    automorphism_group, brute_force_automorphisms, build_petersen, disjoint_five_cycle_pairs,
    enumerate_cycles, kneser_index, s5_action, stabilizer, symmetric_group_s5,
    verify_petersen_isomorphic, Graph, GraphError, StabilizerMode, Target,
};

fn s5(text: &str) -> Perm {
    let names: Vec<String> = (1..=5).map(|i| i.to_string()).collect();
    Perm::parse_cycles(text, &names).unwrap()
}

fn group(gens: &[&str]) -> PermutationGroup {
    let gens: Vec<Perm> = gens.iter().map(|g| s5(g)).collect();
    PermutationGroup::generate(5, &gens).unwrap()
}

#[test]
fn kneser_model() {
    let g = build_petersen();
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
    assert!(g.adjacent(kneser_index(1, 2), kneser_index(3, 4)));
    assert!(!g.adjacent(kneser_index(1, 2), kneser_index(1, 3)));
    let rot = s5_action(&s5("(12345)")).mapping;
    assert_eq!(rot.apply(kneser_index(1, 2)), kneser_index(2, 3));
    assert!(s5_action(&Perm::identity(5)).mapping.is_identity());
}

#[test]
fn cycle_census() {
    let g = build_petersen();
    let counts: BTreeMap<usize, usize> = enumerate_cycles(&g)
        .into_iter()
        .map(|(len, cs)| (len, cs.len()))
        .collect();
    assert_eq!(counts.keys().copied().collect::<Vec<_>>(), vec![5, 6, 8, 9]);
    assert_eq!(counts[&5], 12);
    assert_eq!(g.girth(), Some(5));
}

#[test]
fn setwise_stabilizers_by_brute_force() {
    let g = build_petersen();
    let aut = automorphism_group();
    let autos = brute_force_automorphisms(&g);
    for pair in disjoint_five_cycle_pairs(&g) {
        for c in [&pair.first, &pair.second] {
            let oracle = autos.iter().filter(|p| &c.image(p) == c).count();
            assert_eq!(oracle, 10);
            let s = stabilizer(&aut, Target::Cycle(c), StabilizerMode::Setwise);
            assert_eq!(s.order(), oracle);
            let pw = stabilizer(&aut, Target::Cycle(c), StabilizerMode::Pointwise);
            assert_eq!(pw.order(), 1);
        }
        let oracle = autos.iter().filter(|p| pair.image(p) == pair).count();
        assert_eq!(oracle, 20);
        assert_eq!(
            stabilizer(&aut, Target::Pair(&pair), StabilizerMode::Setwise).order(),
            oracle
        );
    }
}

#[test]
fn isomorphism_search() {
    let g = build_petersen();
    let id = verify_petersen_isomorphic(&g).unwrap();
    assert!(id.iter().enumerate().all(|(i, &j)| i == j));
    let names = ["1", "2", "3", "4", "5", "a", "b", "c", "d", "e"];
    let edges = [
        ("1", "2"),
        ("2", "3"),
        ("3", "4"),
        ("4", "5"),
        ("5", "1"),
        ("a", "c"),
        ("c", "e"),
        ("e", "b"),
        ("b", "d"),
        ("d", "a"),
        ("1", "a"),
        ("2", "b"),
        ("3", "c"),
        ("4", "d"),
        ("5", "e"),
    ];
    let fig = Graph::from_named_edges(&names, &edges).unwrap();
    let f = verify_petersen_isomorphic(&fig).unwrap();
    for &(u, v) in fig.edges() {
        assert!(g.adjacent(f[u], f[v]));
    }
    let ring: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    let ring = Graph::new((0..10).map(|i| i.to_string()).collect(), &ring).unwrap();
    assert!(matches!(
        verify_petersen_isomorphic(&ring),
        Err(GraphError::NotPetersen(_))
    ));
}

#[test]
fn identification_examples() {
    assert_eq!(
        identify(&group(&["(12345)", "(25)(34)"])),
        Some(GroupName::D5)
    );
    assert_eq!(
        identify(&group(&["(12)(34)", "(13)(24)"])),
        Some(GroupName::D2)
    );
    let f20 = group(&["(12345)", "(2354)"]);
    assert_eq!(f20.order(), 20);
    assert_eq!(identify(&f20), Some(GroupName::F20));
    assert!(!contains_klein_four(&f20));
    assert!(contains_klein_four(&symmetric_group_s5()));
    assert!(!contains_klein_four(&group(&["(12345)"])));
    assert_eq!(
        element_order_spectrum(&f20),
        BTreeMap::from([(1, 1), (2, 5), (4, 10), (5, 4)])
    );
    assert_eq!(
        element_order_spectrum(&group(&["(12345)"])),
        BTreeMap::from([(1, 1), (5, 4)])
    );
}

#[test]
fn subgroup_class_examples() {
    use GroupName::*;
    let names = |g: &PermutationGroup| subgroup_classes(g).unwrap().into_iter().collect::<Vec<_>>();
    assert_eq!(names(&group(&["(12345)"])), vec![Trivial, Z5]);
    assert_eq!(
        names(&group(&["(12345)", "(2354)"])),
        vec![Trivial, Z2, Z4, Z5, D5, F20]
    );
    assert_eq!(names(&symmetric_group_s5()).len(), 16);
}
