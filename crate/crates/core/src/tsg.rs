//! Bounds on the topological symmetry group of an embedded Petersen graph.
//!
//! The upper bound collects every signed automorphism that respects the
//! embedding's invariants (cycle knots, linking numbers of disjoint 5-cycle
//! pairs, edge decorations) and survives the structural filters. The lower
//! bound is generated by certificates: automorphisms known to be induced by
//! homeomorphisms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::{
    canonical_decorations, cycle_diagram, diagram_symmetries, linking_number, Decoration,
    DiagramError, Direction, SpatialDiagram,
};
use crate::group::{
    identify, identify_name, is_closed_signed, signed_closure, subgroups, GroupError, GroupName,
    Perm, PermutationGroup, Sign, SignedAutomorphism,
};
use crate::knot::{Invariants, KnotError};
use crate::knot_id::{identify_invariants, transform_id, KnotId};
use crate::petersen::{
    brute_force_automorphisms, disjoint_five_cycle_pairs, enumerate_cycles, symmetric_group_s5,
    verify_petersen_isomorphic, Cycle, CyclePair, Graph, GraphError,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TsgError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("signed compatible set is not closed under composition")]
    NotClosed,
    #[error("certificate {certificate} is invalid: {clause}")]
    InvalidCertificate { certificate: String, clause: String },
    #[error("certificate file line {line}: {message}")]
    CertificateSyntax { line: usize, message: String },
    #[error("realizability catalog mismatch: {0}")]
    CatalogMismatch(String),
}

/// Invariants of an embedding that every inducing homeomorphism must respect.
#[derive(Clone, Debug)]
pub struct EmbeddingProfile {
    graph: Graph,
    /// Unoriented, chirality-signed knot type of every cycle.
    pub cycle_knots: BTreeMap<Cycle, KnotId>,
    /// `|lk|` of each pair of disjoint 5-cycles.
    pub pair_linking: BTreeMap<CyclePair, u64>,
    pub decorations: BTreeMap<usize, Vec<Decoration>>,
    pub notes: Vec<String>,
}

impl EmbeddingProfile {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parity(&self, pair: &CyclePair) -> bool {
        self.pair_linking[pair] % 2 == 1
    }

    /// Cycles whose knot type is not the unknot.
    pub fn knotted_cycles(&self) -> impl Iterator<Item = (&Cycle, &KnotId)> {
        self.cycle_knots.iter().filter(|(_, k)| !k.is_unknot())
    }
}

fn knot_id_of_factors(
    base: KnotId,
    base_invariants: &Invariants,
    extra: &[(Decoration, bool)],
) -> KnotId {
    match base {
        KnotId::Composite(mut factors) => {
            for &(deco, along) in extra {
                let single = KnotId::composite(vec![(deco.knot, deco.sign)]);
                if let Ok(KnotId::Composite(f)) = transform_id(&single, false, !along) {
                    factors.extend(f);
                }
            }
            KnotId::composite(factors)
        }
        KnotId::Unknown(_) => KnotId::Unknown(
            extra
                .iter()
                .fold(base_invariants.clone(), |acc, (deco, _)| {
                    acc.sum(&deco.knot.entry().invariants_for(deco.sign))
                }),
        ),
    }
}

/// Cycle knots (including decorations met along the cycle) and pair linking numbers.
pub fn invariant_profile(diagram: &SpatialDiagram) -> Result<EmbeddingProfile, TsgError> {
    let graph = diagram.graph().clone();
    verify_petersen_isomorphic(&graph)?;
    let cycles: Vec<Cycle> = enumerate_cycles(&graph).into_values().flatten().collect();
    let knots: Vec<Result<(Cycle, KnotId, bool), TsgError>> = cycles
        .par_iter()
        .map(|c| {
            let kd = cycle_diagram(diagram, c)?;
            let inv = Invariants::of(&kd)?;
            let base = identify_invariants(&inv);
            let base_chiral_noninvertible = matches!(&base, KnotId::Composite(f)
                if f.iter().any(|(k, _)| !k.symmetry().reverse));
            let mut extra = Vec::new();
            for (u, v) in c.steps() {
                let e = graph.edge_index(u, v).expect("cycle edges exist");
                let forward = graph.edges()[e].0 == u;
                for d in diagram.decorations_on(e) {
                    extra.push((*d, forward == (d.direction == Direction::Forward)));
                }
            }
            let id = knot_id_of_factors(base, &inv, &extra).unoriented();
            Ok((c.clone(), id, base_chiral_noninvertible))
        })
        .collect();
    let mut cycle_knots = BTreeMap::new();
    let mut notes = Vec::new();
    for r in knots {
        let (c, id, noninvertible) = r?;
        if noninvertible {
            notes.push(format!(
                "cycle {} has a non-invertible constituent knot in the base diagram; \
                 its orientation is not used",
                c.display(&graph)
            ));
        }
        cycle_knots.insert(c, id);
    }
    let mut pair_linking = BTreeMap::new();
    for pair in disjoint_five_cycle_pairs(&graph) {
        let lk = linking_number(diagram, &pair.first, &pair.second)?;
        pair_linking.insert(pair, lk.unsigned_abs());
    }
    Ok(EmbeddingProfile {
        graph,
        cycle_knots,
        pair_linking,
        decorations: diagram.decorations().clone(),
        notes,
    })
}

/// Whether the six pair parities sum to 1 mod 2, as they must for any embedding.
pub fn mod2_linking_check(profile: &EmbeddingProfile) -> bool {
    mod2_parities(profile.pair_linking.values().map(|lk| lk % 2 == 1))
}

pub fn mod2_parities(parities: impl IntoIterator<Item = bool>) -> bool {
    parities.into_iter().filter(|&p| p).count() % 2 == 1
}

/// The first invariant class a signed automorphism fails to respect.
pub fn compatibility_violation(
    profile: &EmbeddingProfile,
    s: &SignedAutomorphism,
) -> Option<&'static str> {
    let g = &profile.graph;
    if s.perm.degree() != g.vertex_count() || !g.is_automorphism(&s.perm) {
        return Some("not an automorphism of the underlying graph");
    }
    for (c, k) in &profile.cycle_knots {
        let expected = match s.sign {
            Sign::Plus => k.clone(),
            Sign::Minus => k.mirror().unoriented(),
        };
        if profile.cycle_knots[&c.image(&s.perm)] != expected {
            return Some("cycle knot types");
        }
    }
    for (pair, lk) in &profile.pair_linking {
        if profile.pair_linking[&pair.image(&s.perm)] != *lk {
            return Some("linking numbers of disjoint 5-cycle pairs");
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (a, b) = (s.perm.apply(u), s.perm.apply(v));
        let f = g
            .edge_index(a, b)
            .expect("automorphisms map edges to edges");
        let flip = g.edges()[f].0 != a;
        let empty = Vec::new();
        let here = profile.decorations.get(&e).unwrap_or(&empty);
        let there = profile.decorations.get(&f).unwrap_or(&empty);
        let moved: Vec<Decoration> = here.iter().map(|d| d.transport(flip, s.sign)).collect();
        if canonical_decorations(&moved) != canonical_decorations(there) {
            return Some("edge decorations");
        }
    }
    None
}

/// Every signed automorphism respecting the profile; checked to be closed.
pub fn signed_compatible_group(
    profile: &EmbeddingProfile,
) -> Result<BTreeSet<SignedAutomorphism>, TsgError> {
    let autos = brute_force_automorphisms(&profile.graph);
    let set: BTreeSet<SignedAutomorphism> = autos
        .into_iter()
        .flat_map(|p| [Sign::Plus, Sign::Minus].map(|s| SignedAutomorphism::new(p.clone(), s)))
        .filter(|s| compatibility_violation(profile, s).is_none())
        .collect();
    if !is_closed_signed(&set) {
        return Err(TsgError::NotClosed);
    }
    Ok(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FilterRule {
    OrderSix,
    OrientationPreservingOrderFour,
    KleinFour,
}

impl FilterRule {
    pub fn reason(self) -> &'static str {
        match self {
            FilterRule::OrderSix => {
                "no homeomorphism of an embedded Petersen graph induces an automorphism of order 6"
            }
            FilterRule::OrientationPreservingOrderFour => {
                "no orientation-preserving homeomorphism induces an automorphism of order 4"
            }
            FilterRule::KleinFour => {
                "a group containing a Klein four-subgroup is never a topological symmetry group \
                 of the Petersen graph"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterNote {
    pub rule: FilterRule,
    /// Elements removed (zero for flags).
    pub removed: usize,
}

impl fmt::Display for FilterNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rule {
            FilterRule::KleinFour => write!(f, "flagged: {}", self.rule.reason()),
            _ => write!(f, "removed {}: {}", self.removed, self.rule.reason()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FilterResult {
    pub kept: BTreeSet<SignedAutomorphism>,
    pub notes: Vec<FilterNote>,
    /// The full projection of `kept` contains a Klein four-group.
    pub klein_four: bool,
}

/// Distinct commuting involutions whose product is again an involution.
pub fn set_contains_klein_four<'a>(elements: impl IntoIterator<Item = &'a Perm>) -> bool {
    let invs: Vec<&Perm> = elements.into_iter().filter(|p| p.order() == 2).collect();
    let set: BTreeSet<&Perm> = invs.iter().copied().collect();
    invs.iter().enumerate().any(|(i, a)| {
        invs[i + 1..].iter().any(|b| {
            let ab = a.compose(b);
            ab == b.compose(a) && ab.order() == 2 && set.contains(&ab)
        })
    })
}

pub fn theorem_filter(candidates: &BTreeSet<SignedAutomorphism>) -> FilterResult {
    let mut kept = BTreeSet::new();
    let (mut six, mut four) = (0, 0);
    for s in candidates {
        match (s.perm.order(), s.sign) {
            (6, _) => six += 1,
            (4, Sign::Plus) => four += 1,
            _ => {
                kept.insert(s.clone());
            }
        }
    }
    let mut notes = Vec::new();
    if six > 0 {
        notes.push(FilterNote {
            rule: FilterRule::OrderSix,
            removed: six,
        });
    }
    if four > 0 {
        notes.push(FilterNote {
            rule: FilterRule::OrientationPreservingOrderFour,
            removed: four,
        });
    }
    let projection: BTreeSet<&Perm> = kept.iter().map(|s| &s.perm).collect();
    let klein_four = set_contains_klein_four(projection);
    if klein_four {
        notes.push(FilterNote {
            rule: FilterRule::KleinFour,
            removed: 0,
        });
    }
    FilterResult {
        kept,
        notes,
        klein_four,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    DiagramSymmetry,
    Cited(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub signed: SignedAutomorphism,
    pub provenance: Provenance,
}

/// Certificates for every combinatorial symmetry of the diagram.
pub fn diagram_certificates(diagram: &SpatialDiagram) -> Vec<Certificate> {
    diagram_symmetries(diagram)
        .into_iter()
        .map(|s| Certificate {
            signed: s.signed,
            provenance: Provenance::DiagramSymmetry,
        })
        .collect()
}

/// Reads lines `cert <+|-> <cycle notation> cited <text>` (`#` comments).
pub fn parse_certificates(text: &str, graph: &Graph) -> Result<Vec<Certificate>, TsgError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| TsgError::CertificateSyntax {
            line: i + 1,
            message,
        };
        let rest = line
            .strip_prefix("cert ")
            .ok_or_else(|| err("expected `cert <+|-> <cycles> cited <text>`".into()))?;
        let (sign, rest) = rest
            .trim_start()
            .split_once(' ')
            .ok_or_else(|| err("missing permutation".into()))?;
        let sign = Sign::parse(sign).ok_or_else(|| err(format!("bad sign `{sign}`")))?;
        let (cycles, anchor) = match rest.split_once(" cited ") {
            Some((c, a)) => (c.trim(), a.trim()),
            None => (rest.trim(), ""),
        };
        if anchor.is_empty() {
            return Err(err("a certificate needs `cited <text>`".into()));
        }
        let perm = Perm::parse_cycles(cycles, graph.names())
            .map_err(|e| err(format!("bad permutation `{cycles}`: {e}")))?;
        out.push(Certificate {
            signed: SignedAutomorphism::new(perm, sign),
            provenance: Provenance::Cited(anchor.to_string()),
        });
    }
    Ok(out)
}

/// Lower and upper bound for one column (full or orientation preserving).
#[derive(Clone, Debug)]
pub struct Bounds {
    pub lower: PermutationGroup,
    pub upper: BTreeSet<Perm>,
    /// `upper` as a group, when it is closed.
    pub upper_group: Option<PermutationGroup>,
    pub exact: bool,
}

impl Bounds {
    fn new(degree: usize, lower: BTreeSet<Perm>, upper: BTreeSet<Perm>) -> Bounds {
        let lower = PermutationGroup::from_elements(degree, lower)
            .expect("closure of certificates is a group");
        let upper_group = PermutationGroup::from_elements(degree, upper.clone());
        let exact = upper_group.is_some()
            && lower.element_set() == &upper
            && !set_contains_klein_four(upper.iter());
        Bounds {
            lower,
            upper,
            upper_group,
            exact,
        }
    }

    pub fn lower_name(&self) -> String {
        identify_name(&self.lower)
    }

    pub fn upper_name(&self) -> String {
        match &self.upper_group {
            Some(g) => identify_name(g),
            None => format!("non-group({})", self.upper.len()),
        }
    }

    /// The determined group, if the bounds meet.
    pub fn exact_name(&self) -> Option<GroupName> {
        if self.exact {
            identify(&self.lower)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug)]
pub struct TsgReport {
    pub full: Bounds,
    pub op: Bounds,
    pub filter_notes: Vec<FilterNote>,
    pub mod2_ok: bool,
    pub profile_notes: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl TsgReport {
    /// `tsg full=<name> op=<name> exact_full=<0|1> exact_op=<0|1> mod2=<0|1>`,
    /// naming the certified lower bounds.
    pub fn machine_line(&self) -> String {
        format!(
            "tsg full={} op={} exact_full={} exact_op={} mod2={}",
            self.full.lower_name(),
            self.op.lower_name(),
            u8::from(self.full.exact),
            u8::from(self.op.exact),
            u8::from(self.mod2_ok)
        )
    }
}

fn project<'a>(
    set: impl IntoIterator<Item = &'a SignedAutomorphism>,
    op_only: bool,
) -> BTreeSet<Perm> {
    set.into_iter()
        .filter(|s| !op_only || s.sign == Sign::Plus)
        .map(|s| s.perm.clone())
        .collect()
}

pub fn classify(
    diagram: &SpatialDiagram,
    certificates: &[Certificate],
) -> Result<TsgReport, TsgError> {
    let profile = invariant_profile(diagram)?;
    classify_profile(&profile, certificates)
}

pub fn classify_profile(
    profile: &EmbeddingProfile,
    certificates: &[Certificate],
) -> Result<TsgReport, TsgError> {
    let degree = profile.graph.vertex_count();
    let names = profile.graph.names();
    let compatible = signed_compatible_group(profile)?;
    let filtered = theorem_filter(&compatible);
    for c in certificates {
        let label = || format!("{} {}", c.signed.sign, c.signed.perm.to_cycle_string(names));
        if let Some(clause) = compatibility_violation(profile, &c.signed) {
            return Err(TsgError::InvalidCertificate {
                certificate: label(),
                clause: clause.to_string(),
            });
        }
        if !filtered.kept.contains(&c.signed) {
            return Err(TsgError::InvalidCertificate {
                certificate: label(),
                clause: "excluded by the order filters".to_string(),
            });
        }
    }
    let gens: Vec<SignedAutomorphism> = certificates.iter().map(|c| c.signed.clone()).collect();
    let lower = signed_closure(degree, &gens);
    if !lower.is_subset(&filtered.kept) {
        return Err(TsgError::InvalidCertificate {
            certificate: "closure of all certificates".to_string(),
            clause: "a product of certificates is excluded by the order filters".to_string(),
        });
    }
    let full = Bounds::new(
        degree,
        project(&lower, false),
        project(&filtered.kept, false),
    );
    let op = Bounds::new(degree, project(&lower, true), project(&filtered.kept, true));
    Ok(TsgReport {
        full,
        op,
        filter_notes: filtered.notes,
        mod2_ok: mod2_linking_check(profile),
        profile_notes: profile.notes.clone(),
        certificates: certificates.to_vec(),
    })
}

pub const REALIZABLE: [GroupName; 8] = [
    GroupName::Trivial,
    GroupName::Z2,
    GroupName::Z3,
    GroupName::Z4,
    GroupName::Z5,
    GroupName::D3,
    GroupName::D5,
    GroupName::F20,
];

pub const POSITIVELY_REALIZABLE: [GroupName; 6] = [
    GroupName::Trivial,
    GroupName::Z2,
    GroupName::Z3,
    GroupName::Z5,
    GroupName::D3,
    GroupName::D5,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizabilityCatalog {
    pub realizable: BTreeSet<GroupName>,
    pub positively_realizable: BTreeSet<GroupName>,
    /// Subgroup classes of S₅ not excluded by the structural filters.
    pub filter_survivors: BTreeSet<GroupName>,
    pub positive_filter_survivors: BTreeSet<GroupName>,
}

/// Subgroup classes of S₅ surviving the filters: no Klein four-subgroup, no
/// element of order 6, and (for the positive list) no element of order 4.
pub fn filter_survivors() -> Result<(BTreeSet<GroupName>, BTreeSet<GroupName>), TsgError> {
    let mut full = BTreeSet::new();
    let mut positive = BTreeSet::new();
    for h in subgroups(&symmetric_group_s5())? {
        let name = identify(&h).ok_or(GroupError::UnrecognizedSubgroup(h.order()))?;
        let orders: BTreeSet<u32> = h.elements().map(Perm::order).collect();
        if crate::group::contains_klein_four(&h) || orders.contains(&6) {
            continue;
        }
        full.insert(name);
        if !orders.contains(&4) {
            positive.insert(name);
        }
    }
    Ok((full, positive))
}

/// The stored lists, recomputed as filter survivors intersected with the
/// classes certified exactly by classification, and checked for agreement.
pub fn realizability_catalog(
    certified_full: &BTreeSet<GroupName>,
    certified_op: &BTreeSet<GroupName>,
) -> Result<RealizabilityCatalog, TsgError> {
    let (survivors, positive_survivors) = filter_survivors()?;
    let realizable: BTreeSet<GroupName> = survivors.intersection(certified_full).copied().collect();
    let positively_realizable: BTreeSet<GroupName> = positive_survivors
        .intersection(certified_op)
        .copied()
        .collect();
    let stored: BTreeSet<GroupName> = REALIZABLE.into_iter().collect();
    let stored_positive: BTreeSet<GroupName> = POSITIVELY_REALIZABLE.into_iter().collect();
    let show = |s: &BTreeSet<GroupName>| {
        s.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    if realizable != stored {
        return Err(TsgError::CatalogMismatch(format!(
            "realizable recomputed as {{{}}}",
            show(&realizable)
        )));
    }
    if positively_realizable != stored_positive {
        return Err(TsgError::CatalogMismatch(format!(
            "positively realizable recomputed as {{{}}}",
            show(&positively_realizable)
        )));
    }
    Ok(RealizabilityCatalog {
        realizable,
        positively_realizable,
        filter_survivors: survivors,
        positive_filter_survivors: positive_survivors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm {
        let names: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
        Perm::parse_cycles(s, &names).unwrap()
    }

    fn signed(s: &str, sign: Sign) -> SignedAutomorphism {
        SignedAutomorphism::new(perm(s), sign)
    }

    #[test]
    fn filter_removes_orders_six_and_positive_four() {
        let input: BTreeSet<SignedAutomorphism> = [
            signed("()", Sign::Plus),
            signed("(123)(45)", Sign::Plus),
            signed("(123)(45)", Sign::Minus),
            signed("(1234)", Sign::Plus),
            signed("(1234)", Sign::Minus),
        ]
        .into_iter()
        .collect();
        let out = theorem_filter(&input);
        assert_eq!(out.kept.len(), 2);
        assert!(out.kept.contains(&signed("(1234)", Sign::Minus)));
        let rules: Vec<FilterRule> = out.notes.iter().map(|n| n.rule).collect();
        assert_eq!(
            rules,
            vec![
                FilterRule::OrderSix,
                FilterRule::OrientationPreservingOrderFour
            ]
        );
    }

    #[test]
    fn identity_passes_unchanged() {
        let input = BTreeSet::from([signed("()", Sign::Plus)]);
        let out = theorem_filter(&input);
        assert_eq!(out.kept, input);
        assert!(out.notes.is_empty());
    }

    #[test]
    fn klein_four_is_flagged_not_removed() {
        let input: BTreeSet<SignedAutomorphism> = ["()", "(12)(34)", "(13)(24)", "(14)(23)"]
            .into_iter()
            .map(|s| signed(s, Sign::Plus))
            .collect();
        let out = theorem_filter(&input);
        assert_eq!(out.kept, input);
        assert!(out.klein_four);
    }

    #[test]
    fn parity_check() {
        assert!(!mod2_parities([false; 6]));
        assert!(mod2_parities([true, false, false, false, false, false]));
        assert!(!mod2_parities([true, true, false, false, false, false]));
    }

    #[test]
    fn survivors_match_structural_exclusions() {
        let (full, positive) = filter_survivors().unwrap();
        let excluded: BTreeSet<GroupName> = GroupName::ALL
            .into_iter()
            .filter(|n| !full.contains(n))
            .collect();
        use GroupName::*;
        assert_eq!(excluded, BTreeSet::from([S5, S4, A5, A4, D6, D4, D2, Z6]));
        let extra: BTreeSet<GroupName> = full.difference(&positive).copied().collect();
        assert_eq!(extra, BTreeSet::from([F20, Z4]));
    }
}
