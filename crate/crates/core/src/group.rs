//! Finite permutation groups on at most a few dozen points.
//!
//! Elements are dense image arrays. Composition follows the functional
//! convention: `p.compose(&q)` applies `q` first, then `p`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutations act on different point sets ({expected} vs {found} points)")]
    MixedDomains { expected: usize, found: usize },
    #[error("not a bijection: {0:?}")]
    NotBijection(Vec<usize>),
    #[error("group of order {0} exceeds the subgroup enumeration limit of 120")]
    TooLarge(usize),
    #[error("subgroup of order {0} is not in the catalog")]
    UnrecognizedSubgroup(usize),
    #[error("cannot parse permutation `{0}`")]
    BadCycleNotation(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u8).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotBijection(images));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_iter().map(|i| i as u8).collect()))
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree || touched[p] {
                    return Err(GroupError::NotBijection(cycle.to_vec()));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Parses cycle notation such as `(12345)(acebd)` or `(1 2)(x10 x11)` against
    /// a list of point names. Without spaces inside a cycle every character is
    /// one point name.
    pub fn parse_cycles(text: &str, names: &[String]) -> Result<Self, GroupError> {
        let bad = || GroupError::BadCycleNotation(text.to_string());
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "()" || trimmed == "id" {
            return Ok(Perm::identity(names.len()));
        }
        let mut rest = trimmed;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            let body_start = rest_trim.strip_prefix('(').ok_or_else(bad)?;
            let close = body_start.find(')').ok_or_else(bad)?;
            let body = &body_start[..close];
            let tokens: Vec<String> = if body.contains(char::is_whitespace) {
                body.split_whitespace().map(str::to_string).collect()
            } else {
                body.chars().map(|c| c.to_string()).collect()
            };
            let cycle = tokens
                .iter()
                .map(|t| index.get(t.as_str()).copied().ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(cycle);
            rest = body_start[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(names.len(), &refs).map_err(|_| bad())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn pow(&self, mut exp: u32) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.cycles()
            .iter()
            .fold(1u32, |acc, c| lcm(acc, c.len() as u32))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Cycle notation using the given point names; spaces separate multi-character names.
    pub fn to_cycle_string(&self, names: &[String]) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let spaced = names.iter().any(|n| n.chars().count() != 1);
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<&str> = c.iter().map(|&i| names[i].as_str()).collect();
            s.push_str(&parts.join(if spaced { " " } else { "" }));
            s.push(')');
        }
        s
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// 1-based cycle notation.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.degree()).map(|i| i.to_string()).collect();
        write!(f, "{}", self.to_cycle_string(&names))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: BTreeSet<Perm>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        let id = Perm::identity(degree);
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: BTreeSet::from([id]),
        }
    }

    /// Smallest group containing `gens`.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Self, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::MixedDomains {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut elements = BTreeSet::from([Perm::identity(degree)]);
        let mut queue: VecDeque<Perm> = elements.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.compose(&x);
                if elements.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(PermutationGroup {
            degree,
            generators: gens,
            elements,
        })
    }

    /// Wraps an element set, returning `None` unless it is closed and contains the identity.
    pub fn from_elements(degree: usize, elements: BTreeSet<Perm>) -> Option<Self> {
        if !elements.contains(&Perm::identity(degree)) {
            return None;
        }
        for a in &elements {
            if a.degree() != degree {
                return None;
            }
            for b in &elements {
                if !elements.contains(&a.compose(b)) {
                    return None;
                }
            }
        }
        Some(PermutationGroup {
            degree,
            generators: elements
                .iter()
                .filter(|e| !e.is_identity())
                .cloned()
                .collect(),
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.elements.iter()
    }

    pub fn element_set(&self) -> &BTreeSet<Perm> {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Elements satisfying `keep`, as a group if the filtered set is closed.
    pub fn filter(&self, keep: impl Fn(&Perm) -> bool) -> Option<PermutationGroup> {
        let set: BTreeSet<Perm> = self.elements.iter().filter(|p| keep(p)).cloned().collect();
        PermutationGroup::from_elements(self.degree, set)
    }

    pub fn conjugate_by(&self, g: &Perm) -> PermutationGroup {
        let g_inv = g.inverse();
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|x| g.compose(x).compose(&g_inv))
            .collect();
        let elements = self
            .elements
            .iter()
            .map(|x| g.compose(x).compose(&g_inv))
            .collect();
        PermutationGroup {
            degree: self.degree,
            generators: gens,
            elements,
        }
    }
}

/// Multiset of element orders, as order → multiplicity.
pub fn element_order_spectrum(group: &PermutationGroup) -> BTreeMap<u32, usize> {
    let mut spectrum = BTreeMap::new();
    for e in group.elements() {
        *spectrum.entry(e.order()).or_insert(0) += 1;
    }
    spectrum
}

pub fn contains_klein_four(group: &PermutationGroup) -> bool {
    let involutions: Vec<&Perm> = group.elements().filter(|e| e.order() == 2).collect();
    involutions.iter().enumerate().any(|(i, a)| {
        involutions[i + 1..]
            .iter()
            .any(|b| a.compose(b) == b.compose(a))
    })
}

/// Isomorphism classes of the subgroups of the symmetric group on five letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    Trivial,
    Z2,
    Z3,
    Z4,
    Z5,
    Z6,
    D2,
    D3,
    D4,
    D5,
    D6,
    A4,
    /// The Frobenius group Z5 ⋊ Z4.
    F20,
    S4,
    A5,
    S5,
}

impl GroupName {
    pub const ALL: [GroupName; 16] = [
        GroupName::Trivial,
        GroupName::Z2,
        GroupName::Z3,
        GroupName::Z4,
        GroupName::Z5,
        GroupName::Z6,
        GroupName::D2,
        GroupName::D3,
        GroupName::D4,
        GroupName::D5,
        GroupName::D6,
        GroupName::A4,
        GroupName::F20,
        GroupName::S4,
        GroupName::A5,
        GroupName::S5,
    ];

    pub fn order(self) -> usize {
        self.signature().iter().map(|&(_, n)| n).sum()
    }

    pub fn is_abelian(self) -> bool {
        matches!(
            self,
            GroupName::Trivial
                | GroupName::Z2
                | GroupName::Z3
                | GroupName::Z4
                | GroupName::Z5
                | GroupName::Z6
                | GroupName::D2
        )
    }

    /// Element-order spectrum as (order, count) pairs.
    pub fn signature(self) -> &'static [(u32, usize)] {
        use GroupName::*;
        match self {
            Trivial => &[(1, 1)],
            Z2 => &[(1, 1), (2, 1)],
            Z3 => &[(1, 1), (3, 2)],
            Z4 => &[(1, 1), (2, 1), (4, 2)],
            Z5 => &[(1, 1), (5, 4)],
            Z6 => &[(1, 1), (2, 1), (3, 2), (6, 2)],
            D2 => &[(1, 1), (2, 3)],
            D3 => &[(1, 1), (2, 3), (3, 2)],
            D4 => &[(1, 1), (2, 5), (4, 2)],
            D5 => &[(1, 1), (2, 5), (5, 4)],
            D6 => &[(1, 1), (2, 7), (3, 2), (6, 2)],
            A4 => &[(1, 1), (2, 3), (3, 8)],
            F20 => &[(1, 1), (2, 5), (4, 10), (5, 4)],
            S4 => &[(1, 1), (2, 9), (3, 8), (4, 6)],
            A5 => &[(1, 1), (2, 15), (3, 20), (5, 24)],
            S5 => &[(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)],
        }
    }

    pub fn parse(s: &str) -> Option<GroupName> {
        GroupName::ALL.iter().copied().find(|g| g.to_string() == s)
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupName::Trivial => "Trivial",
            GroupName::Z2 => "Z2",
            GroupName::Z3 => "Z3",
            GroupName::Z4 => "Z4",
            GroupName::Z5 => "Z5",
            GroupName::Z6 => "Z6",
            GroupName::D2 => "D2",
            GroupName::D3 => "D3",
            GroupName::D4 => "D4",
            GroupName::D5 => "D5",
            GroupName::D6 => "D6",
            GroupName::A4 => "A4",
            GroupName::F20 => "F20",
            GroupName::S4 => "S4",
            GroupName::A5 => "A5",
            GroupName::S5 => "S5",
        };
        f.write_str(s)
    }
}

/// Names a group by (order, commutativity, element-order spectrum).
/// Returns `None` for groups outside the catalog.
pub fn identify(group: &PermutationGroup) -> Option<GroupName> {
    let spectrum = element_order_spectrum(group);
    let abelian = group.is_abelian();
    GroupName::ALL.iter().copied().find(|name| {
        name.is_abelian() == abelian
            && name.signature().len() == spectrum.len()
            && name
                .signature()
                .iter()
                .all(|(o, n)| spectrum.get(o) == Some(n))
    })
}

pub fn identify_name(group: &PermutationGroup) -> String {
    identify(group).map_or_else(|| "Unrecognized".to_string(), |n| n.to_string())
}

/// Every subgroup of `group`: closures of all subsets of at most two elements,
/// saturated under pairwise joins.
pub fn subgroups(group: &PermutationGroup) -> Result<Vec<PermutationGroup>, GroupError> {
    let n = group.order();
    if n > 120 {
        return Err(GroupError::TooLarge(n));
    }
    let elements: Vec<&Perm> = group.elements().collect();
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let id = index[&Perm::identity(group.degree())];

    let closure = |gens: &[usize]| -> u128 {
        let mut mask = 1u128 << id;
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = table[g][x];
                if mask & (1u128 << y) == 0 {
                    mask |= 1u128 << y;
                    queue.push(y);
                }
            }
        }
        mask
    };

    let mut found: BTreeMap<u128, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let gens = vec![i, j];
            found.entry(closure(&gens)).or_insert(gens);
        }
    }
    loop {
        let current: Vec<(u128, Vec<usize>)> = found.iter().map(|(m, g)| (*m, g.clone())).collect();
        let mut added = false;
        for (a, (ma, ga)) in current.iter().enumerate() {
            for (mb, gb) in &current[a + 1..] {
                if ma & mb == *mb || ma & mb == *ma {
                    continue;
                }
                let gens: Vec<usize> = ga.iter().chain(gb).copied().collect();
                let m = closure(&gens);
                if let std::collections::btree_map::Entry::Vacant(e) = found.entry(m) {
                    e.insert(gens);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }

    let degree = group.degree();
    Ok(found
        .keys()
        .map(|&mask| {
            let set: BTreeSet<Perm> = (0..n)
                .filter(|&i| mask & (1u128 << i) != 0)
                .map(|i| elements[i].clone())
                .collect();
            PermutationGroup {
                degree,
                generators: found[&mask].iter().map(|&i| elements[i].clone()).collect(),
                elements: set,
            }
        })
        .collect())
}

pub fn subgroup_classes(group: &PermutationGroup) -> Result<BTreeSet<GroupName>, GroupError> {
    subgroups(group)?
        .iter()
        .map(|h| identify(h).ok_or(GroupError::UnrecognizedSubgroup(h.order())))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A graph automorphism tagged with the orientation character of an inducing
/// homeomorphism (`Plus` = orientation preserving).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedAutomorphism {
    pub perm: Perm,
    pub sign: Sign,
}

impl SignedAutomorphism {
    pub fn new(perm: Perm, sign: Sign) -> Self {
        SignedAutomorphism { perm, sign }
    }

    pub fn identity(degree: usize) -> Self {
        SignedAutomorphism::new(Perm::identity(degree), Sign::Plus)
    }

    pub fn compose(&self, other: &SignedAutomorphism) -> SignedAutomorphism {
        SignedAutomorphism::new(self.perm.compose(&other.perm), self.sign * other.sign)
    }

    pub fn inverse(&self) -> SignedAutomorphism {
        SignedAutomorphism::new(self.perm.inverse(), self.sign)
    }
}

/// Closure of a set of signed automorphisms under composition.
pub fn signed_closure(degree: usize, gens: &[SignedAutomorphism]) -> BTreeSet<SignedAutomorphism> {
    let mut out = BTreeSet::from([SignedAutomorphism::identity(degree)]);
    let mut queue: VecDeque<SignedAutomorphism> = out.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if out.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    out
}

/// True when the set contains the identity and is closed under composition.
pub fn is_closed_signed(set: &BTreeSet<SignedAutomorphism>) -> bool {
    let Some(first) = set.iter().next() else {
        return false;
    };
    if !set.contains(&SignedAutomorphism::identity(first.perm.degree())) {
        return false;
    }
    set.iter()
        .all(|a| set.iter().all(|b| set.contains(&a.compose(b))))
}
