//! Knot diagrams in planar-diagram form and their polynomial invariants.
//!
//! A crossing lists four arc labels counterclockwise, starting at the incoming
//! under-strand. Arcs are numbered consecutively along the orientation, so arc
//! `k` flows into arc `k + 1 (mod 2n)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::laurent::LaurentPolynomial;

/// Largest crossing count accepted by the bracket state sum.
pub const MAX_STATE_SUM_CROSSINGS: usize = 22;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("diagram has {0} crossings; the state sum is limited to {MAX_STATE_SUM_CROSSINGS}")]
    TooManyCrossings(usize),
    #[error("diagram does not describe a single connected strand")]
    DisconnectedDiagram,
    #[error("malformed planar diagram code: {0}")]
    Malformed(String),
    #[error("transform needs an identified knot, got unknown invariants")]
    UnknownId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    /// Arc labels counterclockwise from the incoming under-strand.
    pub arcs: [usize; 4],
    /// The over-strand runs from position 1 to position 3.
    pub over_forward: bool,
}

impl PdCrossing {
    /// +1 or -1 by the right-hand rule.
    pub fn sign(&self) -> i32 {
        if self.over_forward {
            -1
        } else {
            1
        }
    }

    /// Whether the arc at `pos` enters the crossing (as opposed to leaving it).
    pub fn enters(&self, pos: usize) -> bool {
        match pos {
            0 => true,
            2 => false,
            1 => self.over_forward,
            3 => !self.over_forward,
            _ => unreachable!(),
        }
    }
}

/// A single-component knot diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    arc_count: usize,
    crossings: Vec<PdCrossing>,
}

impl KnotDiagram {
    pub fn unknot() -> Self {
        KnotDiagram {
            arc_count: 0,
            crossings: Vec::new(),
        }
    }

    /// Builds a diagram from oriented crossings, checking the strand structure.
    pub fn new(crossings: Vec<PdCrossing>) -> Result<Self, KnotError> {
        let d = KnotDiagram {
            arc_count: 2 * crossings.len(),
            crossings,
        };
        d.check()?;
        Ok(d)
    }

    /// Reads a standard planar-diagram code with arcs labeled `1..=2n`
    /// (or `0..2n`); over-strand directions are inferred from the labels.
    pub fn from_pd(code: &[[usize; 4]]) -> Result<Self, KnotError> {
        let n = code.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        let m = 2 * n;
        let base = code.iter().flatten().min().copied().unwrap_or(0);
        let mut crossings = Vec::with_capacity(n);
        for x in code {
            let arcs = x.map(|a| a.wrapping_sub(base));
            if arcs.iter().any(|&a| a >= m) {
                return Err(KnotError::Malformed(format!("label out of range in {x:?}")));
            }
            let next = |a: usize| (a + 1) % m;
            let fwd = next(arcs[1]) == arcs[3];
            let bwd = next(arcs[3]) == arcs[1];
            let over_forward = match (fwd, bwd) {
                (true, false) => true,
                (false, true) => false,
                _ => {
                    return Err(KnotError::Malformed(format!(
                        "cannot orient the over-strand of {x:?}"
                    )))
                }
            };
            crossings.push(PdCrossing { arcs, over_forward });
        }
        KnotDiagram::new(crossings)
    }

    /// Closure of a braid on `strands` strands. Generator `i` (1-based) crosses
    /// positions `i` and `i + 1`; a positive entry gives a positive crossing.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self, KnotError> {
        if word.is_empty() {
            return if strands == 1 {
                Ok(Self::unknot())
            } else {
                Err(KnotError::DisconnectedDiagram)
            };
        }
        // Segment ids: the bottom segment at position p is p.
        let mut current: Vec<usize> = (0..strands).collect();
        let mut next_id = strands;
        // (ccw segments from the incoming under-strand, over-strand runs 1 -> 3)
        let mut raw: Vec<([usize; 4], bool)> = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(KnotError::Malformed(format!("bad braid generator {g}")));
            }
            let (bl, br) = (current[i - 1], current[i]);
            let (tl, tr) = (next_id, next_id + 1);
            next_id += 2;
            // The bl -> tr strand goes under for negative generators.
            raw.push(if g < 0 {
                ([bl, br, tr, tl], false)
            } else {
                ([br, tr, tl, bl], true)
            });
            current[i - 1] = tl;
            current[i] = tr;
        }
        // A strand that never crosses closes up into a separate component.
        if current.iter().enumerate().any(|(p, &s)| s == p) {
            return Err(KnotError::DisconnectedDiagram);
        }
        let close: BTreeMap<usize, usize> =
            current.iter().enumerate().map(|(p, &s)| (s, p)).collect();
        let canon = |s: usize| close.get(&s).copied().unwrap_or(s);
        let raw: Vec<([usize; 4], bool)> = raw
            .into_iter()
            .map(|(arcs, reversed_over)| (arcs.map(canon), reversed_over))
            .collect();
        // Successor of each segment along the strand through a crossing.
        let mut succ: BTreeMap<usize, usize> = BTreeMap::new();
        for (arcs, reversed_over) in &raw {
            succ.insert(arcs[0], arcs[2]);
            if *reversed_over {
                succ.insert(arcs[3], arcs[1]);
            } else {
                succ.insert(arcs[1], arcs[3]);
            }
        }
        let mut label: BTreeMap<usize, usize> = BTreeMap::new();
        let mut s = raw[0].0[0];
        while !label.contains_key(&s) {
            label.insert(s, label.len());
            s = *succ.get(&s).ok_or(KnotError::DisconnectedDiagram)?;
        }
        if label.len() != 2 * raw.len() {
            return Err(KnotError::DisconnectedDiagram);
        }
        let crossings = raw
            .into_iter()
            .map(|(arcs, reversed_over)| PdCrossing {
                arcs: arcs.map(|a| label[&a]),
                over_forward: !reversed_over,
            })
            .collect();
        KnotDiagram::new(crossings)
    }

    fn check(&self) -> Result<(), KnotError> {
        let m = self.arc_count;
        let mut starts = vec![0usize; m];
        let mut ends = vec![0usize; m];
        for x in &self.crossings {
            for pos in 0..4 {
                let a = x.arcs[pos];
                if a >= m {
                    return Err(KnotError::Malformed(format!("arc {a} out of range")));
                }
                if x.enters(pos) {
                    ends[a] += 1;
                } else {
                    starts[a] += 1;
                }
            }
            if (x.arcs[0] + 1) % m != x.arcs[2] {
                return Err(KnotError::Malformed(format!(
                    "under-strand {:?} is not consecutive",
                    x.arcs
                )));
            }
            let (i, o) = if x.over_forward {
                (x.arcs[1], x.arcs[3])
            } else {
                (x.arcs[3], x.arcs[1])
            };
            if (i + 1) % m != o {
                return Err(KnotError::Malformed(format!(
                    "over-strand {:?} is not consecutive",
                    x.arcs
                )));
            }
        }
        if starts.iter().chain(&ends).any(|&c| c != 1) {
            return Err(KnotError::DisconnectedDiagram);
        }
        if !self.is_planar() {
            return Err(KnotError::Malformed(
                "crossing rotations are not planar".into(),
            ));
        }
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(PdCrossing::sign).sum()
    }

    /// Standard code with arcs labeled from 1.
    pub fn pd_code(&self) -> Vec<[usize; 4]> {
        self.crossings
            .iter()
            .map(|x| x.arcs.map(|a| a + 1))
            .collect()
    }

    /// Spherical Euler check on the 4-valent projection graph.
    pub fn is_planar(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        // Half-edges are (crossing, position); the twin shares the arc label.
        let mut occurrences: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for pos in 0..4 {
                occurrences.entry(x.arcs[pos]).or_default().push((c, pos));
            }
        }
        let twin = |(c, p): (usize, usize)| -> (usize, usize) {
            let occ = &occurrences[&self.crossings[c].arcs[p]];
            if occ[0] == (c, p) {
                occ[1]
            } else {
                occ[0]
            }
        };
        let mut seen = vec![[false; 4]; n];
        let mut faces = 0;
        for c in 0..n {
            for p in 0..4 {
                if seen[c][p] {
                    continue;
                }
                faces += 1;
                let mut h = (c, p);
                while !seen[h.0][h.1] {
                    seen[h.0][h.1] = true;
                    let t = twin(h);
                    h = (t.0, (t.1 + 1) % 4);
                }
            }
        }
        n as i64 - 2 * n as i64 + faces == 2
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> KnotDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.arcs;
                if x.over_forward {
                    PdCrossing {
                        arcs: [b, c, d, a],
                        over_forward: false,
                    }
                } else {
                    PdCrossing {
                        arcs: [d, a, b, c],
                        over_forward: true,
                    }
                }
            })
            .collect();
        KnotDiagram {
            arc_count: self.arc_count,
            crossings,
        }
    }

    /// Same diagram with the orientation reversed.
    pub fn reverse(&self) -> KnotDiagram {
        let m = self.arc_count;
        let relabel = |a: usize| m - 1 - a;
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.arcs;
                PdCrossing {
                    arcs: [relabel(c), relabel(d), relabel(a), relabel(b)],
                    over_forward: x.over_forward,
                }
            })
            .collect();
        KnotDiagram {
            arc_count: m,
            crossings,
        }
    }

    /// Diagrammatic connected sum, splicing the last arc of each diagram.
    pub fn connected_sum(&self, other: &KnotDiagram) -> KnotDiagram {
        if self.crossings.is_empty() {
            return other.clone();
        }
        if other.crossings.is_empty() {
            return self.clone();
        }
        let m = self.arc_count;
        let p = other.arc_count;
        let joined_a = m - 1;
        let joined_b = m + p - 1;
        let mut crossings = Vec::with_capacity(self.crossings.len() + other.crossings.len());
        for x in &self.crossings {
            let mut arcs = x.arcs;
            for (pos, a) in arcs.iter_mut().enumerate() {
                if *a == m - 1 {
                    *a = if x.enters(pos) { joined_b } else { joined_a };
                }
            }
            crossings.push(PdCrossing {
                arcs,
                over_forward: x.over_forward,
            });
        }
        for x in &other.crossings {
            let mut arcs = x.arcs;
            for (pos, a) in arcs.iter_mut().enumerate() {
                *a = if *a == p - 1 {
                    if x.enters(pos) {
                        joined_a
                    } else {
                        joined_b
                    }
                } else {
                    m + *a
                };
            }
            crossings.push(PdCrossing {
                arcs,
                over_forward: x.over_forward,
            });
        }
        KnotDiagram {
            arc_count: m + p,
            crossings,
        }
    }
}

fn find(parent: &mut [u8], mut x: usize) -> usize {
    while parent[x] as usize != x {
        let up = parent[parent[x] as usize];
        parent[x] = up;
        x = up as usize;
    }
    x
}

/// Kauffman bracket in the variable `A`, normalized so the crossingless
/// circle is 1. Uses ⟨X[a,b,c,d]⟩ = A⟨P[a,b] P[c,d]⟩ + A⁻¹⟨P[a,d] P[b,c]⟩.
pub fn kauffman_bracket(kd: &KnotDiagram) -> Result<LaurentPolynomial, KnotError> {
    let n = kd.crossing_count();
    if n > MAX_STATE_SUM_CROSSINGS {
        return Err(KnotError::TooManyCrossings(n));
    }
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let m = kd.arc_count;
    let a_pairs: Vec<[(usize, usize); 2]> = kd
        .crossings
        .iter()
        .map(|x| [(x.arcs[0], x.arcs[1]), (x.arcs[2], x.arcs[3])])
        .collect();
    let b_pairs: Vec<[(usize, usize); 2]> = kd
        .crossings
        .iter()
        .map(|x| [(x.arcs[0], x.arcs[3]), (x.arcs[1], x.arcs[2])])
        .collect();

    // histogram[b_count][loops]
    let loops_of = |state: u32| -> usize {
        let mut parent: Vec<u8> = (0..m as u8).collect();
        let mut components = m;
        for i in 0..n {
            let pairs = if state >> i & 1 == 0 {
                &a_pairs[i]
            } else {
                &b_pairs[i]
            };
            for &(u, v) in pairs {
                let ru = find(&mut parent, u);
                let rv = find(&mut parent, v);
                if ru != rv {
                    parent[ru] = rv as u8;
                    components -= 1;
                }
            }
        }
        components
    };

    let split = n.min(8);
    let chunk_bits = n - split;
    let histogram = (0u32..1 << split)
        .into_par_iter()
        .map(|high| {
            let mut local = vec![vec![0u64; m + 2]; n + 1];
            for low in 0u32..1 << chunk_bits {
                let state = high << chunk_bits | low;
                let b = state.count_ones() as usize;
                local[b][loops_of(state)] += 1;
            }
            local
        })
        .reduce(
            || vec![vec![0u64; m + 2]; n + 1],
            |mut acc, part| {
                for (row, prow) in acc.iter_mut().zip(part) {
                    for (x, y) in row.iter_mut().zip(prow) {
                        *x += y;
                    }
                }
                acc
            },
        );

    // d = -A^2 - A^-2
    let d = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    let mut d_pows = vec![LaurentPolynomial::one()];
    for k in 1..=m + 1 {
        d_pows.push(&d_pows[k - 1] * &d);
    }
    let mut bracket = LaurentPolynomial::zero();
    for (b, row) in histogram.iter().enumerate() {
        let a_exp = n as i32 - 2 * b as i32;
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = &LaurentPolynomial::monomial(count as i64, a_exp) * &d_pows[loops - 1];
            bracket = &bracket + &term;
        }
    }
    Ok(bracket)
}

/// Jones polynomial in `t`. The positive (right-handed) trefoil evaluates to
/// `-t^-4 + t^-3 + t^-1`.
pub fn jones(kd: &KnotDiagram) -> Result<LaurentPolynomial, KnotError> {
    let bracket = kauffman_bracket(kd)?;
    jones_from_bracket(&bracket, kd.writhe())
}

pub fn jones_from_bracket(
    bracket: &LaurentPolynomial,
    writhe: i32,
) -> Result<LaurentPolynomial, KnotError> {
    // f = (-A^3)^(-w) <K>, then A^4 = t.
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = bracket * &LaurentPolynomial::monomial(sign, -3 * writhe);
    normalized
        .compress_exponents(4)
        .ok_or_else(|| KnotError::Malformed("bracket exponents not a knot's".into()))
}

/// Alexander polynomial from the crossing relation matrix, normalized to a
/// symmetric exponent range with value 1 at `t = 1`.
pub fn alexander(kd: &KnotDiagram) -> Result<LaurentPolynomial, KnotError> {
    let n = kd.crossing_count();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let m = kd.arc_count;
    // Merge arc segments across over-passes into over-arcs.
    let mut parent: Vec<u8> = (0..m as u8).collect();
    for x in &kd.crossings {
        let r1 = find(&mut parent, x.arcs[1]);
        let r3 = find(&mut parent, x.arcs[3]);
        if r1 != r3 {
            parent[r1] = r3 as u8;
        }
    }
    let mut over_arc_index: BTreeMap<usize, usize> = BTreeMap::new();
    for a in 0..m {
        let r = find(&mut parent, a);
        let next = over_arc_index.len();
        over_arc_index.entry(r).or_insert(next);
    }
    if over_arc_index.len() != n {
        return Err(KnotError::DisconnectedDiagram);
    }
    let mut arc_of = vec![0usize; m];
    for (a, slot) in arc_of.iter_mut().enumerate() {
        *slot = over_arc_index[&find(&mut parent, a)];
    }

    let one_minus_t = LaurentPolynomial::from_terms([(0, 1), (1, -1)]);
    let t = LaurentPolynomial::monomial(1, 1);
    let minus_one = LaurentPolynomial::monomial(-1, 0);
    let mut matrix = vec![vec![LaurentPolynomial::zero(); n]; n];
    for (row, x) in kd.crossings.iter().enumerate() {
        let over = arc_of[x.arcs[1]];
        let (left, right) = if x.over_forward {
            (arc_of[x.arcs[0]], arc_of[x.arcs[2]])
        } else {
            (arc_of[x.arcs[2]], arc_of[x.arcs[0]])
        };
        matrix[row][over] = &matrix[row][over] + &one_minus_t;
        matrix[row][left] = &matrix[row][left] + &t;
        matrix[row][right] = &matrix[row][right] + &minus_one;
    }
    let minor: Vec<Vec<LaurentPolynomial>> = matrix[..n - 1]
        .iter()
        .map(|r| r[..n - 1].to_vec())
        .collect();
    let det = bareiss_determinant(minor);
    normalize_alexander(&det).ok_or(KnotError::DisconnectedDiagram)
}

/// Symmetrizes exponents and fixes the unit so the value at 1 is +1.
pub fn normalize_alexander(p: &LaurentPolynomial) -> Option<LaurentPolynomial> {
    let (lo, hi) = (p.min_exp()?, p.max_exp()?);
    if (lo + hi) % 2 != 0 {
        return None;
    }
    let shifted = p.shift(-(lo + hi) / 2);
    match shifted.eval_unit(1) {
        1 => Some(shifted),
        -1 => Some(-shifted),
        _ => None,
    }
}

/// Fraction-free Gaussian elimination over Z[t, t⁻¹].
pub fn bareiss_determinant(mut m: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut sign = 1i64;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPolynomial::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = m[k][k].clone();
    }
    &m[n - 1][n - 1] * &LaurentPolynomial::monomial(sign, 0)
}

pub fn determinant(kd: &KnotDiagram) -> Result<u64, KnotError> {
    Ok(alexander(kd)?.eval_unit(-1).unsigned_abs())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub jones: LaurentPolynomial,
    pub alexander: LaurentPolynomial,
    pub determinant: u64,
}

impl Invariants {
    pub fn trivial() -> Self {
        Invariants {
            jones: LaurentPolynomial::one(),
            alexander: LaurentPolynomial::one(),
            determinant: 1,
        }
    }

    pub fn of(kd: &KnotDiagram) -> Result<Self, KnotError> {
        let alexander = alexander(kd)?;
        Ok(Invariants {
            jones: jones(kd)?,
            determinant: alexander.eval_unit(-1).unsigned_abs(),
            alexander,
        })
    }

    /// Invariants of the connected sum.
    pub fn sum(&self, other: &Invariants) -> Invariants {
        Invariants {
            jones: &self.jones * &other.jones,
            alexander: &self.alexander * &other.alexander,
            determinant: self.determinant * other.determinant,
        }
    }

    pub fn mirror(&self) -> Invariants {
        Invariants {
            jones: self.jones.invert(),
            alexander: self.alexander.clone(),
            determinant: self.determinant,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.jones.is_one() && self.alexander.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> KnotDiagram {
        KnotDiagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap()
    }

    fn figure_eight() -> KnotDiagram {
        KnotDiagram::from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap()
    }

    #[test]
    fn unknot_invariants() {
        let u = KnotDiagram::unknot();
        assert!(jones(&u).unwrap().is_one());
        assert!(alexander(&u).unwrap().is_one());
        assert_eq!(determinant(&u).unwrap(), 1);
    }

    #[test]
    fn positive_trefoil_jones() {
        let k = trefoil();
        assert_eq!(k.writhe(), 3);
        // Eight-state hand sum: <K> = A^-7 - A^-3 - A^5.
        assert_eq!(
            kauffman_bracket(&k).unwrap(),
            LaurentPolynomial::from_terms([(-7, 1), (-3, -1), (5, -1)])
        );
        assert_eq!(
            jones(&k).unwrap(),
            LaurentPolynomial::from_terms([(-4, -1), (-3, 1), (-1, 1)])
        );
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(
            alexander(&trefoil()).unwrap(),
            LaurentPolynomial::from_terms([(-1, 1), (0, -1), (1, 1)])
        );
        assert_eq!(
            alexander(&figure_eight()).unwrap(),
            LaurentPolynomial::from_terms([(-1, -1), (0, 3), (1, -1)])
        );
        assert_eq!(determinant(&trefoil()).unwrap(), 3);
        assert_eq!(determinant(&figure_eight()).unwrap(), 5);
    }

    #[test]
    fn mirror_inverts_jones() {
        for k in [trefoil(), figure_eight()] {
            let m = k.mirror();
            assert_eq!(m.writhe(), -k.writhe());
            assert_eq!(jones(&m).unwrap(), jones(&k).unwrap().invert());
            assert_eq!(alexander(&m).unwrap(), alexander(&k).unwrap());
        }
        assert!(jones(&figure_eight()).unwrap().is_palindromic());
    }

    #[test]
    fn reversal_keeps_invariants() {
        let k = figure_eight();
        let r = k.reverse();
        assert_eq!(jones(&r).unwrap(), jones(&k).unwrap());
        assert_eq!(alexander(&r).unwrap(), alexander(&k).unwrap());
    }

    #[test]
    fn connected_sum_multiplies() {
        let s = trefoil().connected_sum(&figure_eight());
        assert!(s.is_planar());
        assert_eq!(
            jones(&s).unwrap(),
            &jones(&trefoil()).unwrap() * &jones(&figure_eight()).unwrap()
        );
        assert_eq!(determinant(&s).unwrap(), 15);
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(KnotDiagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6]]).is_err());
        // Labels 0..4 split into two strands of length two.
        assert_eq!(
            KnotDiagram::from_pd(&[[1, 3, 2, 4], [3, 1, 4, 2]]).unwrap_err(),
            KnotError::DisconnectedDiagram
        );
        // Consistent strands, but the rotations only close up on a torus.
        let virtual_code = KnotDiagram::new(vec![
            PdCrossing {
                arcs: [0, 2, 1, 3],
                over_forward: true,
            },
            PdCrossing {
                arcs: [2, 0, 3, 1],
                over_forward: true,
            },
        ]);
        assert!(virtual_code.is_err());
        assert_eq!(
            KnotDiagram::from_braid(3, &[1, 1, 1]).unwrap_err(),
            KnotError::DisconnectedDiagram
        );
        assert!(KnotDiagram::from_braid(2, &[1, 1]).is_err());
    }

    #[test]
    fn kink_is_unknot() {
        let kink = KnotDiagram::new(vec![PdCrossing {
            arcs: [0, 1, 1, 0],
            over_forward: true,
        }])
        .unwrap();
        assert_eq!(kink.writhe(), -1);
        assert!(jones(&kink).unwrap().is_one());
    }

    #[test]
    fn state_sum_bound() {
        let mut big = trefoil();
        for _ in 0..7 {
            big = big.connected_sum(&trefoil());
        }
        assert_eq!(big.crossing_count(), 24);
        assert_eq!(jones(&big), Err(KnotError::TooManyCrossings(24)));
    }
}
