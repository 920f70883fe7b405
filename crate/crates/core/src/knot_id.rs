//! Identification of (composite) knots against the built-in table.

use std::fmt;

use crate::group::Sign;
use crate::knot::{Invariants, KnotError};
use crate::laurent::LaurentPolynomial;
use crate::table::{knot_table, KnotName};

/// Either a connected sum of signed prime table knots (empty = unknot) or an
/// invariant bundle that does not factor over the table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotId {
    Composite(Vec<(KnotName, Sign)>),
    Unknown(Invariants),
}

impl KnotId {
    pub fn unknot() -> KnotId {
        KnotId::Composite(Vec::new())
    }

    pub fn composite(mut factors: Vec<(KnotName, Sign)>) -> KnotId {
        factors.retain(|(k, _)| *k != KnotName::Unknot);
        factors.sort();
        KnotId::Composite(factors)
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self, KnotId::Composite(f) if f.is_empty())
    }

    pub fn invariants(&self) -> Invariants {
        match self {
            KnotId::Composite(factors) => {
                factors.iter().fold(Invariants::trivial(), |acc, (k, s)| {
                    acc.sum(&k.entry().invariants_for(*s))
                })
            }
            KnotId::Unknown(inv) => inv.clone(),
        }
    }

    /// Canonical representative of `{K, reverse(K)}`, for comparing knots that
    /// carry no preferred orientation.
    pub fn unoriented(&self) -> KnotId {
        match self {
            KnotId::Composite(factors) => {
                let reversed = transform_id(self, false, true).expect("composite");
                match &reversed {
                    KnotId::Composite(rf) if rf < factors => reversed,
                    _ => KnotId::Composite(factors.clone()),
                }
            }
            KnotId::Unknown(_) => self.clone(),
        }
    }

    /// Mirror image; defined for unknown bundles as well.
    pub fn mirror(&self) -> KnotId {
        match self {
            KnotId::Unknown(inv) => KnotId::Unknown(inv.mirror()),
            _ => transform_id(self, true, false).expect("composite"),
        }
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::Composite(factors) if factors.is_empty() => f.write_str("unknot"),
            KnotId::Composite(factors) => {
                let parts: Vec<String> = factors.iter().map(|(k, s)| format!("{k}{s}")).collect();
                f.write_str(&parts.join(" # "))
            }
            KnotId::Unknown(inv) => write!(
                f,
                "unknown(jones={}, alexander={}, det={})",
                inv.jones, inv.alexander, inv.determinant
            ),
        }
    }
}

/// Applies mirror and/or reversal to every factor, then reduces modulo each
/// factor's symmetry set.
pub fn transform_id(id: &KnotId, mirror: bool, reverse: bool) -> Result<KnotId, KnotError> {
    let KnotId::Composite(factors) = id else {
        return Err(KnotError::UnknownId);
    };
    Ok(KnotId::composite(
        factors
            .iter()
            .map(|&(k, s)| {
                let sym = k.symmetry();
                let canonical_plus = sym.mirror;
                let flipped = sym.flips_sign(mirror, reverse);
                let sign = if canonical_plus {
                    Sign::Plus
                } else if flipped {
                    s * Sign::Minus
                } else {
                    s
                };
                (k, sign)
            })
            .collect(),
    ))
}

/// Factors an invariant bundle over the prime table knots using
/// multiplicativity of both polynomials under connected sum.
pub fn identify_knot(
    jones: &LaurentPolynomial,
    alexander: &LaurentPolynomial,
    determinant: u64,
) -> KnotId {
    let candidates: Vec<(KnotName, Sign, Invariants)> = knot_table()
        .entries
        .iter()
        .filter(|e| e.name != KnotName::Unknot)
        .flat_map(|e| {
            let signs: &[Sign] = if e.jones_chiral() {
                &[Sign::Plus, Sign::Minus]
            } else {
                &[Sign::Plus]
            };
            signs.iter().map(move |&s| (e.name, s, e.invariants_for(s)))
        })
        .collect();

    let mut factors = Vec::new();
    let found = factor(jones, alexander, &candidates, 0, &mut factors);
    let product_det: u64 = factors
        .iter()
        .map(|&i: &usize| candidates[i].2.determinant)
        .product();
    if found && product_det == determinant {
        KnotId::composite(
            factors
                .iter()
                .map(|&i| (candidates[i].0, candidates[i].1))
                .collect(),
        )
    } else {
        KnotId::Unknown(Invariants {
            jones: jones.clone(),
            alexander: alexander.clone(),
            determinant,
        })
    }
}

pub fn identify_invariants(inv: &Invariants) -> KnotId {
    identify_knot(&inv.jones, &inv.alexander, inv.determinant)
}

// Depth-first search over multisets of candidates (non-decreasing index);
// both polynomials must divide exactly at every step.
fn factor(
    jones: &LaurentPolynomial,
    alexander: &LaurentPolynomial,
    candidates: &[(KnotName, Sign, Invariants)],
    from: usize,
    acc: &mut Vec<usize>,
) -> bool {
    if jones.is_one() && alexander.is_one() {
        return true;
    }
    if jones.is_one() || alexander.is_one() {
        return false;
    }
    for (i, (_, _, inv)) in candidates.iter().enumerate().skip(from) {
        let (Some(j), Some(a)) = (
            jones.div_exact(&inv.jones),
            alexander.div_exact(&inv.alexander),
        ) else {
            continue;
        };
        acc.push(i);
        if factor(&j, &a, candidates, i, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_plus() -> Invariants {
        KnotName::K3_1.entry().invariants.clone()
    }

    #[test]
    fn trivial_bundle_is_unknot() {
        let one = LaurentPolynomial::one();
        assert!(identify_knot(&one, &one, 1).is_unknot());
    }

    #[test]
    fn granny_knot_factors() {
        let t = trefoil_plus();
        let sum = t.sum(&t);
        assert_eq!(
            identify_invariants(&sum),
            KnotId::composite(vec![
                (KnotName::K3_1, Sign::Plus),
                (KnotName::K3_1, Sign::Plus)
            ])
        );
        let square = t.sum(&t.mirror());
        assert_eq!(
            identify_invariants(&square),
            KnotId::composite(vec![
                (KnotName::K3_1, Sign::Plus),
                (KnotName::K3_1, Sign::Minus)
            ])
        );
    }

    #[test]
    fn non_table_bundle_is_unknown() {
        let fake = Invariants {
            jones: LaurentPolynomial::from_terms([(1, 1), (2, 1), (3, -1)]),
            alexander: LaurentPolynomial::from_terms([(-1, 2), (0, -3), (1, 2)]),
            determinant: 7,
        };
        assert!(matches!(identify_invariants(&fake), KnotId::Unknown(_)));
    }

    #[test]
    fn transforms() {
        let fig8 = KnotId::composite(vec![(KnotName::K4_1, Sign::Plus)]);
        assert_eq!(transform_id(&fig8, true, true).unwrap(), fig8);
        let t = KnotId::composite(vec![(KnotName::K3_1, Sign::Plus)]);
        assert_eq!(
            transform_id(&t, true, false).unwrap(),
            KnotId::composite(vec![(KnotName::K3_1, Sign::Minus)])
        );
        assert_eq!(transform_id(&t, false, true).unwrap(), t);
        let k = KnotId::composite(vec![(KnotName::K8_17, Sign::Plus)]);
        assert_eq!(
            transform_id(&k, false, true).unwrap(),
            KnotId::composite(vec![(KnotName::K8_17, Sign::Minus)])
        );
        assert_eq!(transform_id(&k, true, true).unwrap(), k);
        let plus = (KnotName::K8_17, Sign::Plus);
        let minus = (KnotName::K8_17, Sign::Minus);
        let same = KnotId::composite(vec![plus, plus]);
        let mixed = KnotId::composite(vec![plus, minus]);
        assert_eq!(
            same.unoriented(),
            KnotId::composite(vec![minus, minus]).unoriented()
        );
        assert_ne!(same.unoriented(), mixed.unoriented());
        let unknown = KnotId::Unknown(Invariants::trivial());
        assert_eq!(
            transform_id(&unknown, true, false),
            Err(KnotError::UnknownId)
        );
    }
}
