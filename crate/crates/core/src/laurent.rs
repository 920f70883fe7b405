//! Exact Laurent polynomials in one variable with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse map from exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Coefficients listed from exponent `low` upward.
    pub fn from_coeffs(low: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i32, c)))
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> i64 {
        self.terms.values().next_back().copied().unwrap_or(0)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Substitutes `t ↦ t^k`.
    pub fn scale_exponents(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e * k, c)))
    }

    /// Substitutes `t ↦ t^{-1}`.
    pub fn invert(&self) -> Self {
        self.scale_exponents(-1)
    }

    /// Divides every exponent by `k`, or `None` if one is not a multiple.
    pub fn compress_exponents(&self, k: i32) -> Option<Self> {
        if self.terms.keys().any(|e| e % k != 0) {
            return None;
        }
        Some(LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e / k, c)).collect(),
        })
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.invert()
    }

    /// Value at an integer point; negative exponents need `x = ±1`.
    pub fn eval_unit(&self, x: i64) -> i64 {
        assert!(x == 1 || x == -1, "Laurent evaluation only at units");
        self.terms
            .iter()
            .map(|(&e, &c)| {
                if x == -1 && e.rem_euclid(2) == 1 {
                    -c
                } else {
                    c
                }
            })
            .sum()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_low = divisor.min_exp().unwrap();
        let d_high = divisor.max_exp().unwrap();
        let d_lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        let low = self.min_exp().unwrap();
        // Quotient exponents range from low - d_low to high - d_high.
        while let Some(top) = rem.max_exp() {
            let q_exp = top - d_high;
            if top - (d_high - d_low) < low || q_exp + d_low < low {
                return None;
            }
            let c = rem.leading_coeff();
            if c % d_lead != 0 {
                return None;
            }
            let q = c / d_lead;
            quotient.add_term(q_exp, q);
            for (e, dc) in divisor.terms() {
                rem.add_term(e + q_exp, -q * dc);
            }
        }
        Some(quotient)
    }

    /// Renders the polynomial with the given variable name, highest power last.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            let neg = c < 0;
            let mag = c.unsigned_abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render("t"))
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl std::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = LaurentPolynomial>>(iter: I) -> Self {
        iter.fold(LaurentPolynomial::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for LaurentPolynomial {
    fn product<I: Iterator<Item = LaurentPolynomial>>(iter: I) -> Self {
        iter.fold(LaurentPolynomial::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPolynomial> {
        (-4i32..4, prop::collection::vec(-5i64..=5, 0..6))
            .prop_map(|(low, cs)| LaurentPolynomial::from_coeffs(low, &cs))
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = LaurentPolynomial::from_terms([(1, 2), (1, -2), (0, 3)]);
        assert_eq!(p.terms().count(), 1);
        assert_eq!(p, LaurentPolynomial::monomial(3, 0));
    }

    #[test]
    fn rendering() {
        let j = LaurentPolynomial::from_terms([(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(j.to_string(), "-t^-4 + t^-3 + t^-1");
        let a = LaurentPolynomial::from_terms([(-1, -1), (0, 3), (1, -1)]);
        assert_eq!(a.to_string(), "-t^-1 + 3 - t");
    }

    #[test]
    fn evaluation_at_minus_one() {
        let a = LaurentPolynomial::from_terms([(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(a.eval_unit(-1), -3);
        assert_eq!(a.eval_unit(1), 1);
    }

    #[test]
    fn exact_division_rejects_remainders() {
        let x = LaurentPolynomial::from_coeffs(0, &[1, 1]);
        let y = LaurentPolynomial::from_coeffs(0, &[1, 0, 1]);
        assert!(y.div_exact(&x).is_none());
        let two = LaurentPolynomial::monomial(2, 0);
        assert!(x.div_exact(&two).is_none());
    }

    proptest! {
        #[test]
        fn product_divides_back(a in poly(), b in poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }

        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, LaurentPolynomial::zero());
            prop_assert_eq!((&a * &b).invert(), &a.invert() * &b.invert());
        }
    }
}
