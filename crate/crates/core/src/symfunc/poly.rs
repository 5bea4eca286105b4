use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// Exponent vector `(a_1, a_2, ...)` of `x_1^{a_1} x_2^{a_2} ...`, without
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `x_k`, 1-based.
    pub fn var(k: usize) -> Self {
        let mut e = vec![0; k];
        e[k - 1] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_k`.
    pub fn exponent(&self, k: usize) -> u32 {
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// `Σ k a_k`.
    pub fn graded_degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &a)| (i + 1) * a as usize)
            .sum()
    }

    /// Index of the highest variable present (0 for the constant).
    pub fn max_var(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        Monomial(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

/// A polynomial with exact rational coefficients; zero terms are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    /// `x_k`.
    pub fn var(k: usize) -> Self {
        Self::term(Monomial::var(k), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// `Some(d)` when every monomial has graded degree `d` (`Some(0)` for zero).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::graded_degree);
        let Some(d) = degrees.next() else {
            return Some(0);
        };
        degrees.all(|e| e == d).then_some(d)
    }

    /// Highest variable index appearing.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    /// `∂/∂x_k`.
    pub fn derivative(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let a = m.exponent(k);
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[k - 1] -= 1;
            out.add_term(Monomial::new(e), c * Rational::from_integer(BigInt::from(a)));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: Self) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: Self) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: Self) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for GradedPolynomial {
    /// `"c1 * x1^a1 x2^a2 + ..."`, highest monomials first; `"0"` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, &a)| {
                        if a == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, a)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{} * {}", c, vars.join(" "))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<u32>,
}

impl Serialize for GradedPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                exps: m.0.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut p = GradedPolynomial::zero();
        for t in terms {
            let c = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            p.add_term(Monomial::new(t.exps), c);
        }
        Ok(p)
    }
}

/// Parses `"p/q"` or `"p"`.
pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn display_and_json() {
        let p = &GradedPolynomial::var(1).pow(2).scale(&q(1, 2)) - &GradedPolynomial::var(2);
        assert_eq!(p.to_string(), "1/2 * x1^2 + -1 * x2");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[{"coeff":"1/2","exps":[2]},{"coeff":"-1","exps":[0,1]}]"#);
        let back: GradedPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(GradedPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn derivative_and_degree() {
        let p = &GradedPolynomial::var(1).pow(3) * &GradedPolynomial::var(2);
        assert_eq!(p.homogeneous_degree(), Some(5));
        let d = p.derivative(1);
        assert_eq!(d.coefficient(&Monomial::new(vec![2, 1])), q(3, 1));
        assert!(p.derivative(3).is_zero());
        let mixed = &p + &GradedPolynomial::one();
        assert_eq!(mixed.homogeneous_degree(), None);
    }

    fn small_poly() -> impl Strategy<Value = GradedPolynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, 0..4), -5i64..5, 1i64..4), 0..5)
            .prop_map(|terms| {
                let mut p = GradedPolynomial::zero();
                for (e, n, d) in terms {
                    p.add_term(Monomial::new(e), q(n, d));
                }
                p
            })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert!((&(&a - &b) + &b) == a);
        }

        #[test]
        fn json_round_trip(a in small_poly()) {
            let back: GradedPolynomial = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
