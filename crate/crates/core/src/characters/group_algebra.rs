use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::mn::MnEvaluator;
use crate::combinatorics::{factorial, Partition, Permutation, SkewShape};
use crate::error::{check_cap, Error, Result};
use crate::Rational;

/// Largest `n` for which [`central_idempotent`] builds dense elements.
pub const DEFAULT_IDEMPOTENT_CAP: usize = 5;

/// A finitely supported element `Σ c_g g` of `Q S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit `1·e`.
    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        let n = w.degree();
        GroupAlgebraElement {
            n,
            coeffs: BTreeMap::from([(w, Rational::one())]),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Result<Self> {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            if w.degree() != n {
                return Err(Error::Domain(format!("{w} is not in S_{n}")));
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, w: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
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

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, w: &Permutation) -> Rational {
        self.coeffs.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "group algebra elements of S_{} and S_{}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (w, v) in &self.coeffs {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Product in the group algebra: `(ab)(g) = Σ_h a(h) b(h⁻¹g)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (h, a) in &self.coeffs {
            for (k, b) in &other.coeffs {
                let g = h.compose(k)?;
                *acc.entry(g).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(GroupAlgebraElement {
            n: self.n,
            coeffs: acc,
        })
    }
}

/// The central idempotent `e_λ = (dim λ / n!) Σ_g χ^λ(g⁻¹) g`.
pub fn central_idempotent(n: usize, lambda: &Partition, cap: usize) -> Result<GroupAlgebraElement> {
    check_cap("n", n, cap)?;
    if lambda.size() != n {
        return Err(Error::Domain(format!("{lambda} is not a partition of {n}")));
    }
    let shape = SkewShape::straight(lambda.clone());
    let mut ev = MnEvaluator::new();
    let scale = Rational::new(lambda.hook_dimension(), factorial(n));
    let mut by_class: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut e = GroupAlgebraElement::zero(n);
    for g in Permutation::all(n) {
        // g and g⁻¹ have the same cycle type
        let rho = g.inverse().cycle_type();
        let c = match by_class.get(&rho) {
            Some(c) => c.clone(),
            None => {
                let c = &scale * Rational::from_integer(ev.character(&shape, &rho)?);
                by_class.insert(rho, c.clone());
                c
            }
        };
        e.add_term(g, c);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn trivial_idempotent_is_uniform() {
        let e = central_idempotent(4, &Partition::row(4), DEFAULT_IDEMPOTENT_CAP).unwrap();
        assert_eq!(e.support_len(), 24);
        assert!(e.terms().all(|(_, c)| *c == q(1, 24)));
    }

    #[test]
    fn small_idempotents() {
        let e = central_idempotent(3, &"2,1".parse().unwrap(), 5).unwrap();
        assert_eq!(e.coefficient(&Permutation::identity(3)), q(2, 3));
        let e = central_idempotent(2, &Partition::column(2), 5).unwrap();
        let want = GroupAlgebraElement::from_terms(
            2,
            [
                (Permutation::identity(2), q(1, 2)),
                (Permutation::simple(1, 2).unwrap(), q(-1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(e, want);
    }

    #[test]
    fn convolution_identities() {
        let x = GroupAlgebraElement::from_terms(
            3,
            [
                (Permutation::parse("2,3,1", None).unwrap(), q(3, 7)),
                (Permutation::identity(3), q(-1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(GroupAlgebraElement::identity(3).convolve(&x).unwrap(), x);
        assert_eq!(x.convolve(&GroupAlgebraElement::identity(3)).unwrap(), x);
        assert!(x.convolve(&GroupAlgebraElement::identity(4)).is_err());
        assert!(x.sub(&x).unwrap().is_zero());
    }

    #[test]
    fn idempotents_are_orthogonal_up_to_four() {
        for n in 1..=4 {
            let es: Vec<_> = partitions_of(n)
                .iter()
                .map(|l| central_idempotent(n, l, 5).unwrap())
                .collect();
            for (i, a) in es.iter().enumerate() {
                for (j, b) in es.iter().enumerate() {
                    let ab = a.convolve(b).unwrap();
                    if i == j {
                        assert_eq!(&ab, a);
                    } else {
                        assert!(ab.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            central_idempotent(6, &Partition::row(6), 5),
            Err(Error::Resource { .. })
        ));
        assert!(central_idempotent(3, &Partition::row(4), 5).is_err());
    }
}
