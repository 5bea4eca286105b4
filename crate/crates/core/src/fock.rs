//! The fermionic Fock space, realized on partitions.
//!
//! Basis vectors `v_λ` are indexed by partitions and the operators
//! `Λ_k` (`k ≠ 0`) act by removing (`k > 0`) or adding (`k < 0`) border
//! strips of size `|k|` with sign `(-1)^{leg}`. Semi-infinite wedges never
//! appear; the sign rule is all that is needed. Adding strips is the
//! adjoint of removing them for the form in which the `v_λ` are orthonormal.
//!
//! Every vector carries a degree cap; raising past it is an error, never a
//! silent truncation.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{added_border_strips, border_strips};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::symfunc::{schur_poly, GradedPolynomial};
use crate::Rational;

/// Default degree cap.
pub const DEFAULT_FOCK_CAP: usize = 12;

/// A finite combination `Σ c_λ v_λ` with `|λ| ≤ cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, Rational>,
    cap: usize,
}

impl FockVector {
    pub fn zero(cap: usize) -> Self {
        FockVector {
            terms: BTreeMap::new(),
            cap,
        }
    }

    /// The basis vector `v_λ`.
    pub fn basis(lambda: Partition, cap: usize) -> Result<Self> {
        let mut v = Self::zero(cap);
        v.add_term(lambda, Rational::one())?;
        Ok(v)
    }

    /// The vacuum `v_∅`.
    pub fn vacuum(cap: usize) -> Self {
        Self::basis(Partition::empty(), cap).expect("empty partition fits any cap")
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
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

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) -> Result<()> {
        if lambda.size() > self.cap {
            return Err(Error::Truncation(format!(
                "v_({lambda}) has degree {} above the cap {}",
                lambda.size(),
                self.cap
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(lambda) {
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
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.cap = self.cap.max(other.cap);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.cap);
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v * c).expect("same cap");
        }
        out
    }

    /// `(self, other)` for the form with `(v_λ, v_μ) = δ_{λμ}`.
    pub fn pairing(&self, other: &Self) -> Rational {
        self.terms
            .iter()
            .map(|(l, c)| c * other.coefficient(l))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for FockVector {
    /// `"v_(2) - v_(1,1)"`, largest partition first; `"0"` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "v_({l})")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FockTermJson {
    partition: Vec<usize>,
    coeff: String,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<FockTermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| FockTermJson {
                partition: l.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl FockVector {
    /// Parses the JSON list form `[{"partition": [...], "coeff": "p/q"}, ...]`.
    pub fn from_json(json: &str, cap: usize) -> Result<Self> {
        let terms: Vec<FockTermJson> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        let mut v = Self::zero(cap);
        for t in terms {
            let c = t
                .coeff
                .parse::<Rational>()
                .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", t.coeff)))?;
            v.add_term(Partition::new(t.partition)?, c)?;
        }
        Ok(v)
    }
}

/// `Λ_k v`: remove (`k > 0`) or add (`k < 0`) border strips of size `|k|`
/// with sign `(-1)^{leg}`.
pub fn lambda_op(k: i64, v: &FockVector) -> Result<FockVector> {
    if k == 0 {
        return Err(Error::Domain(
            "Λ_0 is not well defined on the Fock space: its action on a wedge is an infinite sum"
                .into(),
        ));
    }
    let size = k.unsigned_abs() as usize;
    let mut out = FockVector::zero(v.cap);
    for (lambda, c) in &v.terms {
        let strips = if k > 0 {
            border_strips(lambda, size)
        } else {
            added_border_strips(lambda, size)
        };
        for (nu, leg) in strips {
            let signed = if leg % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(nu, signed)?;
        }
    }
    Ok(out)
}

/// Applies `Λ_{k_1} Λ_{k_2} ... Λ_{k_m}` (rightmost first).
pub fn lambda_word(ks: &[i64], v: &FockVector) -> Result<FockVector> {
    ks.iter().rev().try_fold(v.clone(), |acc, &k| lambda_op(k, &acc))
}

/// `[Λ_n, Λ_k] v_λ - n δ_{n,-k} v_λ`, which must vanish.
pub fn heisenberg_residual(n: i64, k: i64, lambda: &Partition, cap: usize) -> Result<FockVector> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("Λ_0 is not well defined on the Fock space".into()));
    }
    let needed = lambda.size() + n.unsigned_abs() as usize + k.unsigned_abs() as usize;
    if needed > cap {
        return Err(Error::Precondition(format!(
            "|λ| + |n| + |k| = {needed} exceeds the cap {cap}"
        )));
    }
    let v = FockVector::basis(lambda.clone(), cap)?;
    let nk = lambda_op(n, &lambda_op(k, &v)?)?;
    let kn = lambda_op(k, &lambda_op(n, &v)?)?;
    let mut residual = nk.sub(&kn)?;
    if n == -k {
        residual = residual.sub(&v.scale(&Rational::from_integer(BigInt::from(n))))?;
    }
    Ok(residual)
}

/// `χ^λ(ρ)` as the coefficient of `v_∅` in `Λ_{ρ_1} ... Λ_{ρ_l} v_λ`.
pub fn fock_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::Domain(format!(
            "|{lambda}| = {} but |{rho}| = {}",
            lambda.size(),
            rho.size()
        )));
    }
    let word: Vec<i64> = rho.parts().iter().map(|&p| p as i64).collect();
    let v = lambda_word(&word, &FockVector::basis(lambda.clone(), lambda.size())?)?;
    let c = v.coefficient(&Partition::empty());
    if !c.is_integer() {
        return Err(Error::Verification(format!("non-integral character value {c}")));
    }
    Ok(c.to_integer())
}

/// `σ(Σ c_λ v_λ) = Σ c_λ S_λ`.
pub fn boson_image(v: &FockVector) -> GradedPolynomial {
    v.terms()
        .fold(GradedPolynomial::zero(), |acc, (l, c)| &acc + &schur_poly(l).scale(c))
}

/// Residuals of the module-map property of `σ` at `v_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BosonResidual {
    /// `σ(Λ_{-n} v_λ) - n x_n S_λ`.
    pub raising: GradedPolynomial,
    /// `σ(Λ_n v_λ) - ∂S_λ/∂x_n`.
    pub lowering: GradedPolynomial,
}

impl BosonResidual {
    pub fn is_zero(&self) -> bool {
        self.raising.is_zero() && self.lowering.is_zero()
    }
}

pub fn boson_image_residual(lambda: &Partition, n: usize, cap: usize) -> Result<BosonResidual> {
    if n == 0 {
        return Err(Error::Domain("boson residual needs n ≥ 1".into()));
    }
    if lambda.size() + n > cap {
        return Err(Error::Precondition(format!(
            "|λ| + n = {} exceeds the cap {cap}",
            lambda.size() + n
        )));
    }
    let v = FockVector::basis(lambda.clone(), cap)?;
    let s = schur_poly(lambda);
    let xn = GradedPolynomial::var(n).scale(&Rational::from_integer(BigInt::from(n)));
    let raising = &boson_image(&lambda_op(-(n as i64), &v)?) - &(&xn * &s);
    let lowering = &boson_image(&lambda_op(n as i64, &v)?) - &s.derivative(n);
    Ok(BosonResidual { raising, lowering })
}
