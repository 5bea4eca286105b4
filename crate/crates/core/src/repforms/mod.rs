//! Explicit matrix models of irreducible representations.
//!
//! * [`SeminormalRep`]: Young's seminormal form over exact rationals.
//! * [`OrthogonalRep`]: Young's orthogonal form in `f64`, for straight and
//!   skew shapes.
//! * [`jm_matrix`]: Jucys-Murphy elements `L_k = Σ_{m<k} (m k)`.
//! * [`HeckeModule`]: the modules `L(a, b)` of the rank two degenerate affine
//!   Hecke algebra.
//! * [`natural_module_check`]: the standard module inside the permutation
//!   module, compared against the orthogonal form of `(n-1, 1)`.
//!
//! All bases are ordered as in [`standard_tableaux`](crate::tableaux::standard_tableaux).

mod hecke;
mod natural;
mod orthogonal;
mod seminormal;

pub use hecke::{hecke_iso_check, hecke_l, HeckeModule};
pub use natural::{natural_module_check, natural_module_matrices};
pub use orthogonal::OrthogonalRep;
pub use seminormal::SeminormalRep;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num};

use crate::combinatorics::{Partition, Permutation, SkewShape};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::tableaux::StandardTableau;

/// Default entrywise tolerance for floating-point comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A representation of `S_n` given by the matrices of `s_1, ..., s_{n-1}`.
pub trait Representation {
    type Scalar: Clone + Num;

    /// `n`, the degree of the symmetric group acting.
    fn degree(&self) -> usize;

    fn dim(&self) -> usize;

    fn basis(&self) -> &[StandardTableau];

    /// `generators()[k - 1]` is the matrix of `s_k`.
    fn generators(&self) -> &[Matrix<Self::Scalar>];

    fn generator(&self, k: usize) -> &Matrix<Self::Scalar> {
        &self.generators()[k - 1]
    }

    /// Matrix of `w`, multiplied out along a reduced word.
    fn rep_matrix(&self, w: &Permutation) -> Result<Matrix<Self::Scalar>> {
        if w.degree() != self.degree() {
            return Err(Error::Domain(format!(
                "permutation of degree {} acting on a representation of S_{}",
                w.degree(),
                self.degree()
            )));
        }
        Ok(w
            .reduced_word()
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, &k| {
                acc.matmul(self.generator(k))
            }))
    }

    /// `Σ_g c_g ρ(g)` for a finitely supported linear combination of permutations.
    fn linear_combination<'a, I>(&self, terms: I) -> Result<Matrix<Self::Scalar>>
    where
        I: IntoIterator<Item = (&'a Permutation, &'a Self::Scalar)>,
        Self::Scalar: 'a,
    {
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in terms {
            acc = &acc + &self.rep_matrix(w)?.scale(c);
        }
        Ok(acc)
    }
}

/// Matrix of the Jucys-Murphy element `L_k` (so `L_1 = 0`).
pub fn jm_matrix<R: Representation>(rep: &R, k: usize) -> Result<Matrix<R::Scalar>> {
    let n = rep.degree();
    if k == 0 || k > n {
        return Err(Error::Domain(format!("L_{k} is not defined in S_{n}")));
    }
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for m in 1..k {
        acc = &acc + &rep.rep_matrix(&Permutation::transposition(m, k, n)?)?;
    }
    Ok(acc)
}

/// Residuals `lhs - rhs` of the Coxeter presentation:
/// `s_k^2 = 1`, `s_k s_{k+1} s_k = s_{k+1} s_k s_{k+1}` and
/// `s_j s_k = s_k s_j` for `|j - k| > 1`.
///
/// Each entry is labelled with the relation it comes from.
pub fn coxeter_residuals<T: Clone + Num>(gens: &[Matrix<T>]) -> Vec<(String, Matrix<T>)> {
    let mut out = Vec::new();
    let Some(first) = gens.first() else {
        return out;
    };
    let id = Matrix::identity(first.rows());
    for (i, g) in gens.iter().enumerate() {
        out.push((format!("s{}^2 = 1", i + 1), &g.matmul(g) - &id));
    }
    for i in 0..gens.len().saturating_sub(1) {
        let (a, b) = (&gens[i], &gens[i + 1]);
        out.push((
            format!("s{0} s{1} s{0} = s{1} s{0} s{1}", i + 1, i + 2),
            &a.matmul(b).matmul(a) - &b.matmul(a).matmul(b),
        ));
    }
    for i in 0..gens.len() {
        for j in i + 2..gens.len() {
            out.push((
                format!("s{} s{} = s{} s{}", i + 1, j + 1, j + 1, i + 1),
                &gens[i].matmul(&gens[j]) - &gens[j].matmul(&gens[i]),
            ));
        }
    }
    out
}

/// Residuals of `s_k L_k = L_{k+1} s_k - 1`, one per `k`.
pub fn jm_relation_residuals<R: Representation>(rep: &R) -> Result<Vec<Matrix<R::Scalar>>> {
    let n = rep.degree();
    let jm: Vec<_> = (1..=n).map(|k| jm_matrix(rep, k)).collect::<Result<_>>()?;
    let id = Matrix::identity(rep.dim());
    Ok((1..n)
        .map(|k| {
            let s = rep.generator(k);
            let lhs = s.matmul(&jm[k - 1]);
            let rhs = &jm[k].matmul(s) - &id;
            &lhs - &rhs
        })
        .collect())
}

/// `χ^{λ/μ}(ρ)` as the trace of a class representative: exact through the
/// seminormal form for straight shapes, through the orthogonal form (and
/// rounded, if within `tol` of an integer) for skew shapes.
pub fn trace_character(shape: &SkewShape, rho: &Partition, tol: f64) -> Result<BigInt> {
    if shape.size() != rho.size() {
        return Err(Error::Domain(format!(
            "|{shape}| = {} but |{rho}| = {}",
            shape.size(),
            rho.size()
        )));
    }
    if shape.is_empty() {
        return Ok(BigInt::from(1));
    }
    let w = Permutation::class_representative(rho);
    if shape.is_straight() {
        let t = SeminormalRep::new(shape.outer())?.rep_matrix(&w)?.trace();
        if !t.is_integer() {
            return Err(Error::Verification(format!("non-integral trace {t}")));
        }
        return Ok(t.to_integer());
    }
    let t = OrthogonalRep::new(shape)?.rep_matrix(&w)?.trace();
    let r = t.round();
    if (t - r).abs() > tol {
        return Err(Error::Verification(format!("trace {t} is not within {tol} of an integer")));
    }
    BigInt::from_f64(r).ok_or_else(|| Error::Verification(format!("trace {t} is not finite")))
}

/// Axial distance `cont(k+1) - cont(k)`; never zero in a standard tableau.
fn axial_distance(t: &StandardTableau, k: usize) -> i64 {
    t.content_of(k + 1) - t.content_of(k)
}
