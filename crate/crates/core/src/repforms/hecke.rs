use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::Rational;

/// The irreducible module `L(a, b)` of
/// `H₂ = ⟨s, x, y | xy = yx, s² = 1, sx = ys - 1⟩`.
///
/// One-dimensional when `b = a ± 1` (with `s = ±1`), two-dimensional
/// otherwise. Matrices act on column vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeModule {
    pub a: Rational,
    pub b: Rational,
    pub x: ExactMatrix,
    pub y: ExactMatrix,
    pub s: ExactMatrix,
}

impl HeckeModule {
    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    /// Residuals of the three defining relations.
    pub fn relation_residuals(&self) -> [ExactMatrix; 3] {
        let id = ExactMatrix::identity(self.dim());
        [
            &self.x.matmul(&self.y) - &self.y.matmul(&self.x),
            &self.s.matmul(&self.s) - &id,
            &self.s.matmul(&self.x) - &(&self.y.matmul(&self.s) - &id),
        ]
    }
}

/// Constructs `L(a, b)` and checks the relations of `H₂` on it.
pub fn hecke_l(a: Rational, b: Rational) -> Result<HeckeModule> {
    let one = Rational::one();
    let scalar = |v: &Rational| ExactMatrix::from_rows(vec![vec![v.clone()]]);
    let m = if b == &a + &one {
        HeckeModule {
            x: scalar(&a),
            y: scalar(&b),
            s: scalar(&one),
            a,
            b,
        }
    } else if b == &a - &one {
        HeckeModule {
            x: scalar(&a),
            y: scalar(&b),
            s: scalar(&-one),
            a,
            b,
        }
    } else {
        let z = Rational::zero();
        HeckeModule {
            x: ExactMatrix::from_rows(vec![vec![a.clone(), -one.clone()], vec![z.clone(), b.clone()]]),
            y: ExactMatrix::from_rows(vec![vec![b.clone(), one.clone()], vec![z.clone(), a.clone()]]),
            s: ExactMatrix::from_rows(vec![vec![z.clone(), one.clone()], vec![one, z]]),
            a,
            b,
        }
    };
    if m.relation_residuals().iter().any(|r| !r.is_zero()) {
        return Err(Error::Domain(format!("relations of H2 fail on L({}, {})", m.a, m.b)));
    }
    Ok(m)
}

/// Whether `L(a, b) ≅ L(c, d)`, decided by solving `M X₁ = X₂ M` for
/// `X ∈ {x, y, s}` and looking for an invertible solution.
///
/// Both pairs must be in the two-dimensional regime `a ≠ b, b ± 1`.
pub fn hecke_iso_check(first: (Rational, Rational), second: (Rational, Rational)) -> Result<bool> {
    for (a, b) in [&first, &second] {
        let one = Rational::one();
        if a == b || *a == b + &one || *a == b - &one {
            return Err(Error::Precondition(format!(
                "hecke_iso_check needs a ≠ b, b ± 1; got ({a}, {b})"
            )));
        }
    }
    let m1 = hecke_l(first.0, first.1)?;
    let m2 = hecke_l(second.0, second.1)?;
    let d = m1.dim();
    if d != m2.dim() {
        return Ok(false);
    }
    // unknown M[p][q] is variable p*d + q
    let pairs = [(&m1.x, &m2.x), (&m1.y, &m2.y), (&m1.s, &m2.s)];
    let mut rows = Vec::new();
    for (x1, x2) in pairs {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![Rational::zero(); d * d];
                for l in 0..d {
                    row[i * d + l] += x1[(l, j)].clone();
                    row[l * d + j] -= x2[(i, l)].clone();
                }
                rows.push(row);
            }
        }
    }
    let system = ExactMatrix::from_rows(rows);
    let solutions = system.null_space();
    if solutions.is_empty() {
        return Ok(false);
    }
    // Any nonzero intertwiner between irreducibles is invertible; the sum of
    // the basis is checked as well in case the solution space is larger.
    let mut candidates = solutions.clone();
    candidates.push(solutions.iter().fold(vec![Rational::zero(); d * d], |acc, v| {
        acc.iter().zip(v).map(|(a, b)| a + b).collect()
    }));
    Ok(candidates.into_iter().any(|v| {
        let m = ExactMatrix::from_rows(v.chunks(d).map(<[Rational]>::to_vec).collect());
        m.rank() == d
    }))
}
