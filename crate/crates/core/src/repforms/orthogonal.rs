use super::{axial_distance, Representation};
use crate::combinatorics::SkewShape;
use crate::error::{Error, Result};
use crate::matrix::FloatMatrix;
use crate::tableaux::{standard_tableaux, StandardTableau, WeightVector};

/// Young's orthogonal form of `V^{λ/μ}`:
/// `s_k w_T = ρ w_T + sqrt(1 - ρ²) w_{s_k T}` with the non-negative root.
///
/// Built directly from the closed-form coefficients; generators are
/// symmetric by construction since `ρ(s_k T) = -ρ(T)`.
#[derive(Debug, Clone)]
pub struct OrthogonalRep {
    shape: SkewShape,
    basis: Vec<StandardTableau>,
    gens: Vec<FloatMatrix>,
}

impl OrthogonalRep {
    pub fn new(shape: &SkewShape) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::Domain("orthogonal form needs a nonempty shape".into()));
        }
        let basis = standard_tableaux(shape);
        let index: std::collections::HashMap<WeightVector, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, t)| (t.content_vector(), i))
            .collect();
        let dim = basis.len();
        let gens = (1..shape.size())
            .map(|k| {
                let mut m = FloatMatrix::zeros(dim, dim);
                for (j, t) in basis.iter().enumerate() {
                    let d = axial_distance(t, k);
                    let rho = 1.0 / d as f64;
                    m[(j, j)] = rho;
                    if d.abs() >= 2 {
                        let i = index[&t.admissible_transposition(k)?.content_vector()];
                        m[(i, j)] = (1.0 - rho * rho).sqrt();
                    }
                }
                Ok(m)
            })
            .collect::<Result<_>>()?;
        Ok(OrthogonalRep {
            shape: shape.clone(),
            basis,
            gens,
        })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Largest entry of `GᵀG - I` over all generators.
    pub fn orthogonality_defect(&self) -> f64 {
        let id = FloatMatrix::identity(self.dim());
        self.gens
            .iter()
            .map(|g| (&g.transpose().matmul(g) - &id).max_abs())
            .fold(0.0, f64::max)
    }
}

impl Representation for OrthogonalRep {
    type Scalar = f64;

    /// The size of the skew shape: `S_k` acts on `V^{λ/μ}`.
    fn degree(&self) -> usize {
        self.shape.size()
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    fn generators(&self) -> &[FloatMatrix] {
        &self.gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partitions_of, Partition, Permutation};
    use crate::repforms::{coxeter_residuals, SeminormalRep, DEFAULT_TOLERANCE};

    fn skew(o: &str, i: &str) -> SkewShape {
        SkewShape::new(o.parse().unwrap(), i.parse().unwrap()).unwrap()
    }

    #[test]
    fn two_one_matrix() {
        let r = OrthogonalRep::new(&skew("2,1", "")).unwrap();
        let h = 3f64.sqrt() / 2.0;
        let want = FloatMatrix::from_rows(vec![vec![-0.5, h], vec![h, 0.5]]);
        assert!(r.generator(2).approx_eq(&want, 1e-15));
        let r = OrthogonalRep::new(&skew("2", "")).unwrap();
        assert_eq!(r.generator(1), &FloatMatrix::identity(1));
    }

    #[test]
    fn skew_two_two_over_one() {
        let r = OrthogonalRep::new(&skew("2,2", "1")).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.generators().len(), 2);
        for (name, res) in coxeter_residuals(r.generators()) {
            assert!(res.max_abs() <= DEFAULT_TOLERANCE, "{name}");
        }
        // (1 2 3) acts with trace -1: the shape is a skew hook with leg 1
        let c = r.rep_matrix(&Permutation::parse("(1 2 3)", None).unwrap()).unwrap();
        assert!((c.trace() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn relations_and_orthogonality() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                let r = OrthogonalRep::new(&SkewShape::straight(l.clone())).unwrap();
                for g in r.generators() {
                    assert!(g.is_symmetric());
                }
                assert!(r.orthogonality_defect() <= DEFAULT_TOLERANCE);
                for (name, res) in coxeter_residuals(r.generators()) {
                    assert!(res.max_abs() <= DEFAULT_TOLERANCE, "{l}: {name}");
                }
            }
        }
    }

    #[test]
    fn generator_traces_match_seminormal() {
        for n in 2..=6 {
            for l in partitions_of(n) {
                let o = OrthogonalRep::new(&SkewShape::straight(l.clone())).unwrap();
                let s = SeminormalRep::new(&l).unwrap();
                for k in 1..n {
                    let exact = s.generator(k).to_f64().trace();
                    assert!((o.generator(k).trace() - exact).abs() <= DEFAULT_TOLERANCE);
                }
            }
        }
    }

    #[test]
    fn disconnected_skew_vanishes_on_full_cycle() {
        let r = OrthogonalRep::new(&skew("2,1", "1")).unwrap();
        let c = r.rep_matrix(&Permutation::class_representative(&Partition::row(2))).unwrap();
        assert!(c.trace().abs() < 1e-12);
        assert!(OrthogonalRep::new(&skew("2,1", "2,1")).is_err());
    }
}
