use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{axial_distance, Representation};
use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::tableaux::{standard_tableaux, StandardTableau, WeightVector};
use crate::Rational;

/// Young's seminormal form of `V^λ`.
///
/// With `ρ = 1/(cont T_{k+1} - cont T_k)` and `S = s_k T`:
///
/// * adjacent diagonals: `s_k v_T = ρ v_T` (with `ρ = ±1`);
/// * `ℓ(S) > ℓ(T)`: `s_k v_T = ρ v_T + v_S`;
/// * `ℓ(S) < ℓ(T)`: `s_k v_T = ρ v_T + (1 - ρ²) v_S`.
///
/// Here `ρ` is always computed from the tableau being acted on, so the
/// diagonal entry of the longer tableau is minus that of the shorter one.
#[derive(Debug, Clone)]
pub struct SeminormalRep {
    shape: Partition,
    basis: Vec<StandardTableau>,
    gens: Vec<ExactMatrix>,
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::Domain("seminormal form needs a nonempty shape".into()));
        }
        let n = shape.size();
        let basis = standard_tableaux(&SkewShape::straight(shape.clone()));
        let index: HashMap<WeightVector, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, t)| (t.content_vector(), i))
            .collect();
        let lengths: Vec<usize> = basis
            .iter()
            .map(StandardTableau::length)
            .collect::<Result<_>>()?;
        let dim = basis.len();
        let gens = (1..n)
            .map(|k| {
                let mut m = ExactMatrix::zeros(dim, dim);
                for (j, t) in basis.iter().enumerate() {
                    let d = axial_distance(t, k);
                    let rho = Rational::new(BigInt::one(), BigInt::from(d));
                    if d.abs() >= 2 {
                        let s = t.admissible_transposition(k)?;
                        let i = index[&s.content_vector()];
                        m[(i, j)] = if lengths[i] > lengths[j] {
                            Rational::one()
                        } else {
                            Rational::one() - &rho * &rho
                        };
                    }
                    m[(j, j)] = rho;
                }
                Ok(m)
            })
            .collect::<Result<_>>()?;
        Ok(SeminormalRep {
            shape: shape.clone(),
            basis,
            gens,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }
}

impl Representation for SeminormalRep {
    type Scalar = Rational;

    fn degree(&self) -> usize {
        self.shape.size()
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    fn generators(&self) -> &[ExactMatrix] {
        &self.gens
    }
}
