use super::{OrthogonalRep, Representation};
use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::matrix::FloatMatrix;

/// Matrices of `s_1, ..., s_{n-1}` on the sum-zero submodule of the
/// permutation module of `S_n`, in the orthonormal basis
/// `v_j = (e_1 + ... + e_{j-1} - (j-1) e_j) / sqrt(j (j-1))`, `2 ≤ j ≤ n`.
///
/// Row/column `j - 2` corresponds to `v_j`.
pub fn natural_module_matrices(n: usize) -> Result<Vec<FloatMatrix>> {
    if n < 2 {
        return Err(Error::Domain(format!("natural module needs n ≥ 2, got {n}")));
    }
    let basis: Vec<Vec<f64>> = (2..=n)
        .map(|j| {
            let norm = ((j * (j - 1)) as f64).sqrt();
            (1..=n)
                .map(|i| match i.cmp(&j) {
                    std::cmp::Ordering::Less => 1.0 / norm,
                    std::cmp::Ordering::Equal => -((j - 1) as f64) / norm,
                    std::cmp::Ordering::Greater => 0.0,
                })
                .collect()
        })
        .collect();
    Ok((1..n)
        .map(|k| {
            let mut m = FloatMatrix::zeros(n - 1, n - 1);
            for (c, v) in basis.iter().enumerate() {
                // s_k permutes coordinates k and k+1
                let mut image = v.clone();
                image.swap(k - 1, k);
                for (r, u) in basis.iter().enumerate() {
                    m[(r, c)] = u.iter().zip(&image).map(|(a, b)| a * b).sum();
                }
            }
            m
        })
        .collect())
}

/// Compares [`natural_module_matrices`] with the orthogonal form of
/// `(n-1, 1)`, matching `v_j` with the tableau that has `j` in its second row.
pub fn natural_module_check(n: usize, tol: f64) -> Result<bool> {
    matches_orthogonal_form(&natural_module_matrices(n)?, n, tol)
}

fn matches_orthogonal_form(natural: &[FloatMatrix], n: usize, tol: f64) -> Result<bool> {
    let shape = Partition::new(vec![n - 1, 1])?;
    let rep = OrthogonalRep::new(&SkewShape::straight(shape))?;
    // position in the orthogonal basis of the tableau T(j)
    let slot: Vec<usize> = (2..=n)
        .map(|j| {
            rep.basis()
                .iter()
                .position(|t| t.node_of(j).row == 2)
                .expect("every j ≥ 2 labels a tableau")
        })
        .collect();
    Ok(natural.iter().enumerate().all(|(k, m)| {
        let g = rep.generator(k + 1);
        (0..n - 1).all(|r| (0..n - 1).all(|c| (m[(r, c)] - g[(slot[r], slot[c])]).abs() <= tol))
    }))
}
