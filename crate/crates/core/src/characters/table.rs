use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::mn::MnEvaluator;
use crate::combinatorics::{factorial, partitions_of, Partition, SkewShape};
use crate::error::{check_cap, Error, Result};

/// Largest `n` accepted by [`character_table`] unless overridden.
pub const DEFAULT_TABLE_CAP: usize = 20;

/// `χ^λ(ρ)` for all `λ, ρ ⊢ n`, both indexed in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `entries[i][j] = χ^{partitions[i]}(partitions[j])`.
    pub entries: Vec<Vec<BigInt>>,
    pub class_sizes: Vec<BigInt>,
}

impl CharacterTable {
    pub fn row_labels(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn col_labels(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<&BigInt> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == rho)?;
        Some(&self.entries[i][j])
    }

    /// `Σ_ρ c_ρ χ^λ(ρ) χ^μ(ρ)` for every pair of rows.
    pub fn row_inner_products(&self) -> Vec<Vec<BigInt>> {
        let r = self.partitions.len();
        (0..r)
            .map(|a| {
                (0..r)
                    .map(|b| {
                        (0..r)
                            .map(|j| &self.class_sizes[j] * &self.entries[a][j] * &self.entries[b][j])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// `Σ_λ χ^λ(ρ) χ^λ(σ)` for every pair of columns.
    pub fn column_inner_products(&self) -> Vec<Vec<BigInt>> {
        let r = self.partitions.len();
        (0..r)
            .map(|a| {
                (0..r)
                    .map(|b| (0..r).map(|i| &self.entries[i][a] * &self.entries[i][b]).sum())
                    .collect()
            })
            .collect()
    }

    /// Row relations: inner products equal `δ_{λμ} n!`.
    pub fn rows_orthogonal(&self) -> bool {
        let nf = factorial(self.n);
        self.row_inner_products().iter().enumerate().all(|(a, row)| {
            row.iter()
                .enumerate()
                .all(|(b, v)| if a == b { *v == nf } else { v.is_zero() })
        })
    }

    /// Column relations: inner products equal `δ_{ρσ} n!/c_ρ`.
    pub fn columns_orthogonal(&self) -> bool {
        let nf = factorial(self.n);
        self.column_inner_products().iter().enumerate().all(|(a, row)| {
            row.iter().enumerate().all(|(b, v)| {
                if a == b {
                    *v == &nf / &self.class_sizes[a]
                } else {
                    v.is_zero()
                }
            })
        })
    }

    /// Column of the identity class, `ρ = 1^n` (the last column).
    pub fn dimensions(&self) -> Vec<BigInt> {
        let j = self.partitions.len() - 1;
        self.entries.iter().map(|row| row[j].clone()).collect()
    }
}

#[derive(Serialize)]
struct TableJson {
    n: usize,
    rows: Vec<String>,
    columns: Vec<String>,
    class_sizes: Vec<String>,
    values: Vec<Vec<String>>,
}

impl Serialize for CharacterTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let labels: Vec<String> = self.partitions.iter().map(|p| p.to_string()).collect();
        TableJson {
            n: self.n,
            rows: labels.clone(),
            columns: labels,
            class_sizes: self.class_sizes.iter().map(|c| c.to_string()).collect(),
            values: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

/// The full character table of `S_n`, rows computed in parallel.
pub fn character_table(n: usize, cap: usize) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::Domain("character table needs n ≥ 1".into()));
    }
    check_cap("n", n, cap)?;
    let partitions = partitions_of(n);
    let entries = partitions
        .par_iter()
        .map(|lambda| {
            let mut ev = MnEvaluator::new();
            let shape = SkewShape::straight(lambda.clone());
            partitions
                .iter()
                .map(|rho| ev.character(&shape, rho))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let class_sizes = partitions.iter().map(Partition::class_size).collect();
    Ok(CharacterTable {
        n,
        partitions,
        entries,
        class_sizes,
    })
}

/// Multiplicities of `V^μ` in the restriction of `V^λ` to `S_{n-1}`,
/// computed as character inner products over `S_{n-1}`.
///
/// Only nonzero multiplicities are returned.
pub fn restriction_multiplicities(lambda: &Partition) -> Result<BTreeMap<Partition, BigInt>> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::Domain("restriction needs |λ| ≥ 1".into()));
    }
    let mut ev = MnEvaluator::new();
    let big = SkewShape::straight(lambda.clone());
    let classes = partitions_of(n - 1);
    let restricted: Vec<BigInt> = classes
        .iter()
        .map(|rho| ev.character(&big, &rho.with_ones(1)))
        .collect::<Result<_>>()?;
    let order = factorial(n - 1);
    let mut out = BTreeMap::new();
    for mu in partitions_of(n - 1) {
        let small = SkewShape::straight(mu.clone());
        let mut sum = BigInt::zero();
        for (rho, chi) in classes.iter().zip(&restricted) {
            sum += rho.class_size() * chi * ev.character(&small, rho)?;
        }
        let (m, rem) = sum.div_rem(&order);
        if !rem.is_zero() {
            return Err(Error::Domain(format!("non-integral multiplicity for {mu} in {lambda}")));
        }
        if !m.is_zero() {
            out.insert(mu, m);
        }
    }
    Ok(out)
}
