use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{GradedPolynomial, Monomial};
use crate::characters::MnEvaluator;
use crate::combinatorics::{factorial, partitions_of, Partition, SkewShape};
use crate::error::{check_cap, Error, Result};
use crate::Rational;

/// Largest degree accepted by the character-based expansions.
pub const DEFAULT_SYMFUNC_CAP: usize = 12;

/// `S_k`, the coefficient of `z^k` in `exp Σ_n x_n z^n`:
/// `Σ_{k_1 + 2k_2 + ... = k} ∏ x_i^{k_i} / k_i!`.
pub fn elementary_schur(k: i64) -> GradedPolynomial {
    if k < 0 {
        return GradedPolynomial::zero();
    }
    let mut out = GradedPolynomial::zero();
    for mu in partitions_of(k as usize) {
        let exps: Vec<u32> = mu.multiplicities().iter().map(|&l| l as u32).collect();
        out.add_term(
            Monomial::new(exps),
            Rational::new(BigInt::one(), mu.multiplicity_factorials()),
        );
    }
    out
}

/// `x^ρ = x_{ρ_1} x_{ρ_2} ...`.
pub fn monomial(rho: &Partition) -> GradedPolynomial {
    let exps = rho.multiplicities().iter().map(|&l| l as u32).collect();
    GradedPolynomial::term(Monomial::new(exps), Rational::one())
}

/// `P_ρ = ∏ ρ_i x_{ρ_i}`.
pub fn power_monomial(rho: &Partition) -> GradedPolynomial {
    let c: BigInt = rho.parts().iter().map(|&p| BigInt::from(p)).product();
    monomial(rho).scale(&Rational::from_integer(c))
}

/// Jacobi-Trudi: `S_λ = det(S_{λ_i + j - i})`.
pub fn schur_poly(lambda: &Partition) -> GradedPolynomial {
    let l = lambda.len();
    let cache: HashMap<i64, GradedPolynomial> = (1..=l)
        .flat_map(|i| (1..=l).map(move |j| lambda.part(i) as i64 + j as i64 - i as i64))
        .map(|k| (k, elementary_schur(k)))
        .collect();
    let entries: Vec<Vec<&GradedPolynomial>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| &cache[&(lambda.part(i) as i64 + j as i64 - i as i64)])
                .collect()
        })
        .collect();
    determinant(&entries)
}

/// Division-free determinant: Laplace expansion along rows, memoized on the
/// set of columns still available.
fn determinant(m: &[Vec<&GradedPolynomial>]) -> GradedPolynomial {
    fn minor(
        m: &[Vec<&GradedPolynomial>],
        row: usize,
        cols: u32,
        memo: &mut HashMap<u32, GradedPolynomial>,
    ) -> GradedPolynomial {
        if row == m.len() {
            return GradedPolynomial::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = GradedPolynomial::zero();
        let mut sign_pos = true;
        for c in 0..m.len() {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = m[row][c];
            if !entry.is_zero() {
                let sub = minor(m, row + 1, cols & !(1 << c), memo);
                let term = entry * &sub;
                acc = if sign_pos { &acc + &term } else { &acc - &term };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    assert!(m.len() < 32, "determinant too large");
    let all = if m.is_empty() { 0 } else { (1u32 << m.len()) - 1 };
    minor(m, 0, all, &mut HashMap::new())
}

/// Coefficients `χ^λ(ρ)` of `P_ρ = Σ_λ χ^λ(ρ) S_λ` (zero coefficients omitted).
///
/// The identity is re-checked on polynomials before returning.
pub fn frobenius_expand(rho: &Partition, cap: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let n = rho.size();
    check_cap("|ρ|", n, cap)?;
    let mut ev = MnEvaluator::new();
    let mut out = BTreeMap::new();
    let mut rebuilt = GradedPolynomial::zero();
    for lambda in partitions_of(n) {
        let chi = ev.character(&SkewShape::straight(lambda.clone()), rho)?;
        if !chi.is_zero() {
            let s = schur_poly(&lambda).scale(&Rational::from_integer(chi.clone()));
            rebuilt = &rebuilt + &s;
            out.insert(lambda, chi);
        }
    }
    if rebuilt != power_monomial(rho) {
        return Err(Error::Verification(format!(
            "Σ χ^λ({rho}) S_λ does not reproduce P_{rho}"
        )));
    }
    Ok(out)
}

/// `S_λ = Σ_ρ χ^λ(ρ) x^ρ / Z_ρ` with `Z_ρ = ∏ l_i!`.
pub fn schur_in_monomials(lambda: &Partition, cap: usize) -> Result<GradedPolynomial> {
    let n = lambda.size();
    check_cap("|λ|", n, cap)?;
    let shape = SkewShape::straight(lambda.clone());
    let mut ev = MnEvaluator::new();
    let mut out = GradedPolynomial::zero();
    for rho in partitions_of(n) {
        let chi = ev.character(&shape, &rho)?;
        out = &out + &monomial(&rho).scale(&Rational::new(chi, rho.multiplicity_factorials()));
    }
    Ok(out)
}

/// `(f, g)`: replace `x_n` by `(1/n) ∂/∂x_n` in `f`, apply to `g`, take the
/// constant term. On monomials this is `δ ∏ a_i! / i^{a_i}`.
pub fn contravariant_form(f: &GradedPolynomial, g: &GradedPolynomial) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in f.terms() {
        let d = g.coefficient(m);
        if d.is_zero() {
            continue;
        }
        let weight = m
            .exponents()
            .iter()
            .enumerate()
            .fold(Rational::one(), |w, (i, &a)| {
                w * Rational::new(factorial(a as usize), BigInt::from(i + 1).pow(a))
            });
        acc += c * d * weight;
    }
    acc
}
