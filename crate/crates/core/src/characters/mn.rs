use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};

/// Every `ν ⊆ λ` such that `λ/ν` is a border strip of size `k`, paired with
/// the strip's leg length, in decreasing order of `ν`.
///
/// Uses beta-numbers `β_i = λ_i + (ℓ - i)`: removing a `k`-strip moves one
/// bead from `b` to an empty position `b - k`, and the leg is the number of
/// beads jumped over.
pub fn border_strips(outer: &Partition, k: usize) -> Vec<(Partition, usize)> {
    if k == 0 {
        return Vec::new();
    }
    let len = outer.len();
    let beta: Vec<usize> = outer
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let leg = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        out.push((Partition::from_unsorted(parts), leg));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Every `ν ⊇ μ` such that `ν/μ` is a border strip of size `k`, with its
/// leg length, in decreasing order of `ν`.
pub fn added_border_strips(inner: &Partition, k: usize) -> Vec<(Partition, usize)> {
    if k == 0 {
        return Vec::new();
    }
    // pad with k zero parts so that vertical strips have room
    let len = inner.len() + k;
    let beta: Vec<usize> = (1..=len).map(|i| inner.part(i) + (len - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let target = b + k;
        if beta.contains(&target) {
            continue;
        }
        let leg = beta.iter().filter(|&&x| x > b && x < target).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        out.push((Partition::from_unsorted(parts), leg));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Memoizing Murnaghan-Nakayama evaluator for skew characters.
///
/// Cycle parts are consumed largest first; the cache key is
/// `(outer, inner, remaining cycle type)`.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    memo: HashMap<(Partition, Partition, Partition), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^{λ/μ}` at a permutation of cycle type `rho`.
    pub fn character(&mut self, shape: &SkewShape, rho: &Partition) -> Result<BigInt> {
        if shape.size() != rho.size() {
            return Err(Error::Domain(format!(
                "shape {shape} has size {} but cycle type {rho} has size {}",
                shape.size(),
                rho.size()
            )));
        }
        Ok(self.eval(shape.outer(), shape.inner(), rho.parts()))
    }

    fn eval(&mut self, outer: &Partition, inner: &Partition, rho: &[usize]) -> BigInt {
        let Some((&k, rest)) = rho.split_first() else {
            return if outer == inner { BigInt::one() } else { BigInt::zero() };
        };
        let key = (outer.clone(), inner.clone(), Partition::from_unsorted(rho.to_vec()));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (nu, leg) in border_strips(outer, k) {
            if !nu.contains(inner) {
                continue;
            }
            let v = self.eval(&nu, inner, rest);
            if leg % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^{λ/μ}(ρ)` by the Murnaghan-Nakayama rule.
pub fn mn_character(shape: &SkewShape, rho: &Partition) -> Result<BigInt> {
    MnEvaluator::new().character(shape, rho)
}

/// Value of `χ^{λ/μ}` on the full cycle `(1 2 ... k)`: `(-1)^leg` for a
/// skew hook, zero otherwise.
pub fn hook_cycle_character(shape: &SkewShape) -> Result<i64> {
    if shape.is_empty() {
        return Err(Error::Domain("full-cycle character of an empty shape".into()));
    }
    if !shape.is_skew_hook() {
        return Ok(0);
    }
    Ok(if shape.leg()? % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn skew(o: &str, i: &str) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    /// Brute force: every ν ⊆ λ with |λ/ν| = k for which λ/ν is a skew hook.
    fn strips_by_predicate(outer: &Partition, k: usize) -> Vec<(Partition, usize)> {
        let n = outer.size();
        if k > n {
            return Vec::new();
        }
        let mut out: Vec<(Partition, usize)> = partitions_of(n - k)
            .into_iter()
            .filter(|nu| outer.contains(nu))
            .filter_map(|nu| {
                let s = SkewShape::new(outer.clone(), nu.clone()).unwrap();
                s.is_skew_hook().then(|| (nu, s.leg().unwrap()))
            })
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    #[test]
    fn border_strips_match_predicate() {
        for n in 1..=9 {
            for l in partitions_of(n) {
                for k in 1..=n {
                    assert_eq!(border_strips(&l, k), strips_by_predicate(&l, k), "{l}, {k}");
                }
            }
        }
    }

    #[test]
    fn added_strips_match_predicate() {
        for n in 0..=7 {
            for mu in partitions_of(n) {
                for k in 1..=5 {
                    let mut want: Vec<(Partition, usize)> = partitions_of(n + k)
                        .into_iter()
                        .filter(|nu| nu.contains(&mu))
                        .filter_map(|nu| {
                            let s = SkewShape::new(nu.clone(), mu.clone()).unwrap();
                            s.is_skew_hook().then(|| (nu, s.leg().unwrap()))
                        })
                        .collect();
                    want.sort_by(|a, b| b.0.cmp(&a.0));
                    assert_eq!(added_border_strips(&mu, k), want, "{mu} + {k}");
                }
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&skew("2,1", ""), &p("3")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&skew("2,2", ""), &p("4")).unwrap(), BigInt::zero());
        assert_eq!(mn_character(&skew("2,1", ""), &p("1,1,1")).unwrap(), BigInt::from(2));
        assert!(mn_character(&skew("2,1", ""), &p("2")).is_err());
    }

    #[test]
    fn full_cycle_values() {
        assert_eq!(hook_cycle_character(&skew("3,1", "")).unwrap(), -1);
        assert_eq!(hook_cycle_character(&skew("2,2", "1")).unwrap(), -1);
        assert_eq!(hook_cycle_character(&skew("2,2", "")).unwrap(), 0);
        assert!(hook_cycle_character(&skew("1", "1")).is_err());
    }

    #[test]
    fn shared_memo_agrees_with_fresh_evaluations() {
        let mut shared = MnEvaluator::new();
        for n in 1..=7 {
            for l in partitions_of(n) {
                for inner in partitions_of(2).into_iter().filter(|i| l.contains(i)) {
                    let s = SkewShape::new(l.clone(), inner).unwrap();
                    for rho in partitions_of(s.size()) {
                        let a = shared.character(&s, &rho).unwrap();
                        assert_eq!(a, mn_character(&s, &rho).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_at_identity() {
        for n in 0..=10 {
            for l in partitions_of(n) {
                let d = mn_character(&SkewShape::straight(l.clone()), &Partition::column(n)).unwrap();
                assert_eq!(d, l.hook_dimension());
            }
        }
    }
}
