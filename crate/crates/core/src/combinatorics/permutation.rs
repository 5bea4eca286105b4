use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation: `images[i-1] = w(i)`.
///
/// Products compose right to left, `(u * v)(i) = u(v(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::Domain(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition `(a b)` in `S_n`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::Domain(format!("invalid transposition ({a} {b}) in S_{n}")));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// The simple transposition `s_k = (k k+1)`.
    pub fn simple(k: usize, n: usize) -> Result<Self> {
        Self::transposition(k, k + 1, n)
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > n || std::mem::replace(&mut used[x - 1], true) {
                    return Err(Error::Domain(format!("bad or repeated point {x} in cycles")));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// `(1..ρ_1)(ρ_1+1..ρ_1+ρ_2)...`, a representative of cycle type `ρ`.
    pub fn class_representative(cycle_type: &Partition) -> Self {
        let mut images = Vec::with_capacity(cycle_type.size());
        let mut start = 1;
        for &len in cycle_type.parts() {
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Domain(format!(
                "cannot compose permutations of degree {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        })
    }

    /// Disjoint cycles including fixed points, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// Coxeter length: the number of inversions.
    pub fn coxeter_length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// A reduced word `[k_1, ..., k_l]` with `self = s_{k_1} ... s_{k_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Peel right descents: w = (w s_k) s_k with ℓ(w s_k) = ℓ(w) - 1.
        let mut w = self.images.clone();
        let mut word = Vec::new();
        while let Some(k) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(k, k + 1);
            word.push(k + 1);
        }
        word.reverse();
        word
    }

    /// Parses one-line `"2,1,4,3"` or cycle notation `"(1 2)(3 4)"`.
    ///
    /// Cycle notation needs the degree; when `degree` is `None` the largest
    /// point mentioned is used.
    pub fn parse(s: &str, degree: Option<usize>) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in s.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
                let cycle = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad point {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            let max = cycles.iter().flatten().copied().max().unwrap_or(0);
            let n = degree.unwrap_or(max);
            if max > n {
                return Err(Error::Domain(format!("point {max} exceeds degree {n}")));
            }
            Permutation::from_cycles(&cycles, n)
        } else {
            let images = if s.is_empty() {
                Vec::new()
            } else {
                s.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad image {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let p = Permutation::new(images)?;
            match degree {
                Some(n) if n != p.degree() => Err(Error::Domain(format!(
                    "permutation has degree {}, expected {n}",
                    p.degree()
                ))),
                _ => Ok(p),
            }
        }
    }

    /// All permutations of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}
