use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    /// Index of the diagonal the node lies on: `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the parts; the canonical listing
/// order used everywhere in the crate is the *reverse* of it (decreasing
/// lexicographic), see [`partitions_of`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain(format!(
                "zero part inside {parts:?}; parts must be positive"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition (used for cycle types).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Transposed diagram, read off from column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.col <= self.part(node.row)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
    }

    /// Corners `(m, λ_m)` with `λ_m > λ_{m+1}`, sorted by row.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&m| self.part(m) > self.part(m + 1))
            .map(|m| Node::new(m, self.part(m)))
            .collect()
    }

    /// Boxes whose addition keeps the diagram a partition, sorted by row.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&m| m == 1 || self.part(m - 1) > self.part(m))
            .map(|m| Node::new(m, self.part(m) + 1))
            .collect()
    }

    pub fn with_node_added(&self, node: Node) -> Result<Partition> {
        if !self.addable_nodes().contains(&node) {
            return Err(Error::Domain(format!("{node} is not addable to {self}")));
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn with_node_removed(&self, node: Node) -> Result<Partition> {
        if !self.removable_nodes().contains(&node) {
            return Err(Error::Domain(format!("{node} is not removable from {self}")));
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// `(λ_r - c) + (λ'_c - r) + 1` for a cell `(r, c)`.
    pub fn hook_length(&self, node: Node, conjugate: &Partition) -> usize {
        (self.part(node.row) - node.col) + (conjugate.part(node.col) - node.row) + 1
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let hooks = self
            .cells()
            .fold(BigInt::one(), |acc, node| acc * self.hook_length(node, &conj));
        factorial(self.size()) / hooks
    }

    /// `l_i`, the number of parts equal to `i`, for `i = 1..=largest part`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.part(1)];
        for &p in &self.parts {
            mult[p - 1] += 1;
        }
        mult
    }

    /// `z_ρ = ∏ i^{l_i} l_i!`, the order of the centralizer of a permutation
    /// of cycle type `ρ`.
    pub fn centralizer_order(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, &l)| {
                acc * BigInt::from(i + 1).pow(l as u32) * factorial(l)
            })
    }

    /// `∏ l_i!`.
    pub fn multiplicity_factorials(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .fold(BigInt::one(), |acc, &l| acc * factorial(l))
    }

    /// Size `n!/z_ρ` of the conjugacy class of cycle type `self`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Appends parts equal to one (embeds a cycle type of `S_{n-k}` in `S_n`).
    pub fn with_ones(&self, k: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat(1).take(k));
        Partition { parts }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"5,3,3,1"`; `""`, `"∅"` and `"0"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
