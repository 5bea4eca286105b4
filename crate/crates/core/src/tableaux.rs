//! Standard (skew) tableaux and their content vectors.
//!
//! A standard tableau of shape `λ/μ` is the same thing as a path from `μ` to
//! `λ` in the Young graph; its content vector records the diagonal on which
//! each successive box is added and is the joint Jucys-Murphy eigenvalue of
//! the corresponding Gelfand-Zetlin basis vector.
//!
//! Note on the sign module: the content vector of the unique tableau of
//! shape `(1^n)` is `(0, -1, ..., -(n-1))`. Some sources print it as
//! `(0, -1, ..., -n)`, which has one entry too many.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Node, Partition, Permutation, SkewShape};
use crate::error::{Error, Result};

/// A content vector `(i_1, ..., i_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Comma-separated integers, optionally in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(WeightVector(Vec::new()));
        }
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Domain(format!("weight entry {t:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }
}

/// A standard filling of a skew shape by `1..=k`.
///
/// Stored both ways: `positions[e - 1]` is the node holding `e`, and
/// `entries` maps nodes back to their entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: SkewShape,
    positions: Vec<Node>,
    entries: BTreeMap<Node, usize>,
}

impl StandardTableau {
    /// Builds a tableau from the node of each entry, checking standardness.
    pub fn from_positions(shape: SkewShape, positions: Vec<Node>) -> Result<Self> {
        if positions.len() != shape.size() {
            return Err(Error::Domain(format!(
                "{} entries for a shape of size {}",
                positions.len(),
                shape.size()
            )));
        }
        let mut entries = BTreeMap::new();
        for (i, &node) in positions.iter().enumerate() {
            if !shape.contains_node(node) {
                return Err(Error::Domain(format!("{node} is not a cell of {shape}")));
            }
            if entries.insert(node, i + 1).is_some() {
                return Err(Error::Domain(format!("cell {node} filled twice")));
            }
        }
        let t = StandardTableau {
            shape,
            positions,
            entries,
        };
        for (&node, &e) in &t.entries {
            let right = Node::new(node.row, node.col + 1);
            let below = Node::new(node.row + 1, node.col);
            for nb in [right, below] {
                if let Some(&f) = t.entries.get(&nb) {
                    if f <= e {
                        return Err(Error::Domain(format!(
                            "entries {e} at {node} and {f} at {nb} are not increasing"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    /// Builds a tableau from the entries of each row of the skew shape
    /// (cells of the inner shape omitted).
    pub fn from_rows(shape: SkewShape, rows: &[Vec<usize>]) -> Result<Self> {
        let k = shape.size();
        let mut positions = vec![None; k];
        for (r, row) in rows.iter().enumerate() {
            let start = shape.inner().part(r + 1);
            let len = shape.outer().part(r + 1).saturating_sub(start);
            if row.len() != len {
                return Err(Error::Domain(format!(
                    "row {} has {} entries, shape needs {len}",
                    r + 1,
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e > k || positions[e - 1].is_some() {
                    return Err(Error::Domain(format!("entry {e} out of range or repeated")));
                }
                positions[e - 1] = Some(Node::new(r + 1, start + j + 1));
            }
        }
        let positions = positions
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Domain("missing rows".into()))?;
        Self::from_positions(shape, positions)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Node holding entry `e` (1-based).
    pub fn node_of(&self, e: usize) -> Node {
        self.positions[e - 1]
    }

    pub fn entry_at(&self, node: Node) -> Option<usize> {
        self.entries.get(&node).copied()
    }

    pub fn positions(&self) -> &[Node] {
        &self.positions
    }

    /// Content of the box holding `e`.
    pub fn content_of(&self, e: usize) -> i64 {
        self.node_of(e).content()
    }

    pub fn content_vector(&self) -> WeightVector {
        WeightVector(self.positions.iter().map(Node::content).collect())
    }

    /// Entries of each row of the skew shape, left to right.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.outer().len())
            .map(|r| {
                (self.shape.inner().part(r) + 1..=self.shape.outer().part(r))
                    .map(|c| self.entries[&Node::new(r, c)])
                    .collect()
            })
            .collect()
    }

    /// Swaps `k` and `k + 1` when they lie on non-adjacent diagonals.
    pub fn admissible_transposition(&self, k: usize) -> Result<Self> {
        if k == 0 || k >= self.size() {
            return Err(Error::Domain(format!(
                "s_{k} is not a generator for a tableau with {} boxes",
                self.size()
            )));
        }
        if (self.content_of(k + 1) - self.content_of(k)).abs() < 2 {
            return Err(Error::Domain(format!(
                "s_{k} is not admissible: {k} and {} lie on adjacent diagonals",
                k + 1
            )));
        }
        Ok(self.swap_unchecked(k))
    }

    fn swap_unchecked(&self, k: usize) -> Self {
        let mut t = self.clone();
        let (a, b) = (t.positions[k - 1], t.positions[k]);
        t.positions.swap(k - 1, k);
        t.entries.insert(a, k + 1);
        t.entries.insert(b, k);
        t
    }

    /// The permutation `w` with `self = w · T(λ)` for a straight shape.
    pub fn permutation_from_canonical(&self) -> Result<Permutation> {
        if !self.shape.is_straight() {
            return Err(Error::Domain("canonical tableau only exists for straight shapes".into()));
        }
        let canonical = canonical_tableau(self.shape.outer());
        let mut images = vec![0; self.size()];
        for (node, &e) in &canonical.entries {
            images[e - 1] = self.entries[node];
        }
        Permutation::new(images)
    }

    /// Coxeter length of [`permutation_from_canonical`](Self::permutation_from_canonical).
    pub fn length(&self) -> Result<usize> {
        Ok(self.permutation_from_canonical()?.coxeter_length())
    }

    /// Admissible transpositions `[k_1, ..., k_l]` which, applied in order,
    /// move `self` to the canonical tableau; `l` equals [`length`](Self::length).
    ///
    /// Moves the entry in the last box of the last row up to the maximum one
    /// step at a time, then recurses on the remaining boxes.
    pub fn path_to_canonical(&self) -> Result<Vec<usize>> {
        if !self.shape.is_straight() {
            return Err(Error::Domain("path_to_canonical needs a straight shape".into()));
        }
        let mut t = self.clone();
        let mut path = Vec::new();
        let mut shape = self.shape.outer().clone();
        for m in (1..=self.size()).rev() {
            let corner = Node::new(shape.len(), shape.part(shape.len()));
            let mut k = t.entries[&corner];
            while k < m {
                t = t.admissible_transposition(k)?;
                path.push(k);
                k += 1;
            }
            shape = shape.with_node_removed(corner)?;
        }
        Ok(path)
    }

    /// Rows of entries aligned by column; inner-shape cells shown as `.`.
    pub fn render(&self) -> String {
        let width = self.size().to_string().len();
        let mut out = String::new();
        for r in 1..=self.shape.outer().len() {
            let cells: Vec<String> = (1..=self.shape.outer().part(r))
                .map(|c| match self.entries.get(&Node::new(r, c)) {
                    Some(e) => format!("{e:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Serialize for StandardTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TableauJson::deserialize(d)?;
        let outer = Partition::new(j.shape).map_err(D::Error::custom)?;
        let inner = Partition::new(j.inner).map_err(D::Error::custom)?;
        let shape = SkewShape::new(outer, inner).map_err(D::Error::custom)?;
        StandardTableau::from_rows(shape, &j.rows).map_err(D::Error::custom)
    }
}

/// All standard tableaux of a skew shape, in decreasing lexicographic order
/// of content vectors (for a straight shape the canonical tableau comes first).
pub fn standard_tableaux(shape: &SkewShape) -> Vec<StandardTableau> {
    fn rec(
        shape: &SkewShape,
        current: &Partition,
        path: &mut Vec<Node>,
        out: &mut Vec<StandardTableau>,
    ) {
        if path.len() == shape.size() {
            out.push(
                StandardTableau::from_positions(shape.clone(), path.clone())
                    .expect("growth sequence is standard"),
            );
            return;
        }
        // addable nodes come sorted by row, i.e. by decreasing content
        for node in current.addable_nodes() {
            if shape.outer().contains_node(node) {
                let next = current.with_node_added(node).expect("addable");
                path.push(node);
                rec(shape, &next, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, shape.inner(), &mut Vec::new(), &mut out);
    out
}

/// The row-reading tableau `T(λ)`.
pub fn canonical_tableau(shape: &Partition) -> StandardTableau {
    StandardTableau::from_positions(SkewShape::straight(shape.clone()), shape.cells().collect())
        .expect("row reading is standard")
}

/// Checks the three conditions characterizing content vectors:
/// the first entry is zero; every later entry has a neighbour value `±1`
/// earlier in the sequence; and between two equal entries `a` both `a - 1`
/// and `a + 1` occur.
pub fn is_valid_weight(weight: &WeightVector) -> bool {
    let w = weight.entries();
    if w.is_empty() {
        return true;
    }
    if w[0] != 0 {
        return false;
    }
    for k in 1..w.len() {
        let a = w[k];
        if !w[..k].iter().any(|&x| x == a - 1 || x == a + 1) {
            return false;
        }
        if let Some(prev) = w[..k].iter().rposition(|&x| x == a) {
            let between = &w[prev + 1..k];
            if !(between.contains(&(a - 1)) && between.contains(&(a + 1))) {
                return false;
            }
        }
    }
    true
}

/// The unique straight-shape standard tableau with the given content vector.
pub fn weight_to_tableau(weight: &WeightVector) -> Result<StandardTableau> {
    if !is_valid_weight(weight) {
        return Err(Error::Domain(format!("{weight} is not a valid weight")));
    }
    let mut shape = Partition::empty();
    let mut positions = Vec::with_capacity(weight.len());
    for (k, &c) in weight.entries().iter().enumerate() {
        let node = shape
            .addable_nodes()
            .into_iter()
            .find(|n| n.content() == c)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "no addable node of content {c} for entry {} of {weight}",
                    k + 1
                ))
            })?;
        shape = shape.with_node_added(node)?;
        positions.push(node);
    }
    StandardTableau::from_positions(SkewShape::straight(shape), positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;
    use num_traits::ToPrimitive;
    use std::collections::BTreeSet;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn straight(s: &str) -> SkewShape {
        SkewShape::straight(part(s))
    }

    fn w(v: &[i64]) -> WeightVector {
        WeightVector(v.to_vec())
    }

    fn sample_tableau() -> StandardTableau {
        StandardTableau::from_rows(straight("4,2,1"), &[vec![1, 2, 4, 5], vec![3, 7], vec![6]])
            .unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(standard_tableaux(&straight("6")).len(), 1);
        assert_eq!(standard_tableaux(&straight("2,1")).len(), 2);
        let skew = SkewShape::new(part("2,2"), part("1")).unwrap();
        assert_eq!(standard_tableaux(&skew).len(), 2);
    }

    #[test]
    fn count_matches_hook_formula() {
        for n in 0..=9 {
            for l in partitions_of(n) {
                let count = standard_tableaux(&SkewShape::straight(l.clone())).len();
                assert_eq!(count, l.hook_dimension().to_usize().unwrap(), "{l}");
            }
        }
    }

    #[test]
    fn ordering_is_decreasing_lex_with_canonical_first() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                let ts = standard_tableaux(&SkewShape::straight(l.clone()));
                assert_eq!(ts[0], canonical_tableau(&l));
                assert!(ts
                    .windows(2)
                    .all(|p| p[0].content_vector() > p[1].content_vector()));
            }
        }
    }

    #[test]
    fn canonical_tableaux() {
        assert_eq!(canonical_tableau(&part("3")).rows(), vec![vec![1, 2, 3]]);
        let t = canonical_tableau(&part("2,1"));
        assert_eq!(t.entry_at(Node::new(1, 1)), Some(1));
        assert_eq!(t.entry_at(Node::new(1, 2)), Some(2));
        assert_eq!(t.entry_at(Node::new(2, 1)), Some(3));
        assert_eq!(canonical_tableau(&part("2,2")).rows(), vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn content_vectors() {
        assert_eq!(sample_tableau().content_vector(), w(&[0, 1, -1, 2, 3, -2, 0]));
        assert_eq!(canonical_tableau(&part("5")).content_vector(), w(&[0, 1, 2, 3, 4]));
        assert_eq!(
            canonical_tableau(&Partition::column(4)).content_vector(),
            w(&[0, -1, -2, -3])
        );
    }

    #[test]
    fn weight_validity() {
        assert!(is_valid_weight(&w(&[0, 1, -1])));
        assert!(!is_valid_weight(&w(&[0, 0])));
        assert!(!is_valid_weight(&w(&[0, 1, 0, -1])));
        assert!(!is_valid_weight(&w(&[1])));
        assert!("0,1.5".parse::<WeightVector>().is_err());
        assert_eq!("(0,-1,1)".parse::<WeightVector>().unwrap(), w(&[0, -1, 1]));
    }

    #[test]
    fn weights_to_tableaux() {
        assert_eq!(
            weight_to_tableau(&w(&[0, 1, 2, 3])).unwrap(),
            canonical_tableau(&part("4"))
        );
        assert_eq!(
            weight_to_tableau(&w(&[0, 1, -1, 2, 3, -2, 0])).unwrap(),
            sample_tableau()
        );
        let t = weight_to_tableau(&w(&[0, -1, 1])).unwrap();
        assert_eq!(t.rows(), vec![vec![1, 3], vec![2]]);
        assert!(weight_to_tableau(&w(&[0, 1, 0, -1])).is_err());
    }

    #[test]
    fn weight_round_trip() {
        for n in 0..=8 {
            for l in partitions_of(n) {
                for t in standard_tableaux(&SkewShape::straight(l)) {
                    assert_eq!(weight_to_tableau(&t.content_vector()).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn permuted_weights_share_shape() {
        let mut all = Vec::new();
        for n in 1..=6 {
            for l in partitions_of(n) {
                for t in standard_tableaux(&SkewShape::straight(l)) {
                    all.push(t);
                }
            }
        }
        let sorted = |t: &StandardTableau| {
            let mut v = t.content_vector().0;
            v.sort();
            v
        };
        for a in &all {
            for b in &all {
                if a.size() == b.size() {
                    assert_eq!(sorted(a) == sorted(b), a.shape() == b.shape());
                }
            }
        }
    }

    #[test]
    fn admissible_transpositions() {
        let t = canonical_tableau(&part("2,1"));
        let s = t.admissible_transposition(2).unwrap();
        assert_eq!(s.rows(), vec![vec![1, 3], vec![2]]);
        assert!(matches!(t.admissible_transposition(1), Err(Error::Domain(_))));
        let t = canonical_tableau(&part("2,2"));
        assert_eq!(
            t.admissible_transposition(2).unwrap().rows(),
            vec![vec![1, 3], vec![2, 4]]
        );
    }

    #[test]
    fn paths_to_canonical() {
        let c = canonical_tableau(&part("2,1"));
        assert!(c.path_to_canonical().unwrap().is_empty());
        let other = c.admissible_transposition(2).unwrap();
        assert_eq!(other.path_to_canonical().unwrap(), vec![2]);
        for n in 1..=6 {
            for l in partitions_of(n) {
                let canon = canonical_tableau(&l);
                for t in standard_tableaux(&SkewShape::straight(l)) {
                    let path = t.path_to_canonical().unwrap();
                    assert_eq!(path.len(), t.length().unwrap());
                    let end = path
                        .iter()
                        .fold(t.clone(), |acc, &k| acc.admissible_transposition(k).unwrap());
                    assert_eq!(end, canon);
                }
            }
        }
    }

    #[test]
    fn weight_set_equals_tableau_contents() {
        for n in 1..=5 {
            let from_tableaux: BTreeSet<WeightVector> = partitions_of(n)
                .into_iter()
                .flat_map(|l| standard_tableaux(&SkewShape::straight(l)))
                .map(|t| t.content_vector())
                .collect();
            let r = n as i64 - 1;
            let mut valid = BTreeSet::new();
            let mut cur = vec![-r; n];
            'outer: loop {
                let wv = WeightVector(cur.clone());
                if is_valid_weight(&wv) {
                    valid.insert(wv);
                }
                for i in (0..n).rev() {
                    if cur[i] < r {
                        cur[i] += 1;
                        continue 'outer;
                    }
                    cur[i] = -r;
                }
                break;
            }
            assert_eq!(valid, from_tableaux, "n = {n}");
        }
    }

    #[test]
    fn json_shape() {
        let skew = SkewShape::new(part("2,2"), part("1")).unwrap();
        let t = &standard_tableaux(&skew)[0];
        let json = serde_json::to_string(t).unwrap();
        assert_eq!(json, r#"{"shape":[2,2],"inner":[1],"rows":[[1],[2,3]]}"#);
        let back: StandardTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, t);
        assert_eq!(t.render(), ". 1\n2 3\n");
    }
}
