use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{Node, Partition};
use crate::error::{Error, Result};

/// The cells of `outer` that are not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_node(&self, node: Node) -> bool {
        self.outer.contains_node(node) && !self.inner.contains_node(node)
    }

    /// Cells sorted by row, then column.
    pub fn cells(&self) -> Vec<Node> {
        (1..=self.outer.len())
            .flat_map(|r| {
                (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| Node::new(r, c))
            })
            .collect()
    }

    /// Connectivity through cells sharing an edge.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        let Some(&start) = cells.first() else {
            return true;
        };
        let set: HashSet<Node> = cells.iter().copied().collect();
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(n) = queue.pop_front() {
            let mut nbrs = vec![Node::new(n.row + 1, n.col), Node::new(n.row, n.col + 1)];
            if n.row > 1 {
                nbrs.push(Node::new(n.row - 1, n.col));
            }
            if n.col > 1 {
                nbrs.push(Node::new(n.row, n.col - 1));
            }
            for m in nbrs {
                if set.contains(&m) && seen.insert(m) {
                    queue.push_back(m);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// Connected with no two cells on one diagonal (a border strip).
    pub fn is_skew_hook(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let cells = self.cells();
        let contents: HashSet<i64> = cells.iter().map(Node::content).collect();
        contents.len() == cells.len() && self.is_connected()
    }

    /// Number of occupied rows minus one.
    pub fn leg(&self) -> Result<usize> {
        let rows: BTreeSet<usize> = self.cells().iter().map(|n| n.row).collect();
        if rows.is_empty() {
            return Err(Error::Domain("leg of an empty skew shape".into()));
        }
        Ok(rows.len() - 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(o: &str, i: &str) -> SkewShape {
        SkewShape::new(o.parse().unwrap(), i.parse().unwrap()).unwrap()
    }

    #[test]
    fn hooks_and_legs() {
        let s = skew("3,1", "");
        assert!(s.is_skew_hook());
        assert_eq!(s.leg().unwrap(), 1);

        assert!(!skew("2,2", "").is_skew_hook());

        let s = skew("2,2", "1");
        assert_eq!(
            s.cells(),
            vec![Node::new(1, 2), Node::new(2, 1), Node::new(2, 2)]
        );
        assert!(s.is_skew_hook());
        assert_eq!(s.leg().unwrap(), 1);
    }

    #[test]
    fn containment_is_checked() {
        let err = SkewShape::new("2,1".parse().unwrap(), "3".parse().unwrap());
        assert!(matches!(err, Err(Error::Shape(_))));
    }

    #[test]
    fn empty_shape_has_no_leg() {
        let s = skew("2,1", "2,1");
        assert!(s.is_empty());
        assert!(matches!(s.leg(), Err(Error::Domain(_))));
        assert!(!s.is_skew_hook());
    }

    #[test]
    fn disconnected_shapes() {
        // (1,2) and (2,1) touch only at a corner.
        let s = skew("2,1", "1");
        assert!(!s.is_connected());
        assert!(!s.is_skew_hook());
        assert!(skew("3,3", "1").is_connected());
    }
}
