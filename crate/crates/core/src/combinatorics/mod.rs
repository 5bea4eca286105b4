//! Partitions, nodes, skew shapes and permutations.
//!
//! This is the indexing layer for the rest of the crate: Young diagrams index
//! irreducible representations, partitions double as cycle types, and skew
//! shapes carry the border strips of the Murnaghan-Nakayama rule.

mod partition;
mod permutation;
mod skew;

pub use partition::{factorial, partitions_of, Node, Partition};
pub use permutation::Permutation;
pub use skew::SkewShape;
