//! Exact representation theory of the symmetric groups.
//!
//! The crate builds irreducible representations of `S_n` as explicit
//! matrices (seminormal and orthogonal forms), evaluates characters with the
//! Murnaghan-Nakayama rule, expands Schur polynomials in the bosonic Fock
//! space and realizes the fermionic Fock space on partitions. Most quantities
//! can be computed along two or more independent routes; [`verify`] bundles
//! those cross-checks into suites.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod fock;
pub mod matrix;
pub mod repforms;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use combinatorics::{Node, Partition, Permutation, SkewShape};
pub use error::{Error, Result};
pub use tableaux::{StandardTableau, WeightVector};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
