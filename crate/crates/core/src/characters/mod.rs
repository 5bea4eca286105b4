//! Irreducible characters of the symmetric groups.
//!
//! Values come from the Murnaghan-Nakayama rule ([`mn_character`]); the
//! crate also computes them as traces of seminormal matrices and as Fock
//! space pairings, and [`crate::verify`] compares all three.

mod group_algebra;
mod mn;
mod table;

pub use group_algebra::{central_idempotent, GroupAlgebraElement, DEFAULT_IDEMPOTENT_CAP};
pub use mn::{added_border_strips, border_strips, hook_cycle_character, mn_character, MnEvaluator};
pub use table::{character_table, restriction_multiplicities, CharacterTable, DEFAULT_TABLE_CAP};
