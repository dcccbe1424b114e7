//! Graph generators: blowups, scaled isomorphism, the two parameterized
//! families and the named fixtures.

mod blowup;
mod families;
pub mod fixtures;
mod iso;

pub use blowup::{blowup, blowup_pair_valid, copy_label, Multiplicity};
pub use families::{family_charpoly_closed, family_coalesced, family_subgraph1, family_subgraph2, Family, FamilyVariant};
pub use fixtures::{fixture, fixtures, FIXTURE_NAMES};
pub use iso::{scaled_isomorphism, theorem3_check, theorem3_witness, ScaledIsomorphism, Theorem3Witness};
