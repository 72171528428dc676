//! Permutations, chord diagrams and extended permutation graphs.

mod chord;
mod extended;
mod permutation;

pub use chord::{enumerate_diagrams, ChordDiagram, MAX_ENUM_CHORDS};
pub(crate) use chord::canonical_of;
pub use extended::{normalize_extended, ExtendedGraph, Role, SignedPermutation};
pub(crate) use permutation::swap_adjacent_raw;
pub use permutation::{CycleDecomposition, Permutation, MAX_ELEMENTS};
