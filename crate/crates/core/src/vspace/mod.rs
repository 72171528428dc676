//! Chord-diagram spaces modulo four-term relations.

mod generators;
mod intrank;
mod matrix;
mod quotient;
mod relations;

pub use generators::{h_check, GeneratorTable, GENERATORS, H_TERMS};
pub use intrank::{integer_rank_profile, ExactInt, IntEchelon};
pub use matrix::{left_null_space, Echelon, SparseMatrix, SparseRow};
pub use quotient::{
    dim_a, dim_record, kernel_dims, poly_rank, vanishing_combinations, DimRecord, KernelAnalysis,
    QuotientBasis, MAX_QUOTIENT_CHORDS,
};
pub use relations::{four_term_instance, four_term_relations, four_term_rows, ordered_diagrams};
