//! Brute-force checks in the enveloping algebras of so(N) and sp(2M).

mod algebra;
mod element;
mod envelope;

pub use algebra::{AlgebraSpec, GeneratorBasis};
pub use element::{PbwElement, PbwMonomial};
pub use envelope::{Envelope, MAX_INDEX_TUPLES};
