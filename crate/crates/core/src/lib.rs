//! Universal gl and so weight systems on permutations and chord diagrams.

pub mod casimir;
pub mod engine;
pub mod error;
pub mod pbw;
pub mod perm;
pub mod poly;
pub mod scalar;
pub mod signs;
pub mod vspace;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default exact coefficient type.
pub type Rational = num_rational::BigRational;
pub type Polynomial = poly::Poly<Rational>;
pub type Series = poly::InversePowerSeries<Rational>;
pub type Engine = engine::Engine<Rational>;
