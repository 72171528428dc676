//! Exact polynomials in the Casimir variables and truncated series in `u^{-1}`.

mod monomial;
mod polynomial;
mod series;

pub use monomial::{Monomial, Var, X_OFFSET};
pub use polynomial::{Poly, TermJson};
pub use series::InversePowerSeries;
