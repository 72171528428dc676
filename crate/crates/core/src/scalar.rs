//! Exact coefficient types.
//!
//! Everything in this crate is generic over [`Scalar`], a commutative field
//! with exact division. The blanket implementation covers `Ratio<T>` for any
//! signed integer backend, so both `BigRational` (the default, see
//! [`crate::Rational`]) and the fixed-width `Rational64` work.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, NumAssign, Signed};

pub trait Scalar:
    Clone + PartialEq + Eq + Hash + Debug + Display + NumAssign + Signed + Send + Sync + 'static
{
    fn int(v: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::int(num) / Self::int(den)
    }

    /// Numerator and denominator in lowest terms, denominator positive.
    fn to_parts(&self) -> (String, String);

    fn from_parts(num: &str, den: &str) -> Option<Self>;

    fn is_integer_valued(&self) -> bool {
        self.to_parts().1 == "1"
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Display
        + Hash
        + Debug
        + FromPrimitive
        + FromStr
        + NumAssign
        + Send
        + Sync
        + 'static,
{
    fn int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer backend too narrow"))
    }

    fn to_parts(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }

    fn from_parts(num: &str, den: &str) -> Option<Self> {
        let n = T::from_str(num.trim()).ok()?;
        let d = T::from_str(den.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Ratio::new(n, d))
    }

    fn is_integer_valued(&self) -> bool {
        self.is_integer()
    }
}
