use std::fmt;

use super::polynomial::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Truncated series `Σ_{k=0}^{T} c_k u^{-k} + O(u^{-T-1})` with polynomial
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversePowerSeries<S> {
    coeffs: Vec<Poly<S>>,
}

impl<S: Scalar> InversePowerSeries<S> {
    pub fn zero(order: usize) -> Self {
        InversePowerSeries {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Poly::one())
    }

    pub fn constant(order: usize, c: Poly<S>) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from its leading coefficients, padding with zeros or
    /// truncating to `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Poly<S>>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `u^{-1}`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Poly::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Poly<S> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly<S>] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(InversePowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(InversePowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Poly<S>) -> Self {
        InversePowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let t = self.order();
        let mut out = Self::zero(t);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=t - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires constant term 1.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0] != Poly::one() {
            return Err(Error::NonUnitSeries);
        }
        let t = self.order();
        let mut b = Self::one(t);
        for k in 1..=t {
            let mut acc = Poly::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &b.coeffs[k - j]);
                }
            }
            b.coeffs[k] = -acc;
        }
        Ok(b)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }

    /// Re-expands `a(c − u)` in powers of `u^{-1}`.
    pub fn reflect(&self, c: &Poly<S>) -> Self {
        let t = self.order();
        // q = (c − u)^{-1} = −Σ_j c^j u^{-j-1}
        let mut q = Self::zero(t);
        let mut cp = Poly::one();
        for j in 0..t {
            q.coeffs[j + 1] = -&cp;
            cp = &cp * c;
        }
        let mut out = Self::constant(t, self.coeffs[0].clone());
        let mut qk = Self::one(t);
        for k in 1..=t {
            qk = qk.mul(&q).expect("same order");
            if !self.coeffs[k].is_zero() {
                out = out.add(&qk.scale(&self.coeffs[k])).expect("same order");
            }
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map(&self, f: impl Fn(&Poly<S>) -> Poly<S>) -> Self {
        InversePowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Index of the first coefficient that differs from `other`, if any.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl<S: Scalar> fmt::Display for InversePowerSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})*u^-{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(u^-{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Ser = InversePowerSeries<BigRational>;
    type P = Poly<BigRational>;

    fn int(k: i64) -> P {
        P::from_int(k)
    }

    #[test]
    fn products_and_inverse() {
        let t = 6;
        let a = Ser::from_coeffs(t, [int(1), int(1)]);
        let b = Ser::from_coeffs(t, [int(1), int(-1)]);
        assert_eq!(a.mul(&b).unwrap(), Ser::from_coeffs(t, [int(1), int(0), int(-1)]));
        assert_eq!(a.mul(&Ser::one(t)).unwrap(), a);
        let geo = b.invert().unwrap();
        assert_eq!(geo, Ser::from_coeffs(t, vec![int(1); t + 1]));
        assert_eq!(geo.mul(&b).unwrap(), Ser::one(t));
        assert_eq!(geo.invert().unwrap(), b);
        assert_eq!(Ser::one(t).invert().unwrap(), Ser::one(t));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            Ser::one(3).mul(&Ser::one(4)),
            Err(Error::OrderMismatch(3, 4))
        ));
        assert!(matches!(
            Ser::constant(3, int(2)).invert(),
            Err(Error::NonUnitSeries)
        ));
    }

    #[test]
    fn reflection() {
        let t = 5;
        let c = P::c(0) - int(1);
        assert_eq!(Ser::one(t).reflect(&c), Ser::one(t));
        let r = Ser::t(t).reflect(&c);
        for k in 1..=t {
            assert_eq!(*r.coeff(k), -c.pow(k as u32 - 1));
        }
        let a = Ser::from_coeffs(t, [int(1), P::c(2), P::c(0), int(3), P::c(4)]);
        assert_eq!(a.reflect(&c).reflect(&c), a);
    }
}
