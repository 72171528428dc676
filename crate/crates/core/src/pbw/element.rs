use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A PBW monomial: weakly increasing basis indices.
pub type PbwMonomial = Vec<u16>;

/// Linear combination of PBW monomials with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwElement<S> {
    terms: BTreeMap<PbwMonomial, S>,
}

impl<S: Scalar> Default for PbwElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> PbwElement<S> {
    pub fn zero() -> Self {
        PbwElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::monomial(Vec::new(), c)
    }

    /// `c` times the given monomial; the caller guarantees it is sorted.
    pub fn monomial(m: PbwMonomial, c: S) -> Self {
        debug_assert!(m.windows(2).all(|w| w[0] <= w[1]));
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u16]) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone() * c.clone());
        }
    }

    pub fn add(&mut self, other: &Self) {
        self.add_scaled(other, &S::one());
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-S::one());
        out
    }
}

impl<S: Scalar> fmt::Display for PbwElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for g in m {
                write!(f, "*g{g}")?;
            }
        }
        Ok(())
    }
}
