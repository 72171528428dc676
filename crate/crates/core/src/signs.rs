//! Sign polynomials `f_s` attached to permutations for the super case.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Which indices count as distinguished in `P1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    /// `s(i) > i`.
    #[default]
    Corrected,
    /// `s(i) > 1`.
    Literal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignData {
    pub m: usize,
    pub reading: Reading,
    /// 1-based distinguished indices.
    pub p1: BTreeSet<usize>,
    /// 1-based pairs `(i, j)` with `i < j`.
    pub p2: BTreeSet<(usize, usize)>,
}

/// Shorthand for [`distinguished_sets_with`] under the default reading.
pub fn distinguished_sets(s: &Permutation) -> SignData {
    distinguished_sets_with(s, Reading::default())
}

pub fn distinguished_sets_with(s: &Permutation, reading: Reading) -> SignData {
    let m = s.len();
    let p1 = (1..=m)
        .filter(|&i| match reading {
            Reading::Corrected => s.image(i) > i,
            Reading::Literal => s.image(i) > 1,
        })
        .collect();
    // points i + 1/3 and s(i) - 1/3, scaled by 3
    let ends = |i: usize| (3 * i + 1, 3 * s.image(i) - 1);
    let mut p2 = BTreeSet::new();
    for i in 1..=m {
        let (a, b) = ends(i);
        let (lo, hi) = (a.min(b), a.max(b));
        let inside = |x: usize| lo < x && x < hi;
        for j in i + 1..=m {
            let (c, d) = ends(j);
            if inside(c) != inside(d) {
                p2.insert((i, j));
            }
        }
    }
    SignData { m, reading, p1, p2 }
}

impl SignData {
    /// `f_s(τ) mod 2`.
    pub fn exponent(&self, tau: &[bool]) -> Result<bool> {
        if tau.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                got: tau.len(),
            });
        }
        let linear = self.p1.iter().filter(|&&i| tau[i - 1]).count();
        let quadratic = self.p2.iter().filter(|&&(i, j)| tau[i - 1] && tau[j - 1]).count();
        Ok((linear + quadratic) % 2 == 1)
    }
}

/// `(−1)^{f_s(τ)}`.
pub fn sign_value(sd: &SignData, tau: &[bool]) -> Result<i8> {
    Ok(if sd.exponent(tau)? { -1 } else { 1 })
}
