use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest number of permuted elements supported (images are stored as `u8`).
pub const MAX_ELEMENTS: usize = 255;

/// A permutation of `{1, …, m}`, stored 0-based.
///
/// Its digraph has vertices `1..=m` in their natural order on a line and one
/// edge `i → s(i)` per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// 1-based cycles, each starting at its minimal element, sorted by that element.
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }
}

impl Permutation {
    /// Builds a permutation from a 1-based image list.
    pub fn new(images: &[usize]) -> Result<Self> {
        let m = images.len();
        if m > MAX_ELEMENTS {
            return Err(Error::MalformedPermutation(format!(
                "{m} elements exceeds the limit of {MAX_ELEMENTS}"
            )));
        }
        let mut seen = vec![false; m];
        let mut out = Vec::with_capacity(m);
        for &v in images {
            if v == 0 || v > m {
                return Err(Error::MalformedPermutation(format!(
                    "image {v} out of range 1..={m}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::MalformedPermutation(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
            out.push((v - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub fn from_zero_based(images: &[usize]) -> Result<Self> {
        let one: Vec<usize> = images.iter().map(|&v| v + 1).collect();
        Self::new(&one)
    }

    pub fn identity(m: usize) -> Self {
        Permutation::from_raw((0..m as u8).collect())
    }

    /// The standard cycle `1 → 2 → … → m → 1`.
    pub fn standard_cycle(m: usize) -> Self {
        Permutation::from_raw((0..m).map(|i| ((i + 1) % m) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image slice.
    pub fn as_slice(&self) -> &[u8] {
        &self.images
    }

    /// 1-based image of the 1-based position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation::from_raw(inv)
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let m = self.len();
        let mut seen = vec![false; m];
        let mut cycles = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cyc.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            cycles.push(cyc);
        }
        CycleDecomposition { cycles }
    }

    /// Concatenation: the vertices of `other` are placed after those of `self`.
    pub fn concat(&self, other: &Permutation) -> Permutation {
        let off = self.len() as u8;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + off));
        Permutation::from_raw(images)
    }

    /// Conjugation `c ∘ s ∘ c⁻¹` by the long cycle `c: i ↦ i + 1 (mod m)`.
    pub fn cyclic_conjugate(&self) -> Permutation {
        let m = self.len();
        if m == 0 {
            return self.clone();
        }
        let images = (0..m)
            .map(|j| ((self.images[(j + m - 1) % m] as usize + 1) % m) as u8)
            .collect();
        Permutation::from_raw(images)
    }

    /// Conjugation by the transposition of the adjacent 1-based positions `r, r+1`.
    pub fn swap_adjacent(&self, r: usize) -> Permutation {
        let mut images = self.images.clone();
        swap_adjacent_raw(&mut images, r - 1);
        Permutation::from_raw(images)
    }

    /// Replaces the cycle through the 1-based vertex `v` by its inverse.
    pub fn reverse_cycle_through(&self, v: usize) -> Permutation {
        let mut images = self.images.clone();
        let start = v - 1;
        let mut cur = start;
        loop {
            let next = self.images[cur] as usize;
            images[next] = cur as u8;
            cur = next;
            if cur == start {
                break;
            }
        }
        Permutation::from_raw(images)
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize != i && self.images[v as usize] as usize == i)
    }
}

/// Conjugates a 0-based image list in place by the transposition `(r r+1)`.
pub(crate) fn swap_adjacent_raw(images: &mut [u8], r: usize) {
    let (a, b) = (r as u8, r as u8 + 1);
    images.swap(r, r + 1);
    for v in images.iter_mut() {
        if *v == a {
            *v = b;
        } else if *v == b {
            *v = a;
        }
    }
}

pub(crate) fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    for &v in images {
        let v = v as usize;
        if v >= images.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut images = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::MalformedPermutation(format!("bad token `{tok}`")))?;
            images.push(v);
        }
        Permutation::new(&images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_reject() {
        assert_eq!(p("2 1").to_one_based(), vec![2, 1]);
        assert_eq!(p("3 5 2 1 4").to_one_based(), vec![3, 5, 2, 1, 4]);
        assert!(matches!(
            "2 2 1".parse::<Permutation>(),
            Err(Error::MalformedPermutation(_))
        ));
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("3 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_decompositions() {
        let c = p("2 1").cycles();
        assert_eq!(c.cycles, vec![vec![1, 2]]);
        assert_eq!(c.count(), 1);
        assert_eq!(p("1 2 3").cycles().cycles, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(p("3 5 2 1 4").cycles().cycles, vec![vec![1, 3, 2, 5, 4]]);
    }

    #[test]
    fn cyclic_conjugation() {
        assert_eq!(p("2 1").cyclic_conjugate(), p("2 1"));
        let c = Permutation::standard_cycle(5);
        assert_eq!(c.cyclic_conjugate(), c);
        assert_eq!(p("1 3 2").cyclic_conjugate(), p("3 2 1"));
        let s = p("3 5 2 1 4");
        let mut t = s.clone();
        for _ in 0..5 {
            t = t.cyclic_conjugate();
        }
        assert_eq!(t, s);
    }

    #[test]
    fn reversal_and_swap() {
        let c = Permutation::standard_cycle(3);
        assert_eq!(c.reverse_cycle_through(2), p("3 1 2"));
        assert_eq!(p("3 4 1 2").swap_adjacent(2), p("2 1 4 3"));
        assert_eq!(p("2 1").concat(&p("1")), p("2 1 3"));
    }
}
