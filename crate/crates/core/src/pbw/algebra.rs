use std::collections::HashMap;
use std::fmt;

use crate::engine::Family;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// so(N) or sp(2M) with generators `X_{ij}`, `1 ≤ i, j ≤ dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub family: Family,
    /// `N` for so, `2M` for sp.
    pub dim: usize,
}

impl AlgebraSpec {
    pub fn so(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!("so({n}) needs N >= 2")));
        }
        Ok(AlgebraSpec {
            family: Family::So,
            dim: n,
        })
    }

    pub fn sp(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidFamily("sp(2M) needs M >= 1".into()));
        }
        Ok(AlgebraSpec {
            family: Family::Sp,
            dim: 2 * m,
        })
    }

    pub fn new(family: Family, n: usize, m: usize) -> Result<Self> {
        match family {
            Family::So => Self::so(n),
            Family::Sp => Self::sp(m),
            Family::Osp => Err(Error::InvalidFamily(
                "no enveloping-algebra oracle for osp".into(),
            )),
        }
    }

    /// `ī = dim + 1 − i`.
    pub fn bar(&self, i: usize) -> usize {
        self.dim + 1 - i
    }

    /// `ε_i`: `+1` for `i ≤ M`, `−1` above; always `+1` for so.
    pub fn eps(&self, i: usize) -> i64 {
        match self.family {
            Family::Sp if i > self.dim / 2 => -1,
            _ => 1,
        }
    }

    /// The value of `C_0`: `N` or `−2M`.
    pub fn c0(&self) -> i64 {
        match self.family {
            Family::Sp => -(self.dim as i64),
            _ => self.dim as i64,
        }
    }

    pub fn basis_size(&self) -> usize {
        let d = self.dim;
        match self.family {
            Family::Sp => d * (d + 1) / 2,
            _ => d * (d - 1) / 2,
        }
    }

    /// `X_{ij}` as `±` a basis representative, or `None` when it vanishes.
    /// Representatives: for so the pairs with `i + j < N + 1`, for sp the
    /// lexicographically smaller of `(i, j)` and `(j̄, ī)`.
    pub fn reduce_generator(&self, i: usize, j: usize) -> Option<((usize, usize), i64)> {
        let partner = (self.bar(j), self.bar(i));
        match self.family {
            Family::Sp => {
                if (i, j) <= partner {
                    Some(((i, j), 1))
                } else {
                    Some((partner, -self.eps(i) * self.eps(j)))
                }
            }
            _ => match (i + j).cmp(&(self.dim + 1)) {
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Less => Some(((i, j), 1)),
                std::cmp::Ordering::Greater => Some((partner, -1)),
            },
        }
    }

    /// `[X_{ij}, X_{kl}]` as a list of `(coefficient, (p, q))` generator terms.
    pub fn bracket(&self, (i, j): (usize, usize), (k, l): (usize, usize)) -> Vec<(i64, (usize, usize))> {
        let mut out = Vec::new();
        if k == j {
            out.push((1, (i, l)));
        }
        if i == l {
            out.push((-1, (k, j)));
        }
        let (e_jk, e_il) = match self.family {
            Family::Sp => (self.eps(j) * self.eps(k), self.eps(i) * self.eps(l)),
            _ => (-1, -1),
        };
        if self.bar(l) == j {
            out.push((e_jk, (i, self.bar(k))));
        }
        if i == self.bar(k) {
            out.push((-e_il, (self.bar(l), j)));
        }
        out
    }

    /// The integer matrix of `X_{ij}` in the defining representation:
    /// `E_{ij} − E_{j̄ī}` for so and `E_{ij} − ε_iε_j E_{j̄ī}` for sp.
    pub fn defining_matrix(&self, i: usize, j: usize) -> Vec<Vec<i64>> {
        let d = self.dim;
        let mut m = vec![vec![0; d]; d];
        m[i - 1][j - 1] += 1;
        m[self.bar(j) - 1][self.bar(i) - 1] -= self.eps(i) * self.eps(j);
        m
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.dim)
    }
}

/// Ordered basis of representatives with the structure constants in it.
#[derive(Debug, Clone)]
pub struct GeneratorBasis<S> {
    pub spec: AlgebraSpec,
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    brackets: Vec<Vec<Vec<(u16, S)>>>,
}

impl<S: Scalar> GeneratorBasis<S> {
    pub fn new(spec: AlgebraSpec) -> Self {
        let d = spec.dim;
        let mut pairs = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                if let Some((rep, _)) = spec.reduce_generator(i, j) {
                    if rep == (i, j) {
                        pairs.push((i, j));
                    }
                }
            }
        }
        let index: HashMap<_, _> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut basis = GeneratorBasis {
            spec,
            pairs,
            index,
            brackets: Vec::new(),
        };
        let n = basis.pairs.len();
        let mut brackets = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let mut acc: HashMap<u16, S> = HashMap::new();
                for (c, (p, q)) in spec.bracket(basis.pairs[a], basis.pairs[b]) {
                    if let Some((g, s)) = basis.generator(p, q) {
                        *acc.entry(g).or_insert_with(S::zero) += S::int(c * s);
                    }
                }
                let mut terms: Vec<(u16, S)> = acc.into_iter().filter(|e| !e.1.is_zero()).collect();
                terms.sort_by_key(|e| e.0);
                brackets[a][b] = terms;
            }
        }
        basis.brackets = brackets;
        basis
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `X_{ij}` as `(basis index, sign)`, or `None` if it vanishes.
    pub fn generator(&self, i: usize, j: usize) -> Option<(u16, i64)> {
        let (rep, s) = self.spec.reduce_generator(i, j)?;
        Some((self.index[&rep] as u16, s))
    }

    /// `[g_a, g_b]` in the basis.
    pub fn bracket(&self, a: u16, b: u16) -> &[(u16, S)] {
        &self.brackets[a as usize][b as usize]
    }
}
