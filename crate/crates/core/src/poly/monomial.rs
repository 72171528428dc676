use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// First variable index used for the auxiliary `x_i` variables.
pub const X_OFFSET: u16 = 1000;

/// A ring variable: `C_k` for indices below [`X_OFFSET`], `x_i` above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u16);

impl Var {
    pub fn c(k: usize) -> Var {
        assert!(k < X_OFFSET as usize, "Casimir index {k} too large");
        Var(k as u16)
    }

    pub fn x(i: usize) -> Var {
        Var(X_OFFSET + i as u16)
    }

    /// The Casimir index, if this is a `C` variable.
    pub fn casimir_index(self) -> Option<usize> {
        (self.0 < X_OFFSET).then_some(self.0 as usize)
    }

    /// Display priority: `C1 < C2 < … < x1 < x2 < … < C0`.
    fn priority(self) -> u16 {
        if self.0 == 0 {
            u16::MAX
        } else {
            self.0
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.casimir_index() {
            Some(k) => write!(f, "C{k}"),
            None => write!(f, "x{}", self.0 - X_OFFSET),
        }
    }
}

/// A product of variable powers, stored as `(variable, exponent)` pairs sorted
/// by variable with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u16); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        let mut s = SmallVec::new();
        if e > 0 {
            s.push((v, e));
        }
        Monomial(s)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u16)>) -> Self {
        let mut out = Monomial::one();
        for (v, e) in pairs {
            out = out.mul(&Monomial::var_pow(v, e));
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// This monomial with the variable `v` removed.
    pub fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(w, _)| *w != v).collect())
    }

    fn by_priority(&self) -> impl Iterator<Item = (u16, u16)> + '_ {
        let (head, tail) = match self.0.first() {
            Some((v, _)) if v.0 == 0 => (&self.0[1..], &self.0[..1]),
            _ => (&self.0[..], &self.0[..0]),
        };
        head.iter()
            .chain(tail.iter())
            .map(|&(v, e)| (v.priority(), e))
    }
}

/// Display order: higher total degree first, then graded lexicographic with
/// variables ranked `C1, C2, …, x1, x2, …, C0`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let mut a = self.by_priority();
            let mut b = other.by_priority();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some((ka, ea)), Some((kb, eb))) => {
                        if ka != kb {
                            return ka.cmp(&kb);
                        }
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(usize, u16)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(k, e)| (Var::c(k), e)))
    }

    #[test]
    fn display_order() {
        let mut v = vec![m(&[(0, 1), (2, 1)]), m(&[(2, 2)]), m(&[(1, 2)]), m(&[(2, 1)])];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["C1^2", "C2^2", "C0*C2", "C2"]);
    }

    #[test]
    fn product_merges() {
        let a = m(&[(0, 1), (2, 1)]);
        let b = m(&[(2, 2), (4, 1)]);
        assert_eq!(a.mul(&b), m(&[(0, 1), (2, 3), (4, 1)]));
        assert_eq!(a.mul(&b).degree(), 5);
        assert_eq!(Monomial::var(Var::x(3)).to_string(), "x3");
    }
}
