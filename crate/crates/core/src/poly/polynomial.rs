use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, Var, X_OFFSET};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in display order (see [`Monomial`]'s `Ord`), and zero
/// coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for Poly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(S::int(c))
    }

    pub fn term(c: S, m: Monomial) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(S::one(), Monomial::var(v))
    }

    /// The Casimir variable `C_k`.
    pub fn c(k: usize) -> Self {
        Self::var(Var::c(k))
    }

    /// The auxiliary variable `x_i`.
    pub fn x(i: usize) -> Self {
        Self::var(Var::x(i))
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly<S>, c: &S) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Poly<S> {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, m: &Monomial) -> Poly<S> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly<S> {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: Var, e: u16) -> Poly<S> {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            if m.exponent(v) == e {
                out.add_term(m.without(v), a.clone());
            }
        }
        out
    }

    /// Ring-homomorphic substitution; unassigned variables pass through.
    pub fn substitute(&self, assignment: &HashMap<Var, Poly<S>>) -> Poly<S> {
        let mut powers: HashMap<(Var, u16), Poly<S>> = HashMap::new();
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            let mut fixed = Monomial::one();
            let mut acc = Self::constant(a.clone());
            for (v, e) in m.factors() {
                match assignment.get(&v) {
                    None => fixed = fixed.mul(&Monomial::var_pow(v, e)),
                    Some(val) => {
                        let pw = powers
                            .entry((v, e))
                            .or_insert_with(|| val.pow(e as u32))
                            .clone();
                        acc = &acc * &pw;
                    }
                }
            }
            out = &out + &acc.shift(&fixed);
        }
        out
    }

    /// Substitutes `C_0` by a constant.
    pub fn specialize_c0(&self, value: &S) -> Poly<S> {
        let mut a = HashMap::new();
        a.insert(Var::c(0), Self::constant(value.clone()));
        self.substitute(&a)
    }

    /// True when every Casimir variable present has an even index.
    pub fn has_only_even_casimirs(&self) -> bool {
        self.first_odd_casimir().is_none()
    }

    pub fn first_odd_casimir(&self) -> Option<usize> {
        self.variables()
            .into_iter()
            .filter_map(Var::casimir_index)
            .find(|k| k % 2 == 1)
    }

    pub fn max_casimir_index(&self) -> Option<usize> {
        self.variables()
            .into_iter()
            .filter_map(Var::casimir_index)
            .max()
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let (num, den) = c.to_parts();
                TermJson {
                    num,
                    den,
                    exponents: m.factors().map(|(v, e)| (v.to_string(), e)).collect(),
                }
            })
            .collect()
    }

    pub fn from_json(terms: &[TermJson]) -> Result<Self> {
        let mut p = Self::zero();
        for t in terms {
            let c = S::from_parts(&t.num, &t.den).ok_or_else(|| {
                Error::MalformedPolynomial(format!("bad coefficient {}/{}", t.num, t.den))
            })?;
            let mut m = Monomial::one();
            for (name, &e) in &t.exponents {
                m = m.mul(&Monomial::var_pow(parse_var(name)?, e));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

/// JSON form of a single term: `{num, den, exponents: {"C0": 1, "C2": 1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub num: String,
    pub den: String,
    pub exponents: BTreeMap<String, u16>,
}

fn parse_var(name: &str) -> Result<Var> {
    let bad = || Error::MalformedPolynomial(format!("bad variable `{name}`"));
    let (kind, digits) = name.split_at(1.min(name.len()));
    let idx: usize = digits.parse().map_err(|_| bad())?;
    match kind {
        "C" if idx < X_OFFSET as usize => Ok(Var::c(idx)),
        "x" => Ok(Var::x(idx)),
        _ => Err(bad()),
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, a) in &small.terms {
            out.add_term(m.clone(), a.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (m, a) in &rhs.terms {
            out.add_term(m.clone(), -a.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;

    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        let mut out = Poly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.mul(mb), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        self.scale(&-S::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $f(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> FromStr for Poly<S> {
    type Err = Error;

    /// Parses the text form produced by `Display`, e.g. `1/2*C0*C2 - C2`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::MalformedPolynomial(format!("{msg} in `{text}`"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = Poly::zero();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = S::one();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -S::one();
                rest = r;
            } else if !first {
                return Err(bad("expected + or -"));
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = sign;
            let mut mono = Monomial::one();
            for factor in term.split('*') {
                if factor.starts_with(['C', 'x']) {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u16>().map_err(|_| bad("bad exponent"))?),
                        None => (factor, 1),
                    };
                    mono = mono.mul(&Monomial::var_pow(parse_var(name)?, e));
                } else {
                    let (n, d) = factor.split_once('/').unwrap_or((factor, "1"));
                    let c = S::from_parts(n, d).ok_or_else(|| bad("bad coefficient"))?;
                    coeff *= c;
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(&P::c(2) * &P::c(2), p("C2^2"));
        assert!((&p("C2 + 3") * &P::zero()).is_zero());
        assert_eq!(&p("C2 - C0") * &p("C2 + C0"), p("C2^2 - C0^2"));
    }

    #[test]
    fn substitution() {
        let q = p("1/2*C0*C2 - C2");
        assert_eq!(q.specialize_c0(&BigRational::int(3)), p("1/2*C2"));
        assert_eq!(q.substitute(&HashMap::new()), q);
        let mut a = HashMap::new();
        a.insert(Var::c(2), p("C4 + 1"));
        assert_eq!(p("C2^2").substitute(&a), p("C4^2 + 2*C4 + 1"));
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "C1^2 + C2^2 - C0*C2",
            "C2^2 - 2*C0*C2 + 4*C2",
            "1/2*C0*C2 - C2",
            "-1/4*C0^3*C2 + 3",
            "C0*x1^2 - 7/3",
            "0",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("C2 +".parse::<P>().is_err());
        assert!("C2 C3".parse::<P>().is_err());
        assert!("Q2".parse::<P>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = p("-1/4*C0^3*C2 + 5/4*C0^2*C2 + x2^2");
        let js = serde_json::to_string(&q.to_json()).unwrap();
        let back: Vec<TermJson> = serde_json::from_str(&js).unwrap();
        assert_eq!(P::from_json(&back).unwrap(), q);
        assert!(js.contains("\"exponents\":{\"C0\":3,\"C2\":1}"));
    }

    #[test]
    fn linear_coefficients() {
        let q = p("3*C5*C0 + C5 - C2^2");
        assert_eq!(q.degree_in(Var::c(5)), 1);
        assert_eq!(q.coefficient_of(Var::c(5), 1), p("3*C0 + 1"));
        assert_eq!(q.coefficient_of(Var::c(5), 0), p("-C2^2"));
        assert_eq!(q.first_odd_casimir(), Some(5));
    }
}
