use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;

use crate::engine::eval_wso;
use crate::error::{Error, Result};
use crate::pbw::algebra::{AlgebraSpec, GeneratorBasis};
use crate::pbw::element::PbwElement;
use crate::perm::Permutation;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Largest number of index tuples summed by [`Envelope::w_envelope`].
pub const MAX_INDEX_TUPLES: u128 = 10_000_000;

/// The universal enveloping algebra of so(N) or sp(2M) with a memoized
/// PBW normal form.
pub struct Envelope<S> {
    basis: GeneratorBasis<S>,
    memo: DashMap<Vec<u16>, Arc<PbwElement<S>>>,
}

impl<S: Scalar> Envelope<S> {
    pub fn new(spec: AlgebraSpec) -> Self {
        Envelope {
            basis: GeneratorBasis::new(spec),
            memo: DashMap::new(),
        }
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.basis.spec
    }

    pub fn basis(&self) -> &GeneratorBasis<S> {
        &self.basis
    }

    /// Basis index of the representative `(i, j)` as a degree-one element.
    pub fn generator(&self, i: usize, j: usize) -> PbwElement<S> {
        match self.basis.generator(i, j) {
            Some((g, s)) => PbwElement::monomial(vec![g], S::int(s)),
            None => PbwElement::zero(),
        }
    }

    /// Normal form of `coeff · X_{i_1 j_1} ⋯ X_{i_k j_k}`.
    pub fn normal_form(&self, word: &[(usize, usize)], coeff: S) -> PbwElement<S> {
        let mut idx = Vec::with_capacity(word.len());
        let mut sign = 1i64;
        for &(i, j) in word {
            match self.basis.generator(i, j) {
                Some((g, s)) => {
                    idx.push(g);
                    sign *= s;
                }
                None => return PbwElement::zero(),
            }
        }
        self.nf_word(&idx).scale(&(coeff * S::int(sign)))
    }

    /// Normal form of a word of basis indices.
    pub fn nf_word(&self, word: &[u16]) -> Arc<PbwElement<S>> {
        let Some(p) = word.windows(2).position(|w| w[0] > w[1]) else {
            return Arc::new(PbwElement::monomial(word.to_vec(), S::one()));
        };
        if let Some(hit) = self.memo.get(word) {
            return hit.clone();
        }
        let mut swapped = word.to_vec();
        swapped.swap(p, p + 1);
        let mut out = (*self.nf_word(&swapped)).clone();
        let (a, b) = (word[p], word[p + 1]);
        let mut shorter = Vec::with_capacity(word.len() - 1);
        for (g, c) in self.basis.bracket(a, b) {
            shorter.clear();
            shorter.extend_from_slice(&word[..p]);
            shorter.push(*g);
            shorter.extend_from_slice(&word[p + 2..]);
            out.add_scaled(&self.nf_word(&shorter), c);
        }
        let out = Arc::new(out);
        self.memo.insert(word.to_vec(), out.clone());
        out
    }

    pub fn multiply(&self, x: &PbwElement<S>, y: &PbwElement<S>) -> PbwElement<S> {
        let mut out = PbwElement::zero();
        let mut w = Vec::new();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                w.clear();
                w.extend_from_slice(mx);
                w.extend_from_slice(my);
                out.add_scaled(&self.nf_word(&w), &(cx.clone() * cy.clone()));
            }
        }
        out
    }

    /// `Σ_{i ∈ [dim]^m} X_{i_1 i_{s(1)}} ⋯ X_{i_m i_{s(m)}}`, times
    /// `(−1)^{m+r}` for sp.
    pub fn w_envelope(&self, s: &Permutation) -> Result<PbwElement<S>> {
        let m = s.len();
        let d = self.spec().dim;
        let terms = (d as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if terms > MAX_INDEX_TUPLES {
            return Err(Error::SizeGuard {
                terms,
                limit: MAX_INDEX_TUPLES,
            });
        }
        let img = s.as_slice();
        // group equal basis words before normal ordering
        let words: HashMap<Vec<u16>, i64> = (0..d)
            .into_par_iter()
            .fold(HashMap::new, |mut acc, first| {
                let mut idx = vec![0usize; m];
                if m > 0 {
                    idx[0] = first;
                }
                loop {
                    let mut w = Vec::with_capacity(m);
                    let mut sign = 1i64;
                    let mut zero = false;
                    for k in 0..m {
                        match self.basis.generator(idx[k] + 1, idx[img[k] as usize] + 1) {
                            Some((g, sg)) => {
                                w.push(g);
                                sign *= sg;
                            }
                            None => {
                                zero = true;
                                break;
                            }
                        }
                    }
                    if !zero {
                        *acc.entry(w).or_insert(0) += sign;
                    }
                    // odometer over positions 1..m
                    let mut k = m;
                    loop {
                        if k <= 1 {
                            return acc;
                        }
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < d {
                            break;
                        }
                        idx[k] = 0;
                    }
                }
            })
            .reduce(HashMap::new, |mut a, b| {
                for (w, c) in b {
                    *a.entry(w).or_insert(0) += c;
                }
                a
            });
        let mut words: Vec<(Vec<u16>, i64)> = words.into_iter().filter(|e| e.1 != 0).collect();
        words.sort();
        let parts: Vec<PbwElement<S>> = words
            .par_iter()
            .map(|(w, c)| self.nf_word(w).scale(&S::int(*c)))
            .collect();
        let mut out = PbwElement::zero();
        for p in &parts {
            out.add(p);
        }
        if m == 0 {
            out = PbwElement::one();
        }
        let r = s.cycles().count();
        if self.spec().family == crate::engine::Family::Sp && (m + r) % 2 == 1 {
            out = out.scale(&-S::one());
        }
        Ok(out)
    }

    /// The Casimir element of order `m`.
    pub fn casimir_pbw(&self, m: usize) -> Result<PbwElement<S>> {
        self.w_envelope(&Permutation::standard_cycle(m))
    }

    /// Substitutes `C_0` and the even Casimirs into a polynomial.
    pub fn evaluate_poly(&self, p: &Poly<S>) -> Result<PbwElement<S>> {
        let mut casimirs: HashMap<usize, PbwElement<S>> = HashMap::new();
        let c0 = S::int(self.spec().c0());
        let mut out = PbwElement::zero();
        for (mono, coeff) in p.terms() {
            let mut scalar = coeff.clone();
            let mut acc = PbwElement::one();
            for (v, e) in mono.factors() {
                match v.casimir_index() {
                    Some(0) => {
                        for _ in 0..e {
                            scalar *= c0.clone();
                        }
                    }
                    Some(k) => {
                        let c = match casimirs.entry(k) {
                            std::collections::hash_map::Entry::Occupied(o) => o.into_mut(),
                            std::collections::hash_map::Entry::Vacant(v) => v.insert(self.casimir_pbw(k)?),
                        };
                        for _ in 0..e {
                            acc = self.multiply(&acc, c);
                        }
                    }
                    None => {
                        return Err(Error::MalformedPolynomial(
                            "unexpected x variable in a Casimir polynomial".into(),
                        ))
                    }
                }
            }
            out.add_scaled(&acc, &scalar);
        }
        Ok(out)
    }

    /// Compares the Casimir expansion of `s` with the brute-force sum.
    pub fn oracle_check(&self, s: &Permutation) -> Result<bool> {
        let lhs = self.evaluate_poly(&eval_wso::<S>(s))?;
        let rhs = self.w_envelope(s)?;
        Ok(lhs == rhs)
    }

    /// Text form with generators written as `Xij`.
    pub fn render(&self, e: &PbwElement<S>) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let pairs = self.basis.pairs();
        let mut out = String::new();
        for (k, (m, c)) in e.terms().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_empty() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            factors.extend(m.iter().map(|&g| {
                let (i, j) = pairs[g as usize];
                format!("X{i}{j}")
            }));
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn centrality_check(&self, e: &PbwElement<S>) -> bool {
        (0..self.basis.len() as u16).all(|g| {
            let x = PbwElement::monomial(vec![g], S::one());
            self.multiply(&x, e) == self.multiply(e, &x)
        })
    }
}
