use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::reduce::{first_block, odd_cycle, reduce, rotation_key, Kind, Oracle};
use crate::error::{Error, Result};
use crate::perm::{ChordDiagram, Permutation};
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineConfig {
    /// Key the memo by the rotation class of the image list.
    pub canonicalize_rotations: bool,
}

type Memo<S> = DashMap<Vec<u8>, Arc<Poly<S>>>;

/// Memoized evaluator for one weight system.
///
/// The memo is shared and safe for concurrent use, so one engine can serve a
/// parallel batch; results do not depend on scheduling.
#[derive(Debug)]
pub struct Engine<S> {
    kind: Kind,
    config: EngineConfig,
    memo: Arc<Memo<S>>,
    odd: DashMap<usize, Arc<Poly<S>>>,
}

impl<S: Scalar> Engine<S> {
    pub fn new(kind: Kind, config: EngineConfig) -> Self {
        Engine {
            kind,
            config,
            memo: Arc::new(DashMap::new()),
            odd: DashMap::new(),
        }
    }

    pub fn gl() -> Self {
        Self::new(Kind::Gl, EngineConfig::default())
    }

    pub fn so() -> Self {
        Self::new(Kind::So, EngineConfig::default())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&self) {
        self.memo.clear();
        self.odd.clear();
    }

    pub fn eval(&self, s: &Permutation) -> Poly<S> {
        (*self.eval_raw(s.as_slice())).clone()
    }

    pub fn eval_diagram(&self, d: &ChordDiagram) -> Poly<S> {
        self.eval(&d.to_permutation())
    }

    /// Product of the values of the factors.
    pub fn eval_product(&self, factors: &[Permutation]) -> Poly<S> {
        factors
            .iter()
            .fold(Poly::one(), |acc, p| &acc * &*self.eval_raw(p.as_slice()))
    }

    /// Evaluates a batch in parallel.
    pub fn eval_many(&self, perms: &[Permutation]) -> Vec<Poly<S>> {
        perms.par_iter().map(|p| self.eval(p)).collect()
    }

    /// Value of the standard `m`-cycle for odd `m` under the so recursion.
    pub fn odd_cycle_value(&self, m: usize) -> Result<Poly<S>> {
        if m % 2 == 0 {
            return Err(Error::NotOdd(m));
        }
        let o = self;
        Ok((*o.odd_raw(m)).clone())
    }

    fn odd_raw(&self, k: usize) -> Arc<Poly<S>> {
        if let Some(v) = self.odd.get(&k) {
            return v.clone();
        }
        let mut o = self;
        let v = Arc::new(odd_cycle(k, &mut o));
        self.odd.insert(k, v.clone());
        v
    }

    pub(crate) fn eval_raw(&self, s: &[u8]) -> Arc<Poly<S>> {
        if s.is_empty() {
            return Arc::new(Poly::one());
        }
        let key = if self.config.canonicalize_rotations {
            rotation_key(s)
        } else {
            s.to_vec()
        };
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = Arc::new(self.compute(s));
        self.memo.insert(key, v.clone());
        v
    }

    fn compute(&self, s: &[u8]) -> Poly<S> {
        let p = first_block(s);
        if p < s.len() {
            let rest: Vec<u8> = s[p..].iter().map(|&x| x - p as u8).collect();
            return &*self.eval_raw(&s[..p]) * &*self.eval_raw(&rest);
        }
        let mut o = self;
        reduce(self.kind, s, 0, &mut o)
    }
}

impl<S: Scalar> Oracle<S> for &Engine<S> {
    fn eval(&mut self, s: &[u8]) -> Arc<Poly<S>> {
        self.eval_raw(s)
    }

    fn base(&mut self, k: usize) -> Arc<Poly<S>> {
        match self.kind {
            Kind::So if k % 2 == 1 => self.odd_raw(k),
            _ => Arc::new(Poly::c(k)),
        }
    }
}

/// Evaluator that reduces a uniformly random cycle, gathered from a random
/// vertex, at every step. Uses a private memo.
#[derive(Debug)]
pub struct RandomizedEngine<S> {
    kind: Kind,
    rng: StdRng,
    memo: HashMap<Vec<u8>, Arc<Poly<S>>>,
    odd: HashMap<usize, Arc<Poly<S>>>,
}

impl<S: Scalar> RandomizedEngine<S> {
    pub fn new(kind: Kind, seed: u64) -> Self {
        RandomizedEngine {
            kind,
            rng: StdRng::seed_from_u64(seed),
            memo: HashMap::new(),
            odd: HashMap::new(),
        }
    }

    pub fn eval(&mut self, s: &Permutation) -> Poly<S> {
        (*self.eval_raw(s.as_slice())).clone()
    }

    fn eval_raw(&mut self, s: &[u8]) -> Arc<Poly<S>> {
        if s.is_empty() {
            return Arc::new(Poly::one());
        }
        if let Some(v) = self.memo.get(s) {
            return v.clone();
        }
        let v = self.rng.gen_range(0..s.len());
        let kind = self.kind;
        let val = Arc::new(reduce(kind, s, v, self));
        self.memo.insert(s.to_vec(), val.clone());
        val
    }
}

impl<S: Scalar> Oracle<S> for RandomizedEngine<S> {
    fn eval(&mut self, s: &[u8]) -> Arc<Poly<S>> {
        self.eval_raw(s)
    }

    fn base(&mut self, k: usize) -> Arc<Poly<S>> {
        if self.kind == Kind::Gl || k % 2 == 0 {
            return Arc::new(Poly::c(k));
        }
        if let Some(v) = self.odd.get(&k) {
            return v.clone();
        }
        let v = Arc::new(odd_cycle(k, self));
        self.odd.insert(k, v.clone());
        v
    }
}
