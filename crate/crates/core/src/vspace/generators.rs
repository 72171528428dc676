use std::collections::HashMap;

use crate::engine::Engine;
use crate::perm::ChordDiagram;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Named generator diagrams in degrees 1 to 7, as chord endpoint pairs.
pub const GENERATORS: [(&str, &[(usize, usize)]); 21] = [
    ("p1", &[(1, 2)]),
    ("p2", &[(1, 3), (2, 4)]),
    ("p3", &[(1, 3), (2, 5), (4, 6)]),
    ("p41", &[(1, 3), (2, 5), (4, 7), (6, 8)]),
    ("p42", &[(1, 4), (2, 7), (3, 6), (5, 8)]),
    ("p51", &[(1, 3), (2, 5), (4, 7), (6, 9), (8, 10)]),
    ("p52", &[(1, 3), (2, 6), (4, 9), (5, 8), (7, 10)]),
    ("p53", &[(1, 4), (2, 9), (3, 6), (5, 8), (7, 10)]),
    ("p61", &[(1, 3), (2, 5), (4, 7), (6, 9), (8, 11), (10, 12)]),
    ("p62", &[(1, 3), (2, 5), (4, 8), (6, 11), (7, 10), (9, 12)]),
    ("p63", &[(1, 3), (2, 6), (4, 11), (5, 8), (7, 10), (9, 12)]),
    ("p64", &[(1, 4), (2, 11), (3, 6), (5, 8), (7, 10), (9, 12)]),
    ("p65", &[(1, 4), (2, 8), (3, 6), (5, 11), (7, 10), (9, 12)]),
    ("p71", &[(1, 3), (2, 5), (4, 7), (6, 9), (8, 11), (10, 13), (12, 14)]),
    ("p72", &[(1, 3), (2, 5), (4, 7), (6, 10), (8, 13), (9, 12), (11, 14)]),
    ("p73", &[(1, 3), (2, 5), (4, 8), (6, 13), (7, 10), (9, 12), (11, 14)]),
    ("p74", &[(1, 3), (2, 6), (4, 13), (5, 8), (7, 10), (9, 12), (11, 14)]),
    ("p75", &[(1, 4), (2, 13), (3, 6), (5, 8), (7, 10), (9, 12), (11, 14)]),
    ("p76", &[(1, 3), (2, 6), (4, 10), (5, 8), (7, 13), (9, 12), (11, 14)]),
    ("p77", &[(1, 4), (2, 7), (3, 6), (5, 10), (8, 13), (9, 12), (11, 14)]),
    ("p78", &[(1, 4), (2, 8), (3, 6), (5, 13), (7, 10), (9, 12), (11, 14)]),
];

/// The element `h` of degree 7: coefficient and generator exponents.
pub const H_TERMS: [(i64, &[(&str, u32)]); 29] = [
    (3, &[("p1", 5), ("p2", 1)]),
    (-15, &[("p1", 3), ("p2", 2)]),
    (-87, &[("p1", 1), ("p2", 3)]),
    (-6, &[("p1", 4), ("p3", 1)]),
    (255, &[("p1", 2), ("p2", 1), ("p3", 1)]),
    (-12, &[("p2", 2), ("p3", 1)]),
    (-171, &[("p1", 1), ("p3", 2)]),
    (-99, &[("p1", 3), ("p41", 1)]),
    (133, &[("p3", 1), ("p41", 1)]),
    (3, &[("p1", 3), ("p42", 1)]),
    (-28, &[("p3", 1), ("p42", 1)]),
    (21, &[("p1", 1), ("p2", 1), ("p42", 1)]),
    (45, &[("p1", 2), ("p51", 1)]),
    (-24, &[("p1", 2), ("p52", 1)]),
    (18, &[("p1", 2), ("p53", 1)]),
    (-12, &[("p2", 1), ("p53", 1)]),
    (17, &[("p1", 1), ("p61", 1)]),
    (1, &[("p1", 1), ("p62", 1)]),
    (-30, &[("p1", 1), ("p63", 1)]),
    (-8, &[("p1", 1), ("p64", 1)]),
    (20, &[("p1", 1), ("p65", 1)]),
    (-46, &[("p71", 1)]),
    (11, &[("p72", 1)]),
    (18, &[("p73", 1)]),
    (8, &[("p74", 1)]),
    (-6, &[("p75", 1)]),
    (-20, &[("p76", 1)]),
    (5, &[("p77", 1)]),
    (6, &[("p78", 1)]),
];

/// The generator diagrams, addressable by name.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    entries: Vec<(&'static str, ChordDiagram)>,
}

impl Default for GeneratorTable {
    fn default() -> Self {
        Self::new()
    }
}

impl GeneratorTable {
    pub fn new() -> Self {
        GeneratorTable {
            entries: GENERATORS
                .iter()
                .map(|(name, pairs)| {
                    (*name, ChordDiagram::from_pairs(pairs).expect("valid generator"))
                })
                .collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&ChordDiagram> {
        self.entries.iter().find(|e| e.0 == name).map(|e| &e.1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &ChordDiagram)> {
        self.entries.iter().map(|(n, d)| (*n, d))
    }

    /// Values of one weight system on all generators.
    pub fn values<S: Scalar>(&self, engine: &Engine<S>) -> HashMap<&'static str, Poly<S>> {
        let perms: Vec<_> = self.entries.iter().map(|e| e.1.to_permutation()).collect();
        let vals = engine.eval_many(&perms);
        self.entries.iter().map(|e| e.0).zip(vals).collect()
    }

    /// Evaluates `h` by multiplicativity from generator values.
    pub fn eval_h<S: Scalar>(values: &HashMap<&'static str, Poly<S>>) -> Poly<S> {
        let mut h = Poly::zero();
        for (c, mono) in H_TERMS {
            let mut t = Poly::from_int(c);
            for &(g, e) in mono {
                t = &t * &values[g].pow(e);
            }
            h = &h + &t;
        }
        h
    }
}

/// `(w_gl(h), w_so(h))`.
pub fn h_check<S: Scalar>(gl: &Engine<S>, so: &Engine<S>) -> (Poly<S>, Poly<S>) {
    let table = GeneratorTable::new();
    let hg = GeneratorTable::eval_h(&table.values(gl));
    let hs = GeneratorTable::eval_h(&table.values(so));
    (hg, hs)
}
