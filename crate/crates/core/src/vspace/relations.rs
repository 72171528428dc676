use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::error::Result;
use crate::perm::{canonical_of, enumerate_diagrams, ChordDiagram};
use crate::scalar::Scalar;

use super::matrix::SparseMatrix;

/// The chord diagrams with `n` chords ordered as matrix columns: more
/// crossings first, ties broken by canonical word.
pub fn ordered_diagrams(n: usize) -> Result<Vec<ChordDiagram>> {
    let mut ds: Vec<(usize, ChordDiagram)> = enumerate_diagrams(n)?
        .into_iter()
        .map(|d| (d.crossings(), d))
        .collect();
    ds.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    Ok(ds.into_iter().map(|(_, d)| d).collect())
}

/// One four-term combination: the moving end of chord `b` is placed just
/// after and just before each endpoint of chord `a`, with coefficients
/// `+1, −1` at each endpoint. Returned as `(word, coefficient)` pairs on
/// unnormalized words.
pub fn four_term_instance(word: &[u8], a: u8, b: u8, moving: usize) -> Vec<(Vec<u8>, i64)> {
    let ends: Vec<usize> = (0..word.len()).filter(|&i| word[i] == b).collect();
    let mut rest = word.to_vec();
    rest.remove(ends[moving]);
    let mut out = Vec::with_capacity(4);
    for e in (0..rest.len()).filter(|&i| rest[i] == a) {
        for (pos, sign) in [(e + 1, 1), (e, -1)] {
            let mut w = rest.clone();
            w.insert(pos, b);
            out.push((w, sign));
        }
    }
    out
}

/// Integer rows of the four-term relations among diagrams with `n` chords:
/// one row per diagram, ordered pair of distinct chords and moving endpoint,
/// on the columns of [`ordered_diagrams`]. Zero and repeated rows are
/// dropped and each row is scaled to a positive leading entry.
pub fn four_term_rows(n: usize) -> Result<(Vec<ChordDiagram>, Vec<Vec<(usize, i64)>>)> {
    let cols = ordered_diagrams(n)?;
    let index: HashMap<&[u8], usize> = cols
        .iter()
        .enumerate()
        .map(|(i, d)| (d.word(), i))
        .collect();
    let per_diagram: Vec<Vec<Vec<(usize, i64)>>> = cols
        .par_iter()
        .map(|d| {
            let w = d.word();
            let mut out = Vec::new();
            for a in 0..n as u8 {
                for b in (0..n as u8).filter(|&b| b != a) {
                    for moving in 0..2 {
                        let mut row: Vec<(usize, i64)> = four_term_instance(w, a, b, moving)
                            .into_iter()
                            .map(|(w, c)| (index[canonical_of(&w).word()], c))
                            .collect();
                        row.sort();
                        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(4);
                        for (c, v) in row {
                            match merged.last_mut() {
                                Some((lc, lv)) if *lc == c => *lv += v,
                                _ => merged.push((c, v)),
                            }
                        }
                        merged.retain(|e| e.1 != 0);
                        if merged.first().is_some_and(|e| e.1 < 0) {
                            merged.iter_mut().for_each(|e| e.1 = -e.1);
                        }
                        if !merged.is_empty() {
                            out.push(merged);
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut seen = HashSet::new();
    let rows = per_diagram
        .into_iter()
        .flatten()
        .filter(|r| seen.insert(r.clone()))
        .collect();
    Ok((cols, rows))
}

/// [`four_term_rows`] as a matrix over `S`.
pub fn four_term_relations<S: Scalar>(n: usize) -> Result<(Vec<ChordDiagram>, SparseMatrix<S>)> {
    let (cols, rows) = four_term_rows(n)?;
    let mut m = SparseMatrix::new(cols.len());
    for r in rows {
        m.push_entries(r.into_iter().map(|(c, v)| (c, S::int(v))));
    }
    Ok((cols, m))
}
