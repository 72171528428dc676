use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::matrix::{left_null_space, SparseMatrix};
use super::intrank::integer_rank_profile;
use super::relations::{four_term_relations, four_term_rows};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::perm::ChordDiagram;
use crate::poly::{Monomial, Poly};
use crate::scalar::Scalar;

/// Largest chord count accepted by the dimension computations.
pub const MAX_QUOTIENT_CHORDS: usize = 7;

fn check_range(n: usize) -> Result<()> {
    if (1..=MAX_QUOTIENT_CHORDS).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "chord count {n} not in 1..={MAX_QUOTIENT_CHORDS}"
        )))
    }
}

/// Diagrams with `n` chords modulo four-term relations, with the basis given
/// by the non-pivot columns of the relation matrix.
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    pub n: usize,
    pub diagrams: Vec<ChordDiagram>,
    pub relation_rank: usize,
    /// Indices into `diagrams` of the basis diagrams.
    pub free: Vec<usize>,
}

impl QuotientBasis {
    pub fn compute(n: usize) -> Result<Self> {
        check_range(n)?;
        let (diagrams, rows) = four_term_rows(n)?;
        let (relation_rank, free) = integer_rank_profile(diagrams.len(), &rows);
        Ok(QuotientBasis {
            n,
            relation_rank,
            free,
            diagrams,
        })
    }

    /// Same basis computed by elimination over `S` instead of the integers.
    pub fn compute_over<S: Scalar>(n: usize) -> Result<Self> {
        check_range(n)?;
        let (diagrams, m) = four_term_relations::<S>(n)?;
        let e = m.echelon();
        Ok(QuotientBasis {
            n,
            relation_rank: e.rank(),
            free: e.free_columns(),
            diagrams,
        })
    }

    pub fn dim(&self) -> usize {
        self.diagrams.len() - self.relation_rank
    }

    pub fn basis(&self) -> Vec<ChordDiagram> {
        self.free.iter().map(|&i| self.diagrams[i].clone()).collect()
    }
}

/// Dimension of the quotient by four-term relations.
pub fn dim_a(n: usize) -> Result<usize> {
    Ok(QuotientBasis::compute(n)?.dim())
}

/// Rank of a family of polynomials viewed as coefficient vectors.
pub fn poly_rank<S: Scalar>(values: &[Vec<&Poly<S>>]) -> usize {
    dense_rows(values).1.rank()
}

fn dense_rows<S: Scalar>(values: &[Vec<&Poly<S>>]) -> (usize, SparseMatrix<S>) {
    let mut cols: Vec<BTreeMap<Monomial, usize>> = Vec::new();
    let mut offset = 0;
    let blocks = values.first().map_or(0, Vec::len);
    let mut offsets = Vec::new();
    for b in 0..blocks {
        let mut idx = BTreeMap::new();
        for row in values {
            for (m, _) in row[b].terms() {
                let k = idx.len();
                idx.entry(m.clone()).or_insert(k);
            }
        }
        offsets.push(offset);
        offset += idx.len();
        cols.push(idx);
    }
    let mut mat = SparseMatrix::new(offset);
    for row in values {
        mat.push_entries((0..blocks).flat_map(|b| {
            let (idx, off) = (&cols[b], offsets[b]);
            row[b]
                .terms()
                .map(move |(m, c)| (off + idx[m], c.clone()))
        }));
    }
    (offset, mat)
}

/// Basis of the combinations `Σ x_i·values[i]` that vanish, where each entry
/// is a tuple of polynomials that must all vanish.
pub fn vanishing_combinations<S: Scalar>(values: &[Vec<&Poly<S>>]) -> Vec<Vec<S>> {
    let (ncols, mat) = dense_rows(values);
    let dense: Vec<Vec<S>> = mat
        .rows()
        .iter()
        .map(|r| {
            let mut v = vec![S::zero(); ncols];
            for (c, x) in r {
                v[*c] = x.clone();
            }
            v
        })
        .collect();
    left_null_space(&dense)
}

/// Weight-system values on a quotient basis.
#[derive(Debug, Clone)]
pub struct KernelAnalysis<S> {
    pub basis: QuotientBasis,
    pub gl: Vec<Poly<S>>,
    pub so: Vec<Poly<S>>,
}

impl<S: Scalar> KernelAnalysis<S> {
    pub fn compute(n: usize, gl: &Engine<S>, so: &Engine<S>) -> Result<Self> {
        let basis = QuotientBasis::compute(n)?;
        let perms: Vec<_> = basis.basis().iter().map(|d| d.to_permutation()).collect();
        let glv = gl.eval_many(&perms);
        let sov = so.eval_many(&perms);
        Ok(KernelAnalysis {
            basis,
            gl: glv,
            so: sov,
        })
    }

    pub fn ker_gl(&self) -> usize {
        let rows: Vec<Vec<&Poly<S>>> = self.gl.iter().map(|p| vec![p]).collect();
        self.basis.dim() - poly_rank(&rows)
    }

    pub fn ker_joint(&self) -> usize {
        let rows: Vec<Vec<&Poly<S>>> = self.gl.iter().zip(&self.so).map(|(a, b)| vec![a, b]).collect();
        self.basis.dim() - poly_rank(&rows)
    }

    /// Combinations of basis diagrams annihilated by `w_gl`.
    pub fn gl_kernel(&self) -> Vec<Vec<(ChordDiagram, S)>> {
        let rows: Vec<Vec<&Poly<S>>> = self.gl.iter().map(|p| vec![p]).collect();
        let basis = self.basis.basis();
        vanishing_combinations(&rows)
            .into_iter()
            .map(|x| {
                basis
                    .iter()
                    .cloned()
                    .zip(x)
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect()
    }
}

/// `(dim ker w_gl, dim (ker w_gl ∩ ker w_so))` on the quotient.
pub fn kernel_dims(n: usize) -> Result<(usize, usize)> {
    let a = KernelAnalysis::<crate::Rational>::compute(n, &Engine::gl(), &Engine::so())?;
    Ok((a.ker_gl(), a.ker_joint()))
}

/// Per-degree record of the dimension table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimRecord {
    pub n: usize,
    pub num_diagrams: usize,
    #[serde(rename = "rank_4T")]
    pub rank_4t: usize,
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
    pub ker_gl: Option<usize>,
    pub ker_joint: Option<usize>,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

/// Dimension record for `n` chords; kernels are computed when `kernels` is set.
pub fn dim_record<S: Scalar>(
    n: usize,
    kernels: bool,
    gl: &Engine<S>,
    so: &Engine<S>,
) -> Result<DimRecord> {
    let start = Instant::now();
    let (basis, ker) = if kernels {
        let a = KernelAnalysis::compute(n, gl, so)?;
        let k = (a.ker_gl(), a.ker_joint());
        (a.basis, Some(k))
    } else {
        (QuotientBasis::compute(n)?, None)
    };
    Ok(DimRecord {
        n,
        num_diagrams: basis.diagrams.len(),
        rank_4t: basis.relation_rank,
        dim_a: basis.dim(),
        ker_gl: ker.map(|k| k.0),
        ker_joint: ker.map(|k| k.1),
        elapsed: start.elapsed().as_secs_f64(),
    })
}
