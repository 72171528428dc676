use std::collections::HashMap;

use crate::scalar::Scalar;

/// Sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow<S> = Vec<(usize, S)>;

/// Row-list sparse matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<S> {
    ncols: usize,
    rows: Vec<SparseRow<S>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Adds a row given as unsorted entries; repeated columns are summed and
    /// zeros dropped. Empty rows are kept.
    pub fn push_entries(&mut self, entries: impl IntoIterator<Item = (usize, S)>) {
        let row = normalize_row(entries);
        if let Some(&(c, _)) = row.last() {
            assert!(c < self.ncols, "column {c} out of range");
        }
        self.rows.push(row);
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow<S>] {
        &self.rows
    }

    /// Removes empty and duplicate rows.
    pub fn dedup_rows(&mut self) {
        let mut seen = std::collections::HashSet::new();
        self.rows.retain(|r| !r.is_empty() && seen.insert(r.clone()));
    }

    pub fn shuffle_rows(&mut self, rng: &mut impl rand::Rng) {
        use rand::seq::SliceRandom;
        self.rows.shuffle(rng);
    }

    pub fn echelon(&self) -> Echelon<S> {
        let mut e = Echelon::new(self.ncols);
        for r in &self.rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }
}

fn normalize_row<S: Scalar>(entries: impl IntoIterator<Item = (usize, S)>) -> SparseRow<S> {
    let mut row: Vec<(usize, S)> = entries.into_iter().collect();
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow<S> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a − f·b` on sorted sparse rows.
fn axpy<S: Scalar>(a: &[(usize, S)], f: &S, b: &[(usize, S)]) -> SparseRow<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(f.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - f.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon form with the pivot of each row at its first
/// nonzero column. Pivot rows are scaled to a leading 1.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    ncols: usize,
    pivots: HashMap<usize, SparseRow<S>>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: HashMap::new(),
        }
    }

    /// Reduces `row` against the current pivots and keeps the remainder as a
    /// new pivot row. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow<S>) -> bool {
        while let Some((c, v)) = row.first().cloned() {
            match self.pivots.get(&c) {
                Some(p) => row = axpy(&row, &v, p),
                None => {
                    let inv = S::one() / v;
                    for e in row.iter_mut() {
                        e.1 *= inv.clone();
                    }
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
        false
    }

    /// Reduces a row to its normal form modulo the row space.
    pub fn reduce(&self, row: &[(usize, S)]) -> SparseRow<S> {
        let mut row = row.to_vec();
        let mut done: SparseRow<S> = Vec::new();
        while !row.is_empty() {
            let (c, v) = row[0].clone();
            match self.pivots.get(&c) {
                Some(p) => row = axpy(&row, &v, p),
                None => {
                    done.push(row.remove(0));
                }
            }
        }
        done
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }
}

/// Basis of the right null space `{x : Σ_j x_j·row_i[j] = 0}` of a dense
/// matrix given by rows.
pub fn left_null_space<S: Scalar>(rows: &[Vec<S>]) -> Vec<Vec<S>> {
    // x·A = 0 with A having rows `rows`: solve A^T x = 0.
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<S>> = (0..m)
        .map(|j| (0..n).map(|i| rows[i][j].clone()).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = S::one() / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v *= inv.clone();
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pr = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pr) {
                    *x -= f.clone() * y;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vec![S::zero(); n];
        x[free] = S::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = -a[i][free].clone();
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::int(v)
    }

    #[test]
    fn rank_of_small_matrices() {
        let mut m = SparseMatrix::<Q>::new(3);
        m.push_entries([(0, q(1)), (1, q(1))]);
        m.push_entries([(1, q(1)), (2, q(1))]);
        m.push_entries([(0, q(1)), (2, q(-1))]);
        assert_eq!(m.rank(), 2);
        m.push_entries([(2, q(5))]);
        assert_eq!(m.rank(), 3);
        let e = SparseMatrix::<Q>::new(4);
        assert_eq!(e.rank(), 0);
    }

    #[test]
    fn entries_are_merged() {
        let mut m = SparseMatrix::<Q>::new(3);
        m.push_entries([(2, q(1)), (0, q(2)), (2, q(-1))]);
        assert_eq!(m.rows()[0], vec![(0, q(2))]);
    }

    #[test]
    fn reduce_and_free_columns() {
        let mut e = Echelon::<Q>::new(3);
        assert!(e.insert(vec![(0, q(2)), (2, q(2))]));
        assert!(!e.insert(vec![(0, q(1)), (2, q(1))]));
        assert_eq!(e.free_columns(), vec![1, 2]);
        assert_eq!(e.reduce(&[(0, q(1))]), vec![(2, q(-1))]);
    }

    #[test]
    fn null_space() {
        let rows = vec![vec![q(1), q(0)], vec![q(2), q(0)], vec![q(0), q(1)]];
        let ns = left_null_space(&rows);
        assert_eq!(ns, vec![vec![q(-2), q(1), q(0)]]);
    }
}
