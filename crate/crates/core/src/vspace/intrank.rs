use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// Integer type usable for fraction-free elimination. Operations return
/// `None` on overflow.
pub trait ExactInt: Clone + Integer + Signed + std::fmt::Debug {
    /// `a·b − c·d`.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
}

impl ExactInt for i64 {
    fn mul_sub(a: &i64, b: &i64, c: &i64, d: &i64) -> Option<i64> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }

    fn from_i64(v: i64) -> i64 {
        v
    }
}

impl ExactInt for BigInt {
    fn mul_sub(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Option<BigInt> {
        Some(a * b - c * d)
    }

    fn from_i64(v: i64) -> BigInt {
        BigInt::from(v)
    }
}

type IntRow<T> = Vec<(usize, T)>;

/// Fraction-free row echelon form over the integers with the pivot of each
/// row at its first nonzero column. Rows are kept primitive (content 1,
/// positive leading entry).
#[derive(Debug, Clone)]
pub struct IntEchelon<T> {
    ncols: usize,
    pivots: HashMap<usize, IntRow<T>>,
}

fn make_primitive<T: ExactInt>(row: &mut IntRow<T>) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|e| e.1.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for e in row.iter_mut() {
            e.1 = e.1.clone() / g.clone();
        }
    }
}

/// `y·r − x·p` without the common leading column.
fn eliminate<T: ExactInt>(r: &[(usize, T)], y: &T, x: &T, p: &[(usize, T)]) -> Option<IntRow<T>> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    let zero = T::zero();
    while i < r.len() || j < p.len() {
        let ca = r.get(i).map_or(usize::MAX, |e| e.0);
        let cb = p.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ca < cb {
            i += 1;
            (ca, T::mul_sub(y, &r[i - 1].1, x, &zero)?)
        } else if cb < ca {
            j += 1;
            (cb, T::mul_sub(&zero, &zero, x, &p[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ca, T::mul_sub(y, &r[i - 1].1, x, &p[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

impl<T: ExactInt> IntEchelon<T> {
    pub fn new(ncols: usize) -> Self {
        IntEchelon {
            ncols,
            pivots: HashMap::new(),
        }
    }

    /// Inserts a sorted row without zeros. Returns `None` on overflow, in
    /// which case the echelon form is left unchanged.
    pub fn insert(&mut self, row: &[(usize, T)]) -> Option<bool> {
        let mut row = row.to_vec();
        make_primitive(&mut row);
        while let Some((c, x)) = row.first().cloned() {
            match self.pivots.get(&c) {
                Some(p) => {
                    let y = p[0].1.clone();
                    let g = x.gcd(&y);
                    row = eliminate(&row, &(y / g.clone()), &(x / g), p)?;
                    make_primitive(&mut row);
                }
                None => {
                    self.pivots.insert(c, row);
                    return Some(true);
                }
            }
        }
        Some(false)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }
}

/// Rank profile `(rank, free columns)` of an integer matrix, computed in
/// `i64` with a restart in `BigInt` on overflow.
pub fn integer_rank_profile(ncols: usize, rows: &[Vec<(usize, i64)>]) -> (usize, Vec<usize>) {
    let mut small = IntEchelon::<i64>::new(ncols);
    if rows.iter().all(|r| small.insert(r).is_some()) {
        return (small.rank(), small.free_columns());
    }
    let mut big = IntEchelon::<BigInt>::new(ncols);
    for r in rows {
        let r: Vec<(usize, BigInt)> = r.iter().map(|(c, v)| (*c, BigInt::from(*v))).collect();
        big.insert(&r).expect("BigInt arithmetic does not overflow");
    }
    (big.rank(), big.free_columns())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank() {
        let rows = vec![
            vec![(0, 2), (1, 4)],
            vec![(0, 3), (1, 6)],
            vec![(1, 5), (2, -5)],
        ];
        assert_eq!(integer_rank_profile(3, &rows), (2, vec![2]));
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 2;
        let rows = vec![
            vec![(0, big), (1, 3)],
            vec![(0, big - 1), (1, 7)],
            vec![(0, 1), (1, 1), (2, 1)],
        ];
        let mut e = IntEchelon::<i64>::new(3);
        assert!(e.insert(&rows[0]).is_some());
        assert!(e.insert(&rows[1]).is_none());
        assert_eq!(integer_rank_profile(3, &rows), (3, vec![]));
    }
}
