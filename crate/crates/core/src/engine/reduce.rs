use std::sync::Arc;

use crate::perm::{swap_adjacent_raw, ExtendedGraph};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Which weight system the recursion computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Gl,
    So,
}

/// Value source used by the recursion for smaller permutations and for the
/// standard cycles.
pub(crate) trait Oracle<S> {
    fn eval(&mut self, s: &[u8]) -> Arc<Poly<S>>;
    fn base(&mut self, k: usize) -> Arc<Poly<S>>;
}

fn mates(s: &[u8]) -> Vec<usize> {
    let mut mate = vec![0; 2 * s.len()];
    for (i, &t) in s.iter().enumerate() {
        mate[2 * i + 1] = 2 * t as usize;
        mate[2 * t as usize] = 2 * i + 1;
    }
    mate
}

/// Replaces the factors at `r, r+1` by a single factor whose first slot takes
/// over the connection of `first` and whose second slot that of `second`;
/// the slots `d1`, `d2` are contracted. Returns the new matching and whether
/// the contraction closed an empty loop.
fn contract(
    mate: &[usize],
    r: usize,
    first: usize,
    second: usize,
    d1: usize,
    d2: usize,
) -> (Vec<usize>, bool) {
    let map = |x: usize| -> usize {
        if x == first {
            2 * r
        } else if x == second {
            2 * r + 1
        } else if x / 2 < r {
            x
        } else {
            debug_assert!(x / 2 > r + 1);
            x - 2
        }
    };
    let looped = mate[d1] == d2;
    let mut out = vec![usize::MAX; mate.len() - 2];
    for x in 0..mate.len() {
        if x == d1 || x == d2 || (x / 2 == r || x / 2 == r + 1) && x != first && x != second {
            continue;
        }
        let y = mate[x];
        let y = if y == d1 {
            mate[d2]
        } else if y == d2 {
            mate[d1]
        } else {
            y
        };
        out[map(x)] = map(y);
    }
    (out, looped)
}

/// The commutator terms produced when the factors at 0-based positions `r`
/// and `r+1` are exchanged: `w(s) = w(s') + corrections`.
pub(crate) fn corrections<S: Scalar>(
    kind: Kind,
    s: &[u8],
    r: usize,
    oracle: &mut dyn Oracle<S>,
) -> Poly<S> {
    let mate = mates(s);
    let (a, b, c, d) = (2 * r, 2 * r + 1, 2 * r + 2, 2 * r + 3);
    let all = [
        (a, d, b, c, 1i64),
        (c, b, a, d, -1),
        (a, c, b, d, -1),
        (d, b, a, c, 1),
    ];
    let terms = match kind {
        Kind::Gl => &all[..2],
        Kind::So => &all[..],
    };
    let mut out = Poly::zero();
    for &(first, second, d1, d2, coeff) in terms {
        let (m, looped) = contract(&mate, r, first, second, d1, d2);
        let (images, sign) = match kind {
            Kind::Gl => {
                let images: Vec<u8> = (0..m.len() / 2)
                    .map(|k| {
                        debug_assert_eq!(m[2 * k + 1] % 2, 0);
                        (m[2 * k + 1] / 2) as u8
                    })
                    .collect();
                (images, 1)
            }
            Kind::So => {
                let sp = ExtendedGraph::from_mates(m).normalize();
                (sp.perm.as_slice().to_vec(), sp.sign as i64)
            }
        };
        let v = oracle.eval(&images);
        let k = S::int(coeff * sign);
        if looped {
            out.add_scaled(&(&*v * &Poly::c(0)), &k);
        } else {
            out.add_scaled(&v, &k);
        }
    }
    out
}

/// Moves the vertex at position `v` to position 0 and gathers its cycle into
/// a standard ascending cycle at the front. Returns the cycle length and the
/// accumulated correction terms; `cur` is left in the reduced form.
pub(crate) fn gather_cycle<S: Scalar>(
    kind: Kind,
    cur: &mut [u8],
    v: usize,
    oracle: &mut dyn Oracle<S>,
) -> (usize, Poly<S>) {
    let mut acc = Poly::zero();
    for q in (1..=v).rev() {
        acc = &acc + &corrections(kind, cur, q - 1, oracle);
        swap_adjacent_raw(cur, q - 1);
    }
    let mut j = 1;
    loop {
        let mut p = cur[j - 1] as usize;
        if p == 0 {
            break;
        }
        while p > j {
            acc = &acc + &corrections(kind, cur, p - 1, oracle);
            swap_adjacent_raw(cur, p - 1);
            p -= 1;
        }
        j += 1;
    }
    (j, acc)
}

/// Evaluates `s` by reducing the cycle through position `v`.
pub(crate) fn reduce<S: Scalar>(
    kind: Kind,
    s: &[u8],
    v: usize,
    oracle: &mut dyn Oracle<S>,
) -> Poly<S> {
    let mut cur = s.to_vec();
    let (k, acc) = gather_cycle(kind, &mut cur, v, oracle);
    let rest: Vec<u8> = cur[k..].iter().map(|&x| x - k as u8).collect();
    let base = oracle.base(k);
    let tail = oracle.eval(&rest);
    &(&*base * &*tail) + &acc
}

/// Value of the standard odd `k`-cycle under the so recursion: the reversed
/// cycle is gathered into the standard one, `w(rev) = w(std) + T` and
/// `w(rev) = -w(std)`, so `w(std) = -T/2`.
pub(crate) fn odd_cycle<S: Scalar>(k: usize, oracle: &mut dyn Oracle<S>) -> Poly<S> {
    debug_assert!(k % 2 == 1);
    let mut cur: Vec<u8> = (0..k).map(|i| ((i + k - 1) % k) as u8).collect();
    let (len, acc) = gather_cycle(Kind::So, &mut cur, 0, oracle);
    debug_assert_eq!(len, k);
    acc.scale(&S::from_frac(-1, 2))
}

/// Length of the shortest nonempty prefix mapped to itself.
pub(crate) fn first_block(s: &[u8]) -> usize {
    let mut hi = 0;
    for (i, &t) in s.iter().enumerate() {
        hi = hi.max(t as usize);
        if hi == i {
            return i + 1;
        }
    }
    s.len()
}

/// Lexicographically least image list among all cyclic conjugates.
pub(crate) fn rotation_key(s: &[u8]) -> Vec<u8> {
    let m = s.len();
    let mut best = s.to_vec();
    let mut cur = s.to_vec();
    for _ in 1..m {
        cur = (0..m)
            .map(|j| ((cur[(j + m - 1) % m] as usize + 1) % m) as u8)
            .collect();
        if cur < best {
            best.clone_from(&cur);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks() {
        assert_eq!(first_block(&[1, 0, 2]), 2);
        assert_eq!(first_block(&[0, 1]), 1);
        assert_eq!(first_block(&[2, 0, 1]), 3);
        assert_eq!(first_block(&[]), 0);
    }

    #[test]
    fn contraction_keeps_order() {
        // standard 3-cycle, swap at r = 0; first term joins slots 1 and 2
        let m = mates(&[1, 2, 0]);
        let (out, looped) = contract(&m, 0, 0, 3, 1, 2);
        assert!(looped);
        assert_eq!(out, vec![3, 2, 1, 0]);
    }

    #[test]
    fn rotation_key_is_class_minimum() {
        assert_eq!(rotation_key(&[0, 2, 1]), vec![0, 2, 1]);
        assert_eq!(rotation_key(&[2, 1, 0]), vec![0, 2, 1]);
    }
}
