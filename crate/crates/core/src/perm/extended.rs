use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Head,
    Tail,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: Permutation,
    /// `+1` or `-1`.
    pub sign: i8,
}

/// A permutation-like graph whose edges may join two heads or two tails.
///
/// Half-edge `2v` is the one that starts as the head at vertex `v` and
/// `2v + 1` the tail; [`ExtendedGraph::flip`] exchanges these roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedGraph {
    mate: Vec<usize>,
    swapped: Vec<bool>,
}

impl ExtendedGraph {
    /// Builds a graph on vertices `1..=m` from edges given as pairs of
    /// `(vertex, role)` endpoints. Every vertex must carry exactly one head
    /// and one tail.
    pub fn new(m: usize, edges: &[((usize, Role), (usize, Role))]) -> Result<Self> {
        if edges.len() != m {
            return Err(Error::MalformedPermutation(format!(
                "{} edges for {m} vertices",
                edges.len()
            )));
        }
        let slot = |(v, r): (usize, Role)| -> Result<usize> {
            if v == 0 || v > m {
                return Err(Error::MalformedPermutation(format!("vertex {v} out of range")));
            }
            Ok(2 * (v - 1) + usize::from(r == Role::Tail))
        };
        let mut mate = vec![usize::MAX; 2 * m];
        for &(a, b) in edges {
            let (x, y) = (slot(a)?, slot(b)?);
            if x == y || mate[x] != usize::MAX || mate[y] != usize::MAX {
                return Err(Error::MalformedPermutation(
                    "a vertex needs exactly one head and one tail".into(),
                ));
            }
            mate[x] = y;
            mate[y] = x;
        }
        Ok(ExtendedGraph {
            mate,
            swapped: vec![false; m],
        })
    }

    /// Graph given directly by the half-edge matching (0-based slots).
    pub(crate) fn from_mates(mate: Vec<usize>) -> Self {
        let m = mate.len() / 2;
        ExtendedGraph {
            mate,
            swapped: vec![false; m],
        }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        let s = p.as_slice();
        let mut mate = vec![0; 2 * s.len()];
        for (i, &t) in s.iter().enumerate() {
            mate[2 * i + 1] = 2 * t as usize;
            mate[2 * t as usize] = 2 * i + 1;
        }
        Self::from_mates(mate)
    }

    pub fn vertex_count(&self) -> usize {
        self.swapped.len()
    }

    /// Exchanges head and tail at the 1-based vertex `v`.
    pub fn flip(&mut self, v: usize) {
        self.swapped[v - 1] ^= true;
    }

    fn is_head(&self, slot: usize) -> bool {
        (slot % 2 == 0) != self.swapped[slot / 2]
    }

    fn tail_of(&self, v: usize, extra: bool) -> usize {
        2 * v + usize::from(!(self.swapped[v] ^ extra))
    }

    /// Reduces to an ordinary permutation graph by vertex flips.
    ///
    /// Each cycle keeps the orientation of its minimal vertex; the other
    /// vertices are flipped as forced. Returns the permutation (tail vertex
    /// to head vertex) together with `(-1)^flips`.
    pub fn normalize(&self) -> SignedPermutation {
        let m = self.vertex_count();
        let mut visited = vec![false; m];
        let mut extra = vec![false; m];
        let mut images = vec![0u8; m];
        let mut flips = 0usize;
        for start in 0..m {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut cur = start;
            loop {
                let h = self.mate[self.tail_of(cur, extra[cur])];
                let next = h / 2;
                images[cur] = next as u8;
                if visited[next] {
                    assert_eq!(next, start, "extended graph is not a union of cycles");
                    assert!(self.is_head(h) != extra[next], "cycle cannot be oriented");
                    break;
                }
                visited[next] = true;
                if !self.is_head(h) {
                    extra[next] = true;
                    flips += 1;
                }
                cur = next;
            }
        }
        SignedPermutation {
            perm: Permutation::from_raw(images),
            sign: if flips % 2 == 0 { 1 } else { -1 },
        }
    }
}

/// Shorthand for [`ExtendedGraph::normalize`].
pub fn normalize_extended(g: &ExtendedGraph) -> SignedPermutation {
    g.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Role::*;

    #[test]
    fn ordinary_graph_is_fixed() {
        let p: Permutation = "3 5 2 1 4".parse().unwrap();
        let sp = ExtendedGraph::from_permutation(&p).normalize();
        assert_eq!(sp.perm, p);
        assert_eq!(sp.sign, 1);
    }

    #[test]
    fn two_tails_two_heads() {
        let g = ExtendedGraph::new(2, &[((1, Tail), (2, Tail)), ((1, Head), (2, Head))]).unwrap();
        let sp = g.normalize();
        assert_eq!(sp.perm.to_one_based(), vec![2, 1]);
        assert_eq!(sp.sign, -1);
    }

    #[test]
    fn flipped_vertices_are_flipped_back() {
        for r in 1..7usize {
            let p = Permutation::standard_cycle(r);
            // every vertex flipped: the graph of the reversed cycle, no sign
            let mut all = ExtendedGraph::from_permutation(&p);
            for v in 1..=r {
                all.flip(v);
            }
            let sp = all.normalize();
            assert_eq!(sp.perm, p.inverse());
            assert_eq!(sp.sign, 1);
            // all but the minimal vertex flipped: back to the cycle, r - 1 flips
            let mut rest = ExtendedGraph::from_permutation(&p);
            for v in 2..=r {
                rest.flip(v);
            }
            let sp = rest.normalize();
            assert_eq!(sp.perm, p);
            assert_eq!(sp.sign as i32, if r % 2 == 1 { 1 } else { -1 });
        }
    }

    #[test]
    fn rejects_two_heads_at_a_vertex() {
        assert!(ExtendedGraph::new(1, &[((1, Head), (1, Head))]).is_err());
    }
}
