use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest chord count handled by [`enumerate_diagrams`].
pub const MAX_ENUM_CHORDS: usize = 8;

/// A chord diagram as a double-occurrence word over `0..n`.
///
/// Labels are kept normalized by order of first occurrence, so two words
/// that differ only by renaming chords compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    word: Vec<u8>,
}

fn normalize(word: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    word.iter()
        .map(|&l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

impl ChordDiagram {
    /// Builds a diagram from a word in which every label occurs exactly twice.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        if word.len() % 2 != 0 {
            return Err(Error::MalformedDiagram(format!(
                "word of odd length {}",
                word.len()
            )));
        }
        if word.len() > 2 * 127 {
            return Err(Error::MalformedDiagram("too many chords".into()));
        }
        let mut counts = std::collections::HashMap::new();
        for &l in word {
            *counts.entry(l).or_insert(0usize) += 1;
        }
        if let Some((l, c)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::MalformedDiagram(format!(
                "label {l} occurs {c} times"
            )));
        }
        let mut ids = std::collections::HashMap::new();
        let raw: Vec<u8> = word
            .iter()
            .map(|l| {
                let n = ids.len() as u8;
                *ids.entry(*l).or_insert(n)
            })
            .collect();
        Ok(ChordDiagram {
            word: normalize(&raw),
        })
    }

    /// Builds a diagram from 1-based endpoint pairs covering `1..=2n`.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let len = 2 * pairs.len();
        let mut word = vec![usize::MAX; len];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            for e in [a, b] {
                if e == 0 || e > len {
                    return Err(Error::MalformedDiagram(format!(
                        "endpoint {e} out of range 1..={len}"
                    )));
                }
                if word[e - 1] != usize::MAX {
                    return Err(Error::MalformedDiagram(format!("endpoint {e} reused")));
                }
                word[e - 1] = k;
            }
        }
        Self::from_word(&word)
    }

    pub(crate) fn from_raw_word(word: &[u8]) -> Self {
        ChordDiagram {
            word: normalize(word),
        }
    }

    pub fn empty() -> Self {
        ChordDiagram { word: Vec::new() }
    }

    pub fn chord_count(&self) -> usize {
        self.word.len() / 2
    }

    /// Normalized 0-based word.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// 0-based endpoint positions of each chord, indexed by label.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        let mut ends = vec![(usize::MAX, usize::MAX); self.chord_count()];
        for (pos, &l) in self.word.iter().enumerate() {
            let e = &mut ends[l as usize];
            if e.0 == usize::MAX {
                e.0 = pos;
            } else {
                e.1 = pos;
            }
        }
        ends
    }

    /// The fixed-point-free involution exchanging the two ends of every chord.
    pub fn to_permutation(&self) -> Permutation {
        let mut images = vec![0u8; self.word.len()];
        for (a, b) in self.chords() {
            images[a] = b as u8;
            images[b] = a as u8;
        }
        Permutation::from_raw(images)
    }

    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        if !p.is_fixed_point_free_involution() {
            return Err(Error::MalformedDiagram(
                "permutation is not a fixed-point-free involution".into(),
            ));
        }
        let s = p.as_slice();
        let mut word = vec![0u8; s.len()];
        let mut next = 0u8;
        for i in 0..s.len() {
            let j = s[i] as usize;
            if i < j {
                word[i] = next;
                word[j] = next;
                next += 1;
            }
        }
        Ok(ChordDiagram::from_raw_word(&word))
    }

    /// Diagram whose endpoint sequence starts at position `k` of this one.
    pub fn rotate(&self, k: usize) -> Self {
        let n = self.word.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut w = Vec::with_capacity(n);
        w.extend_from_slice(&self.word[k..]);
        w.extend_from_slice(&self.word[..k]);
        ChordDiagram::from_raw_word(&w)
    }

    /// Representative minimizing the normalized word over all rotations.
    pub fn canonical(&self) -> Self {
        canonical_of(&self.word)
    }

    pub fn canonical_code(&self) -> String {
        self.canonical().to_string()
    }

    pub fn concat(&self, other: &ChordDiagram) -> Self {
        let off = self.chord_count() as u8;
        let mut w = self.word.clone();
        w.extend(other.word.iter().map(|&l| l + off));
        ChordDiagram::from_raw_word(&w)
    }

    /// Number of crossing chord pairs.
    pub fn crossings(&self) -> usize {
        let ch = self.chords();
        let mut count = 0;
        for i in 0..ch.len() {
            for j in i + 1..ch.len() {
                let (a, b) = ch[i];
                let (c, d) = ch[j];
                if (a < c && c < b) != (a < d && d < b) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Rotation-minimal normalized word of an arbitrary (unnormalized) word.
pub(crate) fn canonical_of(word: &[u8]) -> ChordDiagram {
    let n = word.len();
    let mut best: Option<Vec<u8>> = None;
    let mut buf = Vec::with_capacity(n);
    for k in 0..n.max(1) {
        buf.clear();
        buf.extend_from_slice(&word[k.min(n)..]);
        buf.extend_from_slice(&word[..k.min(n)]);
        let w = normalize(&buf);
        if best.as_ref().map_or(true, |b| w < *b) {
            best = Some(w);
        }
    }
    ChordDiagram {
        word: best.unwrap_or_default(),
    }
}

/// All chord diagrams with `n` chords up to rotation, in lexicographic order
/// of their canonical words.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<ChordDiagram>> {
    if n > MAX_ENUM_CHORDS {
        return Err(Error::OutOfRange(format!("chord count {n}")));
    }
    let mut out = BTreeSet::new();
    let mut word = vec![u8::MAX; 2 * n];
    fill_pairings(&mut word, 0, &mut |w| {
        out.insert(canonical_of(w));
    });
    Ok(out.into_iter().collect())
}

/// Calls `f` on every perfect matching of the positions, as a word with
/// labels in first-occurrence order.
pub(crate) fn fill_pairings(word: &mut [u8], next: u8, f: &mut dyn FnMut(&[u8])) {
    let Some(first) = word.iter().position(|&l| l == u8::MAX) else {
        f(word);
        return;
    };
    word[first] = next;
    for j in first + 1..word.len() {
        if word[j] == u8::MAX {
            word[j] = next;
            fill_pairings(word, next + 1, f);
            word[j] = u8::MAX;
        }
    }
    word[first] = u8::MAX;
}

impl FromStr for ChordDiagram {
    type Err = Error;

    /// Accepts a double-occurrence word (`1 2 1 2`) or a pair list (`(1,3)(2,4)`).
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('(') {
            let mut pairs = Vec::new();
            for chunk in t.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let inner = chunk.strip_prefix('(').ok_or_else(|| {
                    Error::MalformedDiagram(format!("bad pair `{chunk}`"))
                })?;
                let nums: Vec<&str> = inner.split(',').map(str::trim).collect();
                if nums.len() != 2 {
                    return Err(Error::MalformedDiagram(format!("bad pair `({inner})`")));
                }
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| Error::MalformedDiagram(format!("bad token `{s}`")))
                };
                pairs.push((parse(nums[0])?, parse(nums[1])?));
            }
            ChordDiagram::from_pairs(&pairs)
        } else {
            let mut word = Vec::new();
            for tok in t.split_whitespace() {
                word.push(
                    tok.parse::<usize>()
                        .map_err(|_| Error::MalformedDiagram(format!("bad token `{tok}`")))?,
                );
            }
            ChordDiagram::from_word(&word)
        }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *l as usize + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn partner_maps() {
        assert_eq!(d("1 1").to_permutation().to_one_based(), vec![2, 1]);
        assert_eq!(d("1 2 1 2").to_permutation().to_one_based(), vec![3, 4, 1, 2]);
        let p42 = d("(1,4)(2,7)(3,6)(5,8)");
        assert_eq!(
            p42.to_permutation().to_one_based(),
            vec![4, 7, 6, 1, 8, 3, 2, 5]
        );
        assert_eq!(ChordDiagram::from_permutation(&p42.to_permutation()).unwrap(), p42);
    }

    #[test]
    fn canonical_codes() {
        assert_eq!(d("2 2 1 1").canonical_code(), "1 1 2 2");
        assert_eq!(d("1 2 1 2").rotate(1).canonical_code(), "1 2 1 2");
        let linear = ["1 1 2 2", "1 2 2 1", "1 2 1 2"];
        let codes: BTreeSet<String> = linear.iter().map(|w| d(w).canonical_code()).collect();
        assert_eq!(codes.len(), 2);
        let c = d("1 2 3 1 3 2");
        assert_eq!(c.canonical().canonical(), c.canonical());
    }

    #[test]
    fn rejects_bad_words() {
        assert!("1 2 1".parse::<ChordDiagram>().is_err());
        assert!("1 1 1 2".parse::<ChordDiagram>().is_err());
        assert!("(1,2)(2,3)".parse::<ChordDiagram>().is_err());
        assert!("(1,5)(2,3)".parse::<ChordDiagram>().is_err());
    }

    #[test]
    fn enumeration_sizes() {
        let sizes: Vec<usize> = (1..=5)
            .map(|n| enumerate_diagrams(n).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![1, 2, 5, 18, 105]);
        assert_eq!(enumerate_diagrams(1).unwrap()[0].to_string(), "1 1");
    }

    #[test]
    fn crossing_counts() {
        assert_eq!(d("1 2 1 2").crossings(), 1);
        assert_eq!(d("1 1 2 2").crossings(), 0);
        assert_eq!(d("1 2 3 1 2 3").crossings(), 3);
    }
}
