use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORDS: usize = 4;

/// Largest vertex count any [`crate::Graph`] may have.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex ids packed into a fixed-width bitset.
///
/// Iteration is always in ascending id order, which is what makes every
/// search in this crate deterministic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let mut s = Self::new();
        for (i, word) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn min(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Removes and returns the smallest element.
    pub fn pop_min(&mut self) -> Option<usize> {
        let v = self.min()?;
        self.remove(v);
        Some(v)
    }

    pub fn iter(&self) -> Iter {
        Iter { words: self.words, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted element lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let b = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

macro_rules! set_op {
    ($tr:ident, $m:ident, $tra:ident, $ma:ident, $op:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $m(mut self, rhs: VertexSet) -> VertexSet {
                for i in 0..WORDS {
                    self.words[i] = $op(self.words[i], rhs.words[i]);
                }
                self
            }
        }
        impl $tra for VertexSet {
            #[inline]
            fn $ma(&mut self, rhs: VertexSet) {
                for i in 0..WORDS {
                    self.words[i] = $op(self.words[i], rhs.words[i]);
                }
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |a: u64, b: u64| a | b);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, |a: u64, b: u64| a & b);
set_op!(Sub, sub, SubAssign, sub_assign, |a: u64, b: u64| a & !b);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex id {bad} out of range")));
        }
        Ok(ids.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: VertexSet = [1, 5, 64, 200].into_iter().collect();
        let b: VertexSet = [5, 6, 200].into_iter().collect();
        assert_eq!((a & b).to_vec(), vec![5, 200]);
        assert_eq!((a | b).len(), 5);
        assert_eq!((a - b).to_vec(), vec![1, 64]);
        assert_eq!(a.min(), Some(1));
        assert_eq!(a.max(), Some(200));
        assert!(VertexSet::singleton(5).is_subset(&a));
        assert_eq!(VertexSet::full(70).len(), 70);
        assert_eq!(VertexSet::full(0), VertexSet::new());
    }

    #[test]
    fn lex_order_is_on_sorted_lists() {
        let s = |v: &[usize]| v.iter().collect::<VertexSet>();
        assert!(s(&[]).lex_cmp(&s(&[0])).is_lt());
        assert!(s(&[0, 1, 2]).lex_cmp(&s(&[0, 2])).is_lt());
        assert!(s(&[0, 2]).lex_cmp(&s(&[1])).is_lt());
    }
}
