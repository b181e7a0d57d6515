//! Fixed-width bitsets used for adjacency rows and vertex sets.
//!
//! Neighbourhood intersections dominate the inner loops of the matching and
//! stitching stages, so adjacency is stored one machine word per 64
//! vertices rather than as hash sets.

use alloc::vec;
use alloc::vec::Vec;

const WORD_BITS: usize = 64;

/// A set of indices drawn from a fixed universe `0..len`.
#[derive(Clone, PartialEq, Eq)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    /// Empty set over the universe `0..len`.
    pub fn new(len: usize) -> Self {
        Bitset {
            len,
            words: vec![0; (len + WORD_BITS - 1) / WORD_BITS],
        }
    }

    /// Set containing the whole universe `0..len`.
    pub fn full(len: usize) -> Self {
        let mut set = Bitset::new(len);
        for (i, word) in set.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            let hi = (lo + WORD_BITS).min(len);
            if hi > lo {
                *word = if hi - lo == WORD_BITS {
                    u64::MAX
                } else {
                    (1u64 << (hi - lo)) - 1
                };
            }
        }
        set
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Bitset::new(len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Size of the universe, not of the set.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        had
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] & (1 << (i % WORD_BITS)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `|self ∩ other|` without materialising the intersection.
    pub fn intersection_count(&self, other: &Bitset) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Iterate set indices in increasing order.
    pub fn iter(&self) -> BitsetIter<'_> {
        BitsetIter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Smallest set index, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// The `k`-th smallest set index (0-based). Used for seeded uniform
    /// picks out of a set.
    pub fn nth(&self, mut k: usize) -> Option<usize> {
        for (i, &word) in self.words.iter().enumerate() {
            let ones = word.count_ones() as usize;
            if k < ones {
                let mut w = word;
                for _ in 0..k {
                    w &= w - 1; // clear lowest set bit
                }
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
            k -= ones;
        }
        None
    }
}

impl core::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitsetIter<'a> {
    set: &'a Bitset,
    word_idx: usize,
    current: u64,
}

impl<'a> Iterator for BitsetIter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = Bitset::new(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert!(s.contains(0));
        assert!(s.contains(129));
        assert!(!s.contains(64));
        assert_eq!(s.count(), 2);
        assert!(s.remove(0));
        assert!(!s.remove(0));
        assert_eq!(s.count(), 1);
    }

    #[test]
    fn full_and_iter() {
        let s = Bitset::full(67);
        assert_eq!(s.count(), 67);
        let collected: Vec<usize> = s.iter().collect();
        assert_eq!(collected, (0..67).collect::<Vec<_>>());
    }

    #[test]
    fn nth_matches_iter() {
        let s = Bitset::from_indices(200, [3, 64, 65, 130, 199]);
        for (k, idx) in s.iter().enumerate() {
            assert_eq!(s.nth(k), Some(idx));
        }
        assert_eq!(s.nth(5), None);
    }

    #[test]
    fn set_algebra() {
        let a = Bitset::from_indices(100, [1, 2, 3, 70]);
        let b = Bitset::from_indices(100, [2, 3, 4, 71]);
        assert_eq!(a.intersection_count(&b), 2);
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u.count(), 6);
        let mut d = a.clone();
        d.difference_with(&b);
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![1, 70]);
        assert!(d.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
    }
}
