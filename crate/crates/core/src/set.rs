//! Bit-packed vertex sets.
//!
//! A [`VertexSet`] is a fixed-universe subset of `{0, .., len-1}` stored as
//! 64-bit words. The same representation doubles as a GF(2) row vector, so
//! the odd-domination solver XORs these directly during elimination.

use std::fmt;

const WORD_BITS: usize = 64;

/// Subset of a fixed vertex universe `{0, .., len()-1}`, bit-packed.
///
/// Unused high bits of the last word are always zero, so equality, hashing
/// and popcounts operate word-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty subset of a universe with `nbits` elements.
    pub fn new(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; nbits.div_ceil(WORD_BITS)],
        }
    }

    /// Full subset: all of `{0, .., nbits-1}`.
    pub fn full(nbits: usize) -> Self {
        let mut s = VertexSet {
            nbits,
            words: vec![!0u64; nbits.div_ceil(WORD_BITS)],
        };
        s.mask_tail();
        s
    }

    /// Build from an iterator of member indices.
    ///
    /// # Panics
    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, indices: I) -> Self {
        let mut s = VertexSet::new(nbits);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Universe size (not the number of members; see [`VertexSet::count`]).
    pub fn len(&self) -> usize {
        self.nbits
    }

    /// True when the subset has no members.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nbits, "index {i} out of universe 0..{}", self.nbits);
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.nbits, "index {i} out of universe 0..{}", self.nbits);
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    pub fn set(&mut self, i: usize, member: bool) {
        if member {
            self.insert(i);
        } else {
            self.remove(i);
        }
    }

    /// In-place symmetric difference (GF(2) row addition).
    ///
    /// # Panics
    /// Panics if the universes differ.
    pub fn xor_with(&mut self, other: &VertexSet) {
        assert_eq!(self.nbits, other.nbits, "universe mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// In-place union.
    pub fn or_with(&mut self, other: &VertexSet) {
        assert_eq!(self.nbits, other.nbits, "universe mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// In-place intersection.
    pub fn and_with(&mut self, other: &VertexSet) {
        assert_eq!(self.nbits, other.nbits, "universe mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        assert_eq!(self.nbits, other.nbits, "universe mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Parity of `|self ∩ other|`; the core primitive of odd-domination checks.
    pub fn odd_intersection(&self, other: &VertexSet) -> bool {
        self.intersection_count(other) % 2 == 1
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.mask_tail();
        out
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.nbits, other.nbits, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        assert_eq!(self.nbits, other.nbits, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Smallest member that is `>= from`, if any.
    pub fn next_at_or_after(&self, from: usize) -> Option<usize> {
        if from >= self.nbits {
            return None;
        }
        let mut wi = from / WORD_BITS;
        let mut w = self.words[wi] & (!0u64 << (from % WORD_BITS));
        loop {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, next: 0 }
    }

    /// Members collected in ascending order.
    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn mask_tail(&mut self) {
        let tail = self.nbits % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.nbits == 0 {
            self.words.clear();
        }
    }
}

/// Ascending iterator over members.
pub struct Iter<'a> {
    set: &'a VertexSet,
    next: usize,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let found = self.set.next_at_or_after(self.next)?;
        self.next = found + 1;
        Some(found)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Display for VertexSet {
    /// Text form `{0,2,5}` with members ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({}/{})", self, self.nbits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(0) && s.contains(64) && s.contains(129));
        assert!(!s.contains(1) && !s.contains(65));
        assert_eq!(s.count(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.count(), 2);
    }

    #[test]
    fn complement_respects_universe() {
        let s = VertexSet::from_indices(67, [0, 2, 66]);
        let c = s.complement();
        assert_eq!(c.count(), 64);
        assert!(!c.contains(0) && c.contains(1) && !c.contains(66));
        let mut both = s.clone();
        both.or_with(&c);
        assert_eq!(both, VertexSet::full(67));
    }

    #[test]
    fn xor_is_symmetric_difference() {
        let mut a = VertexSet::from_indices(10, [1, 2, 3]);
        let b = VertexSet::from_indices(10, [3, 4]);
        a.xor_with(&b);
        assert_eq!(a.to_indices(), vec![1, 2, 4]);
    }

    #[test]
    fn iteration_ascends_across_words() {
        let s = VertexSet::from_indices(200, [199, 5, 63, 64, 128]);
        assert_eq!(s.to_indices(), vec![5, 63, 64, 128, 199]);
        assert_eq!(s.first(), Some(5));
        assert_eq!(s.next_at_or_after(65), Some(128));
        assert_eq!(s.next_at_or_after(200), None);
    }

    #[test]
    fn display_is_sorted_brace_list() {
        let s = VertexSet::from_indices(8, [5, 0, 2]);
        assert_eq!(s.to_string(), "{0,2,5}");
        assert_eq!(VertexSet::new(4).to_string(), "{}");
    }

    #[test]
    fn intersection_parity() {
        let a = VertexSet::from_indices(70, [0, 1, 2, 69]);
        let b = VertexSet::from_indices(70, [1, 2, 69]);
        assert_eq!(a.intersection_count(&b), 3);
        assert!(a.odd_intersection(&b));
    }

    #[test]
    fn empty_universe() {
        let s = VertexSet::new(0);
        assert!(s.is_empty());
        assert_eq!(s.count(), 0);
        assert_eq!(s.complement(), s);
        assert_eq!(s.first(), None);
    }
}
