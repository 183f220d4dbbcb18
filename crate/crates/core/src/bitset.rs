//! Fixed-capacity vertex bitsets used by the distinguisher table and the search.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

/// A set of vertex identifiers in `0..capacity`, stored one bit per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        Self {
            capacity,
            words: vec![0; words_for(capacity)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = Self::new(capacity);
        for v in 0..capacity {
            set.insert(v);
        }
        set
    }

    pub fn from_iter_with_capacity<I: IntoIterator<Item = usize>>(capacity: usize, iter: I) -> Self {
        let mut set = Self::new(capacity);
        for v in iter {
            set.insert(v);
        }
        set
    }

    pub(crate) fn from_words(capacity: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(capacity));
        Self {
            capacity,
            words: words.to_vec(),
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Returns `true` if `v` was newly inserted.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of range 0..{}", self.capacity);
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of range 0..{}", self.capacity);
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `|self ∩ other|` without materializing the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        intersection_len(&self.words, &other.words)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[inline]
pub(crate) fn intersection_len(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_and_iterate_across_words() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        assert!(!s.contains(500));
    }

    #[test]
    fn intersection_and_subset() {
        let a = VertexSet::from_iter_with_capacity(100, [1, 2, 70]);
        let b = VertexSet::from_iter_with_capacity(100, [2, 70, 99]);
        assert_eq!(a.intersection_len(&b), 2);
        assert!(!a.is_subset(&b));
        let mut c = a.clone();
        c.union_with(&b);
        assert!(a.is_subset(&c) && b.is_subset(&c));
        assert_eq!(VertexSet::full(67).len(), 67);
    }
}
