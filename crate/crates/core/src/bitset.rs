//! Fixed-capacity vertex bitsets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Vertex;

/// A set of vertices drawn from `0..capacity`, stored as 64-bit words.
///
/// Graphs on at most 64 vertices use a single word; larger graphs use one
/// word per block of 64 vertices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64).max(1)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = Self::empty(capacity);
        for v in 0..capacity {
            set.insert(v as Vertex);
        }
        set
    }

    pub fn from_vertices(capacity: usize, vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = Self::empty(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Number of vertices this set can address.
    pub fn capacity(&self) -> usize {
        self.words.len() * 64
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        self.words[v as usize / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.words[v as usize / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.words
            .get(v as usize / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn copy_from(&mut self, other: &VertexSet) {
        self.words.copy_from_slice(&other.words);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Vertices in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros();
                self.current &= self.current - 1;
                return Some((self.index * 64) as Vertex + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_across_words() {
        let set = VertexSet::from_vertices(200, [0, 63, 64, 130, 199]);
        assert_eq!(set.to_vec(), vec![0, 63, 64, 130, 199]);
        assert_eq!(set.len(), 5);
        assert!(set.contains(130));
        assert!(!set.contains(131));
        assert!(!set.contains(5000));
    }

    #[test]
    fn set_algebra() {
        let mut a = VertexSet::from_vertices(100, [1, 2, 3, 70]);
        let b = VertexSet::from_vertices(100, [2, 70, 99]);
        assert_eq!(a.intersection_len(&b), 2);
        a.difference_with(&b);
        assert_eq!(a.to_vec(), vec![1, 3]);
        assert!(a.is_disjoint(&b));
        a.union_with(&b);
        assert_eq!(a.len(), 5);
        assert!(b.is_subset(&a));
    }
}
