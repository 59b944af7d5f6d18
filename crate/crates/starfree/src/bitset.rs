//! Vertex sets as fixed-width bit vectors.
//!
//! Every set knows the vertex range `[0, parent_size)` of the graph it
//! belongs to; all set operations require matching parent sizes.

use std::fmt;

/// A subset of the vertices of some parent graph, stored one bit per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(parent_size: usize) -> Self {
        VertexSet {
            nbits: parent_size,
            words: vec![0; parent_size.div_ceil(64)],
        }
    }

    pub fn full(parent_size: usize) -> Self {
        let mut s = VertexSet {
            nbits: parent_size,
            words: vec![u64::MAX; parent_size.div_ceil(64)],
        };
        s.trim();
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(parent_size: usize, members: I) -> Self {
        let mut s = Self::empty(parent_size);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Clears any bits beyond `nbits` in the last word.
    fn trim(&mut self) {
        let rem = self.nbits % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn parent_size(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {} out of range {}", v, self.nbits);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {} out of range {}", v, self.nbits);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            wi: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_parent(&self, other: &Self) {
        assert_eq!(
            self.nbits, other.nbits,
            "vertex sets belong to different parents"
        );
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_parent(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_parent(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Self) {
        self.check_parent(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_parent(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_parent(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_parent(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    wi: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.wi += 1;
            if self.wi >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.wi];
        }
        let tz = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.wi * 64 + tz)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
