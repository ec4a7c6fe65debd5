use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `0..universe`, stored as a packed bitset.
///
/// Two sets only combine when they share a universe; the set algebra
/// methods panic on mismatch, the graph-facing APIs return
/// [`Error::SizeMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { universe, words: vec![0; universe.div_ceil(WORD)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
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

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Removes every member `<= v`.
    pub fn remove_up_to(&mut self, v: usize) {
        let last = v / WORD;
        let len = self.words.len();
        for w in self.words.iter_mut().take(last.min(len)) {
            *w = 0;
        }
        if let Some(w) = self.words.get_mut(last) {
            let bit = v % WORD;
            *w &= if bit == WORD - 1 { 0 } else { !0u64 << (bit + 1) };
        }
    }

    /// In-place copy that reuses the allocation.
    #[inline]
    pub(crate) fn assign(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        self.words.copy_from_slice(&other.words);
    }

    fn check(&self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(w) = self.words.last_mut() {
                *w &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(universe: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(universe, vs.iter().copied()).unwrap()
    }

    #[test]
    fn basic_algebra() {
        let a = set(70, &[0, 3, 64, 69]);
        let b = set(70, &[3, 5, 69]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 3, 5, 64, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 69]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 64]);
        assert_eq!(a.complement().len(), 66);
        assert!(!a.is_disjoint(&b));
        assert!(set(70, &[3]).is_subset(&a));
        assert_eq!(VertexSet::full(70).len(), 70);
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(VertexSet::from_vertices(3, [3]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn remove_up_to_edges() {
        let mut s = VertexSet::full(130);
        s.remove_up_to(63);
        assert_eq!(s.first(), Some(64));
        s.remove_up_to(127);
        assert_eq!(s.to_vec(), vec![128, 129]);
        s.remove_up_to(200);
        assert!(s.is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(set(5, &[0, 2]).to_string(), "{0,2}");
        assert_eq!(VertexSet::new(5).to_string(), "{}");
    }

    proptest! {
        #[test]
        fn iter_matches_contains(universe in 1usize..200, raw in proptest::collection::vec(0usize..200, 0..40)) {
            let members: Vec<usize> = raw.into_iter().filter(|&v| v < universe).collect();
            let s = set(universe, &members);
            let mut expected = members.clone();
            expected.sort_unstable();
            expected.dedup();
            prop_assert_eq!(s.to_vec(), expected.clone());
            prop_assert_eq!(s.len(), expected.len());
            for v in 0..universe {
                prop_assert_eq!(s.contains(v), expected.binary_search(&v).is_ok());
            }
            prop_assert_eq!(s.complement().complement(), s);
        }
    }
}
