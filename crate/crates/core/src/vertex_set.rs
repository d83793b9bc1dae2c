use serde::{Serialize, Serializer};

use crate::graph::Vertex;

/// A subset of `0..n` kept both as packed membership words and as an
/// insertion-ordered list.
#[derive(Clone, Debug)]
pub struct VertexSet {
    words: Vec<u64>,
    items: Vec<Vertex>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { words: vec![0; universe.div_ceil(64)], items: Vec::new(), universe }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_iter(universe, 0..universe)
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(universe: usize, iter: I) -> Self {
        let mut s = Self::new(universe);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Returns `true` if `v` was newly inserted. Panics if `v >= universe`.
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / 64, v % 64);
        if self.words[w] >> b & 1 == 1 {
            return false;
        }
        self.words[w] |= 1 << b;
        self.items.push(v);
        true
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.items.iter().copied()
    }

    /// Members in insertion order.
    pub fn as_slice(&self) -> &[Vertex] {
        &self.items
    }

    pub fn to_sorted_vec(&self) -> Vec<Vertex> {
        let mut v = self.items.clone();
        v.sort_unstable();
        v
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.items.iter().all(|&v| other.contains(v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_iter(self.universe, self.iter().filter(|&v| other.contains(v)))
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.words == other.words
    }
}

impl Eq for VertexSet {}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_sorted_vec().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_and_membership_agree() {
        let s = VertexSet::from_iter(130, [3, 129, 64, 3, 0]);
        assert_eq!(s.as_slice(), &[3, 129, 64, 0]);
        assert_eq!(s.len(), 4);
        for v in 0..130 {
            assert_eq!(s.contains(v), [0, 3, 64, 129].contains(&v));
        }
        assert!(!s.contains(500));
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let a = VertexSet::from_iter(10, [1, 2, 3]);
        let b = VertexSet::from_iter(10, [3, 1, 2]);
        assert_eq!(a, b);
        assert!(a.is_subset(&VertexSet::full(10)));
    }
}
