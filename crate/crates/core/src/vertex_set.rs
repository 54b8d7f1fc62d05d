use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest graph order a single-word vertex set can hold.
pub const MAX_ORDER: usize = 64;

/// A subset of the vertices `0..order` of one graph, stored as a single
/// 64-bit word.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    order: usize,
}

#[inline]
pub(crate) fn full_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        VertexSet { bits: 0, order }
    }

    pub fn full(order: usize) -> Self {
        VertexSet {
            bits: full_mask(order),
            order,
        }
    }

    pub fn singleton(order: usize, v: usize) -> Result<Self> {
        let mut s = VertexSet::empty(order);
        s.insert(v)?;
        Ok(s)
    }

    /// Builds a set from a raw mask, rejecting bits at or above `order`.
    pub fn from_bits(order: usize, bits: u64) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        if bits & !full_mask(order) != 0 {
            let vertex = 63 - (bits & !full_mask(order)).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, order });
        }
        Ok(VertexSet { bits, order })
    }

    pub(crate) fn from_bits_unchecked(order: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !full_mask(order), 0);
        VertexSet { bits, order }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Result<Self> {
        let mut s = VertexSet::empty(order);
        for v in vertices {
            s.insert(v)?;
        }
        Ok(s)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<bool> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        let fresh = !self.contains(v);
        self.bits |= 1 << v;
        Ok(fresh)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.contains(v);
        if present {
            self.bits &= !(1 << v);
        }
        present
    }

    pub fn with(mut self, v: usize) -> Result<Self> {
        self.insert(v)?;
        Ok(self)
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet::from_bits_unchecked(self.order, self.bits | other.bits)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet::from_bits_unchecked(self.order, self.bits & other.bits)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet::from_bits_unchecked(self.order, self.bits & !other.bits)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_bits_unchecked(self.order, !self.bits & full_mask(self.order))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterates the set bits of a raw mask in ascending order.
#[inline]
pub(crate) fn members(bits: u64) -> Members {
    Members { bits }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Sets order by cardinality first, then lexicographically by their sorted
/// member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.order.cmp(&other.order))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::empty(5);
        assert!(s.insert(3).unwrap());
        assert!(!s.insert(3).unwrap());
        assert!(s.contains(3));
        assert_eq!(s.len(), 1);
        assert!(matches!(
            s.insert(5),
            Err(Error::VertexOutOfRange { vertex: 5, order: 5 })
        ));
        assert!(s.remove(3));
        assert!(s.is_empty());
    }

    #[test]
    fn full_set_at_word_boundary() {
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(0).len(), 0);
        assert!(VertexSet::from_bits(3, 0b1000).is_err());
    }

    #[test]
    fn ordering_is_cardinality_then_lexicographic() {
        let a = VertexSet::from_vertices(4, [2]).unwrap();
        let b = VertexSet::from_vertices(4, [0, 3]).unwrap();
        let c = VertexSet::from_vertices(4, [1, 2]).unwrap();
        let mut v = vec![c, b, a];
        v.sort();
        assert_eq!(v, vec![a, b, c]);
    }

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from_vertices(10, [9, 1, 4]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 4, 9]);
        assert_eq!(s.complement().len(), 7);
    }
}
