use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 1]>;

/// A subset of the vertex set `{0, .., order - 1}` of some host graph.
///
/// Stored as a bitset; sets over hosts of order at most 64 never allocate.
/// Sets compare by their bit pattern read as a binary number, so `{0}` sorts
/// before `{1}` and `{0, 1}` sorts after `{1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    words: Words,
}

fn word_count(order: usize) -> usize {
    order.div_ceil(64)
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        VertexSet {
            order,
            words: smallvec![0; word_count(order)],
        }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for (i, w) in s.words.iter_mut().enumerate() {
            let hi = (order - 64 * i).min(64);
            *w = if hi == 64 { u64::MAX } else { (1u64 << hi) - 1 };
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for v in vertices {
            if v >= order {
                return Err(Error::InvalidVertex { vertex: v, order });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from the low `order` bits of `mask`. Requires `order <= 64`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        assert!(order <= 64, "mask sets need order <= 64");
        let mut s = Self::empty(order);
        if order > 0 {
            let keep = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// The low word of the bitset. Only meaningful when `order <= 64`.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.order <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} outside 0..{}", self.order);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub(crate) fn check_host(&self, order: usize) -> Result<()> {
        if self.order == order {
            Ok(())
        } else {
            Err(Error::HostMismatch {
                expected: order,
                found: self.order,
            })
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.order, other.order, "vertex sets over different hosts");
        VertexSet {
            order: self.order,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.order).difference(self)
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.order, other.order, "vertex sets over different hosts");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        assert_eq!(self.order, other.order, "vertex sets over different hosts");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.order == other.order && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Re-expresses a set of a host with `order` vertices through `map`, where
    /// `map[i]` is the host id of local vertex `i`.
    pub fn lift(&self, map: &[usize], order: usize) -> Self {
        let mut out = Self::empty(order);
        for v in self.iter() {
            out.insert(map[v]);
        }
        out
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| {
            self.words
                .iter()
                .rev()
                .cmp(other.words.iter().rev())
        })
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

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
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

/// A duplicate-free collection of vertex sets of one host, kept sorted by
/// bit pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    order: usize,
    sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(order: usize, mut sets: Vec<VertexSet>) -> Self {
        debug_assert!(sets.iter().all(|s| s.order() == order));
        sets.sort_unstable();
        sets.dedup();
        SetFamily { order, sets }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, VertexSet> {
        self.sets.iter()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.sets.binary_search(set).is_ok()
    }

    /// Intersection of all members; the whole vertex set for an empty family.
    pub fn intersection(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::full(self.order), |mut acc, s| {
            acc.intersect_with(s);
            acc
        })
    }

    pub fn union(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::empty(self.order), |mut acc, s| {
            acc.union_with(s);
            acc
        })
    }

    /// Members lifted into a host of `order` vertices through `map`.
    pub fn lift(&self, map: &[usize], order: usize) -> SetFamily {
        SetFamily::new(order, self.sets.iter().map(|s| s.lift(map, order)).collect())
    }

    pub fn filter(&self, mut keep: impl FnMut(&VertexSet) -> bool) -> SetFamily {
        SetFamily {
            order: self.order,
            sets: self.sets.iter().filter(|s| keep(s)).cloned().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a VertexSet;
    type IntoIter = core::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn algebra_over_two_words() {
        let a = VertexSet::from_vertices(100, [0, 63, 64, 99]).unwrap();
        let b = VertexSet::from_vertices(100, [63, 70]).unwrap();
        assert_eq!(a.union(&b).to_vec(), vec![0, 63, 64, 70, 99]);
        assert_eq!(a.intersection(&b).to_vec(), vec![63]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 64, 99]);
        assert_eq!(VertexSet::full(100).len(), 100);
        assert_eq!(a.complement().len(), 96);
    }

    #[test]
    fn order_zero_sets() {
        let e = VertexSet::empty(0);
        assert!(e.is_empty());
        assert_eq!(VertexSet::full(0), e);
        assert_eq!(e.iter().count(), 0);
        assert_eq!(SetFamily::new(0, vec![e.clone()]).intersection(), e);
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            VertexSet::from_vertices(3, [3]),
            Err(Error::InvalidVertex { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn families_sort_by_bit_pattern() {
        let f = SetFamily::new(
            3,
            vec![
                VertexSet::from_mask(3, 0b011),
                VertexSet::from_mask(3, 0b010),
                VertexSet::from_mask(3, 0b001),
                VertexSet::from_mask(3, 0b010),
            ],
        );
        let masks: Vec<u64> = f.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0b001, 0b010, 0b011]);
    }
}
