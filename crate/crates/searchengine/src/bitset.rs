//! Fixed-capacity bit sets for vertex and candidate bookkeeping.
//!
//! The solvers in this crate track sets of vertex indices, not geometry
//! points, so the 128-bit mask in `gf2core` is the wrong shape for them.
//! This is the minimal word-array set they actually need.

/// Bit set over indices `0..capacity`, backed by `u64` words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl IndexSet {
    pub fn empty(capacity: usize) -> Self {
        IndexSet {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = IndexSet::empty(capacity);
        for i in 0..capacity {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.capacity);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Intersects with `other` in place.
    pub fn intersect_with(&mut self, other: &IndexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    /// Removes every member of `other` in place.
    pub fn intersect_complement_with(&mut self, other: &IndexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    pub fn intersection_len(&self, other: &IndexSet) -> usize {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(w, o)| (w & o).count_ones() as usize)
            .sum()
    }

    /// Iterates set members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}
