use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::GF2Vector;

/// A set of projective points of PG(v-1,2) for v up to 7.
///
/// Points are the nonzero vectors of F_2^v; the point whose vector encoding
/// is w occupies bit w - 1, so the full point set of PG(6,2) is the low 127
/// bits of a `u128`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    bits: u128,
}

impl PointSet {
    pub const EMPTY: PointSet = PointSet { bits: 0 };

    /// All 2^v - 1 points of the ambient geometry.
    pub fn full(v: usize) -> PointSet {
        assert!(v <= crate::MAX_POINT_AMBIENT, "no point bitsets beyond v = 7");
        PointSet { bits: (1u128 << ((1usize << v) - 1)) - 1 }
    }

    pub fn from_bits(bits: u128) -> PointSet {
        PointSet { bits }
    }

    pub fn bits(self) -> u128 {
        self.bits
    }

    pub fn singleton(encoding: u32) -> PointSet {
        assert!(encoding >= 1, "the zero vector is not a point");
        PointSet { bits: 1u128 << (encoding - 1) }
    }

    pub fn of(x: GF2Vector) -> PointSet {
        Self::singleton(x.bits())
    }

    pub fn insert(&mut self, encoding: u32) {
        self.bits |= PointSet::singleton(encoding).bits;
    }

    pub fn contains(self, encoding: u32) -> bool {
        encoding >= 1 && self.bits >> (encoding - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Iterates the vector encodings of the members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let encoding = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(encoding)
            }
        })
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet { bits: self.bits & rhs.bits }
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet { bits: self.bits | rhs.bits }
    }
}

impl BitXor for PointSet {
    type Output = PointSet;
    fn bitxor(self, rhs: PointSet) -> PointSet {
        PointSet { bits: self.bits ^ rhs.bits }
    }
}

/// Set difference.
impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet { bits: self.bits & !rhs.bits }
    }
}

/// Complement within the full 127-bit universe of PG(6,2). For smaller
/// geometries subtract from [`PointSet::full`] instead.
impl Not for PointSet {
    type Output = PointSet;
    fn not(self) -> PointSet {
        PointSet::full(7) - self
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
