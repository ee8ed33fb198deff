use std::fmt;
use std::ops::BitXor;

/// A vector in F_2^v, packed into the low `v` bits of a word.
///
/// The encoding is fixed: coordinate x_j (1-based) occupies the bit of value
/// 2^(v-j). So e_1 is the numerically largest unit vector, e_v is 1, and the
/// all-one vector is 2^v - 1. With this convention the rows of a reduced
/// echelon basis are automatically in strictly decreasing numeric order,
/// which keeps serialized bases and enumeration orders human-readable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Vector {
    bits: u32,
    v: u8,
}

impl GF2Vector {
    /// Wraps `bits` as a vector in F_2^v. Panics if a bit beyond position
    /// `v` is set.
    pub fn new(bits: u32, v: usize) -> Self {
        assert!(v <= crate::MAX_AMBIENT, "ambient dimension {v} too large");
        assert!(bits < 1u32 << v, "vector {bits:#b} does not fit in {v} coordinates");
        GF2Vector { bits, v: v as u8 }
    }

    pub fn zero(v: usize) -> Self {
        Self::new(0, v)
    }

    /// The j-th unit vector, 1-based.
    pub fn unit(v: usize, j: usize) -> Self {
        assert!(1 <= j && j <= v, "unit vector index {j} out of range 1..={v}");
        Self::new(1 << (v - j), v)
    }

    pub fn all_one(v: usize) -> Self {
        Self::new(((1u64 << v) - 1) as u32, v)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn ambient(self) -> usize {
        self.v as usize
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Coordinate x_j, 1-based.
    pub fn coord(self, j: usize) -> bool {
        assert!(1 <= j && j <= self.ambient());
        self.bits >> (self.ambient() - j) & 1 == 1
    }

    /// Standard dot product b(x,y) = sum x_i y_i over GF(2).
    pub fn dot(self, other: GF2Vector) -> bool {
        assert_eq!(self.v, other.v, "dot product across ambient dimensions");
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    /// Column index (1-based) of the leading 1, or `None` for the zero
    /// vector. This is the pivot column when the vector is a row of a
    /// reduced echelon basis.
    pub fn leading_coord(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.ambient() - (31 - self.bits.leading_zeros() as usize))
        }
    }
}

impl BitXor for GF2Vector {
    type Output = GF2Vector;

    fn bitxor(self, rhs: GF2Vector) -> GF2Vector {
        assert_eq!(self.v, rhs.v, "sum across ambient dimensions");
        GF2Vector { bits: self.bits ^ rhs.bits, v: self.v }
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.v as usize)
    }
}
