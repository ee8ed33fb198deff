use std::fmt;

use crate::{GF2Matrix, GF2Vector, PointSet};

/// A subspace of F_2^v for v up to 7, as an element of the subspace lattice.
///
/// Stored as the unique reduced echelon basis together with the materialized
/// bitset of contained projective points. The basis is the canonical
/// representative: two subspaces are equal exactly when their bases are, and
/// equality, hashing and ordering all derive from it. The point bitset makes
/// lattice queries cheap: containment and disjointness are single word
/// operations, and meets come straight from an AND.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: GF2Matrix,
    points: PointSet,
}

impl Subspace {
    /// The row space of `m`.
    pub fn span(m: &GF2Matrix) -> Subspace {
        let v = m.ncols();
        assert!(v <= crate::MAX_POINT_AMBIENT, "subspaces need ambient dimension <= 7");
        let basis = m.rref();
        let points = materialize(&basis);
        Subspace { basis, points }
    }

    pub fn zero(v: usize) -> Subspace {
        Subspace::span(&GF2Matrix::new(v, vec![]))
    }

    pub fn full(v: usize) -> Subspace {
        Subspace::span(&GF2Matrix::identity(v))
    }

    /// The 1-dimensional subspace through a nonzero vector.
    pub fn point(x: GF2Vector) -> Subspace {
        assert!(!x.is_zero(), "a point needs a nonzero vector");
        Subspace::span(&GF2Matrix::from_rows(x.ambient(), &[x]))
    }

    /// The subspace spanned by a set of points. If `points` happens to be
    /// closed under addition this reproduces exactly that point set.
    pub fn from_points(v: usize, points: PointSet) -> Subspace {
        let rows = points.iter().collect();
        Subspace::span(&GF2Matrix::new(v, rows))
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.ncols()
    }

    /// The reduced echelon basis; rows are in strictly decreasing numeric
    /// order.
    pub fn basis(&self) -> &GF2Matrix {
        &self.basis
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    /// Membership test; the zero vector belongs to every subspace.
    pub fn member(&self, x: GF2Vector) -> bool {
        assert_eq!(x.ambient(), self.ambient());
        x.is_zero() || self.points.contains(x.bits())
    }

    /// Lattice meet, the intersection.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        // The intersection of two subspaces is a subspace, so the AND of the
        // point sets is already closed and spans back to exactly itself.
        let common = self.points & other.points;
        let s = Subspace::from_points(self.ambient(), common);
        debug_assert_eq!(s.points, common);
        s
    }

    /// Lattice join, the sum.
    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        let mut rows = self.basis.row_words().to_vec();
        rows.extend_from_slice(other.basis.row_words());
        Subspace::span(&GF2Matrix::new(self.ambient(), rows))
    }

    /// The orthogonal complement with respect to the standard dot product
    /// b(x,y) = sum x_i y_i.
    pub fn orthogonal_complement(&self) -> Subspace {
        Subspace::span(&self.basis.kernel())
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        other.points.is_subset(self.points)
    }

    /// Whether the two subspaces meet trivially.
    pub fn is_disjoint(&self, other: &Subspace) -> bool {
        self.points.is_disjoint(other.points)
    }
}

/// All nonzero combinations of the basis rows as a point bitset.
fn materialize(basis: &GF2Matrix) -> PointSet {
    let d = basis.nrows();
    let mut points = PointSet::EMPTY;
    let mut value = 0u32;
    for c in 1u32..1 << d {
        // Gray-code walk: each step toggles exactly one basis row.
        let flip = (c ^ (c >> 1)) ^ ((c - 1) ^ ((c - 1) >> 1));
        value ^= basis.row_words()[flip.trailing_zeros() as usize];
        points.insert(value);
    }
    points
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {}, basis {:?})", self.dim(), self.basis)
    }
}
