use gf2core::{GF2Matrix, GF2Vector, Subspace};

/// The ambient geometry PG(v-1,2) with its point and hyperplane lists built
/// once and then shared read-only.
///
/// Both lists are indexed 0..2^v-2 by vector encoding: `points()[i]` is the
/// point with encoding i+1, and `hyperplanes()[i]` is its orthogonal
/// complement under the standard dot product. Spectra over hyperplanes are
/// then plain loops of AND plus popcount against the cached point bitsets.
pub struct Geometry {
    v: usize,
    points: Vec<Subspace>,
    hyperplanes: Vec<Subspace>,
}

impl Geometry {
    pub fn new(v: usize) -> Geometry {
        assert!(1 <= v && v <= gf2core::MAX_POINT_AMBIENT);
        let points: Vec<Subspace> = (1u32..1 << v)
            .map(|enc| Subspace::point(GF2Vector::new(enc, v)))
            .collect();
        let hyperplanes = points.iter().map(Subspace::orthogonal_complement).collect();
        Geometry { v, points, hyperplanes }
    }

    pub fn ambient(&self) -> usize {
        self.v
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Subspace] {
        &self.points
    }

    pub fn hyperplanes(&self) -> &[Subspace] {
        &self.hyperplanes
    }

    /// All planes of the geometry in enumeration order. Not cached here;
    /// call sites that need the list repeatedly keep it around themselves.
    pub fn planes(&self) -> Vec<Subspace> {
        crate::enumerate_grassmannian(self.v, 3).collect()
    }

    /// The matrix acting as the identity on this geometry, handy as a
    /// starting point for building explicit maps in tests.
    pub fn identity(&self) -> GF2Matrix {
        GF2Matrix::identity(self.v)
    }
}
