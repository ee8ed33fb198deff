//! The projective geometry PG(v-1,2) for v up to 7.
//!
//! Builds on the exact linear algebra of `gf2core` and adds the geometric
//! layer shared by everything downstream: subspace counting (Gaussian
//! binomials), deterministic Grassmannian enumeration, the subspace metric,
//! duality of whole sets, quotient geometries, projective bases, and the
//! cached point and hyperplane lists of [`Geometry`].
//!
//! Conventions fixed here and relied on everywhere else:
//!
//! * Points and hyperplanes are indexed 0..2^v-2 by vector encoding;
//!   hyperplane i is the orthogonal complement of point i under the standard
//!   dot product.
//! * [`enumerate_grassmannian`] yields each subspace exactly once in a fixed
//!   order (pivot column sets in colexicographic order, free entries counted
//!   in binary), so enumeration order is reproducible across runs and
//!   machines.

mod distribution;
mod enumeration;
mod geometry;
mod ops;

pub use distribution::DimensionDistribution;
pub use enumeration::{enumerate_grassmannian, subspaces_of};
pub use geometry::Geometry;
pub use ops::{
    dimension_distribution, dual_set, is_projective_basis, min_subspace_distance,
    quotient_points, subspace_distance,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("minimum distance needs at least two codewords, got {0}")]
    TooFewMembers(usize),
    #[error("image {index} does not contain the subspace being factored out")]
    ImageMissesModulo { index: usize },
    #[error("image {index} has dimension {got}, expected {expected}")]
    ImageDimension { index: usize, got: usize, expected: usize },
}

/// The Gaussian binomial coefficient: the number of k-dimensional subspaces
/// of an v-dimensional space over GF(2). Zero outside 0 <= k <= v.
pub fn gaussian(v: usize, k: usize) -> u128 {
    if k > v {
        return 0;
    }
    // Iterative product; every partial product is itself a Gaussian binomial,
    // so the division at each step is exact.
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * ((1u128 << (v - k + i)) - 1) / ((1u128 << i) - 1);
    }
    result
}
