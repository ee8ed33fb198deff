//! Bit-packed exact linear algebra over GF(2).
//!
//! Vectors are single machine words, matrices are vectors of row words, and
//! subspaces carry both a reduced row echelon basis and a materialized bitset
//! of the projective points they contain. Everything is exact integer
//! arithmetic; there is no floating point anywhere.
//!
//! The matrix layer supports ambient dimensions up to 16 (one `u32` row word
//! is plenty). The [`Subspace`] layer additionally caps the ambient dimension
//! at 7 so that the full point set of the ambient projective geometry fits in
//! one `u128`: disjointness of two subspaces is a single AND plus a zero
//! test, which is the innermost operation of every search built on top.
//!
//! All values are immutable after construction, so everything here is safe to
//! share across threads.

mod matrix;
mod points;
mod subspace;
mod vector;

pub use matrix::GF2Matrix;
pub use points::PointSet;
pub use subspace::Subspace;
pub use vector::GF2Vector;

/// Largest ambient dimension the matrix layer accepts.
pub const MAX_AMBIENT: usize = 16;

/// Largest ambient dimension for which subspaces (with their point bitsets)
/// can be formed.
pub const MAX_POINT_AMBIENT: usize = 7;
