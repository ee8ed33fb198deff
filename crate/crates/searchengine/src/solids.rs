//! Extension of a 17-block plane spread to a 34-member subspace code.
//!
//! Adding 17 solids that meet every plane and each other in at most one
//! point yields a code of 34 subspaces with pairwise distance at least 5.
//! Under the orthogonal complement the solid set becomes a set of 17
//! pairwise disjoint planes, and meeting a spread block in at most a point
//! becomes the same bound against the block's complement.  The search
//! therefore runs as a disjoint-plane packing in the dual space, where the
//! point-driven solver prunes far better than a clique search over solids
//! whose pairwise overlaps it would have to tolerate.  The 8 dual points
//! left uncovered are the holes of a 17-block spread in the dual space and
//! hence an affine solid, which lets the packing force the full leftover
//! from a few designated points.

use once_cell::sync::Lazy;

use gf2core::{PointSet, Subspace};
use projgeom::enumerate_grassmannian;
use spreadkit::PartialSpread;

use crate::packing::pack_disjoint_planes_affine;
use crate::Error;

/// All 11811 planes of the ambient space, in enumeration order.  Shared by
/// every extension run; candidates are filtered per spread.
static PLANES: Lazy<Vec<Subspace>> = Lazy::new(|| enumerate_grassmannian(7, 3).collect());

/// Calls `found` with every set of 17 solids that extends the 17-block
/// spread to a distance-5 code of 34 subspaces.  Solids within a set are
/// sorted by point mask; sets stream in dual packing order.
pub fn extend_17_to_34(
    s: &PartialSpread,
    mut found: impl FnMut(Vec<Subspace>),
) -> Result<(), Error> {
    if s.len() != 17 {
        return Err(Error::WrongSpreadSize {
            expected: 17,
            got: s.len(),
        });
    }
    let dual_blocks: Vec<u128> = s
        .blocks()
        .iter()
        .map(|b| b.orthogonal_complement().points().bits())
        .collect();
    let candidates: Vec<Subspace> = PLANES
        .iter()
        .filter(|plane| {
            let m = plane.points().bits();
            dual_blocks.iter().all(|&b| (m & b).count_ones() <= 1)
        })
        .cloned()
        .collect();
    pack_disjoint_planes_affine(PointSet::full(7), &candidates, 17, 8, |packed| {
        let mut solids: Vec<Subspace> = packed
            .iter()
            .map(|&i| candidates[i].orthogonal_complement())
            .collect();
        solids.sort_by_key(|solid| solid.points().bits());
        found(solids);
    });
    Ok(())
}
