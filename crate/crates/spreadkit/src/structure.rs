use gf2core::{PointSet, Subspace};
use projgeom::DimensionDistribution;

use crate::{Error, PartialSpread};

/// The geometric shape of the hole set of a spread of size 16 or 17,
/// together with the witnessing subspaces.
///
/// Size 17 leaves 8 holes forming a solid minus a plane. Size 16 leaves 15
/// holes, and the span dimension n of the hole set decides the picture: a
/// full solid (n = 4), three planes through a common line (n = 5), or a
/// plane plus an affine solid (n = 6 when they touch, n = 7 when they do
/// not). The one remaining case, n = 7 with no plane inside the hole set at
/// all, is seven lines through a common point whose quotient is a
/// projective basis; exactly these spreads are complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HoleStructure {
    AffineSolid8 { solid: Subspace, removed_plane: Subspace },
    FullSolid15 { solid: Subspace },
    ThreePlanesCommonLine { line: Subspace, planes: [Subspace; 3] },
    PlanePlusAffineSolid {
        plane: Subspace,
        solid: Subspace,
        removed_plane: Subspace,
        meet_dim: usize,
    },
    SevenLinesProjectiveBasis { center: Subspace, lines: [Subspace; 7] },
}

impl HoleStructure {
    /// The dimension of the span of the hole set.
    pub fn hole_space_dimension(&self) -> usize {
        match self {
            HoleStructure::AffineSolid8 { .. } | HoleStructure::FullSolid15 { .. } => 4,
            HoleStructure::ThreePlanesCommonLine { .. } => 5,
            HoleStructure::PlanePlusAffineSolid { meet_dim, .. } => 7 - meet_dim,
            HoleStructure::SevenLinesProjectiveBasis { .. } => 7,
        }
    }
}

/// Splits a point set into span, affine remainder and removed plane: the
/// set must be a coset of a plane inside its own span, which then is a
/// solid. Returns (solid, removed plane).
fn affine_solid_parts(v: usize, affine: PointSet) -> Option<(Subspace, Subspace)> {
    if affine.len() != 8 {
        return None;
    }
    let solid = Subspace::from_points(v, affine);
    if solid.dim() != 4 {
        return None;
    }
    let removed = solid.points() - affine;
    let plane = Subspace::from_points(v, removed);
    if plane.dim() != 3 || plane.points() != removed {
        return None;
    }
    Some((solid, plane))
}

/// Identifies which of the five hole shapes a spread of size 16 or 17 has
/// and extracts the witnesses. Any mismatch between witnesses and the
/// actual hole set comes back as an error rather than a best guess.
pub fn classify_hole_structure(s: &PartialSpread) -> Result<HoleStructure, Error> {
    let holes = s.holes();
    match s.len() {
        17 => {
            let (solid, removed_plane) = affine_solid_parts(7, holes)
                .ok_or(Error::UnrecognizedHoleStructure)?;
            Ok(HoleStructure::AffineSolid8 { solid, removed_plane })
        }
        16 => {
            let n = s.hole_space().dim();
            let free = s.free_planes();
            match (n, free.len()) {
                (4, _) => {
                    debug_assert_eq!(holes, s.hole_space().points());
                    Ok(HoleStructure::FullSolid15 { solid: s.hole_space().clone() })
                }
                (5, 3) => {
                    let line = free[0].meet(&free[1]);
                    let consistent = line.dim() == 2
                        && free[0].meet(&free[2]) == line
                        && free[1].meet(&free[2]) == line
                        && free[0].points() | free[1].points() | free[2].points() == holes;
                    if !consistent {
                        return Err(Error::UnrecognizedHoleStructure);
                    }
                    let planes: [Subspace; 3] =
                        free.try_into().expect("exactly three free planes");
                    Ok(HoleStructure::ThreePlanesCommonLine { line, planes })
                }
                (6, 1) | (7, 1) => {
                    let plane = free.into_iter().next().expect("one free plane");
                    let (solid, removed_plane) =
                        affine_solid_parts(7, holes - plane.points())
                            .ok_or(Error::UnrecognizedHoleStructure)?;
                    let meet_dim = plane.meet(&solid).dim();
                    if meet_dim != 7 - n {
                        return Err(Error::UnrecognizedHoleStructure);
                    }
                    Ok(HoleStructure::PlanePlusAffineSolid { plane, solid, removed_plane, meet_dim })
                }
                (7, 0) => {
                    let triples = s.hole_lines();
                    if triples.len() != 7 {
                        return Err(Error::UnrecognizedHoleStructure);
                    }
                    let lines: Vec<Subspace> = triples
                        .iter()
                        .map(|t| {
                            Subspace::from_points(
                                7,
                                t.iter().fold(PointSet::EMPTY, |m, &p| m | PointSet::singleton(p)),
                            )
                        })
                        .collect();
                    let center = lines[0].meet(&lines[1]);
                    let consistent = center.dim() == 1
                        && lines.iter().skip(2).all(|l| l.contains(&center))
                        && lines
                            .iter()
                            .fold(PointSet::EMPTY, |m, l| m | l.points())
                            == holes;
                    if !consistent {
                        return Err(Error::UnrecognizedHoleStructure);
                    }
                    let quotient = projgeom::quotient_points(&lines, &center)
                        .map_err(|_| Error::UnrecognizedHoleStructure)?;
                    if !projgeom::is_projective_basis(&quotient, 6) {
                        return Err(Error::UnrecognizedHoleStructure);
                    }
                    let lines: [Subspace; 7] = lines.try_into().expect("seven hole lines");
                    Ok(HoleStructure::SevenLinesProjectiveBasis { center, lines })
                }
                _ => Err(Error::UnrecognizedHoleStructure),
            }
        }
        got => Err(Error::UnclassifiableSize { got }),
    }
}

/// For a spread of size 17, the multiset of positive intersection
/// dimensions between the blocks and the removed plane of the hole
/// structure. Only three types occur; anything else is an error.
pub fn spread17_type(s: &PartialSpread) -> Result<DimensionDistribution, Error> {
    if s.len() != 17 {
        return Err(Error::UnclassifiableSize { got: s.len() });
    }
    let removed_plane = match classify_hole_structure(s)? {
        HoleStructure::AffineSolid8 { removed_plane, .. } => removed_plane,
        _ => unreachable!("size 17 always classifies as an affine solid"),
    };
    let dist = DimensionDistribution::from_dims(s.blocks().iter().filter_map(|b| {
        let common = (b.points() & removed_plane.points()).len();
        let dim = (common + 1).ilog2() as usize;
        (dim > 0).then_some(dim)
    }));
    let admissible = [
        DimensionDistribution::from_dims([3]),
        DimensionDistribution::from_dims([2, 1, 1, 1, 1]),
        DimensionDistribution::from_dims([1; 7]),
    ];
    if !admissible.contains(&dist) {
        return Err(Error::UnexpectedMeetType { got: dist.to_string() });
    }
    Ok(dist)
}

/// Whether the members partition the nonzero points of their common
/// ambient space: pairwise disjoint, nothing of positive dimension missing.
pub fn is_vector_space_partition(members: &[Subspace]) -> bool {
    let Some(first) = members.first() else {
        return false;
    };
    let v = first.ambient();
    let mut covered = PointSet::EMPTY;
    for m in members {
        if m.ambient() != v || m.dim() == 0 || !(covered & m.points()).is_empty() {
            return false;
        }
        covered = covered | m.points();
    }
    covered == PointSet::full(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil;
    use gf2core::GF2Matrix;

    fn seventeen_spread() -> PartialSpread {
        let mut blocks = testutil::lifted_field_spread().blocks().to_vec();
        blocks.push(Subspace::span(&GF2Matrix::new(7, vec![8, 4, 2])));
        PartialSpread::new(blocks).unwrap()
    }

    #[test]
    fn field_spread_is_a_full_solid() {
        let s = testutil::lifted_field_spread();
        match classify_hole_structure(&s).unwrap() {
            HoleStructure::FullSolid15 { solid } => {
                assert_eq!(solid, Subspace::span(&GF2Matrix::new(7, vec![8, 4, 2, 1])));
            }
            other => panic!("expected a full solid, got {other:?}"),
        }
    }

    #[test]
    fn adding_a_plane_leaves_an_affine_solid() {
        let s = seventeen_spread();
        let structure = classify_hole_structure(&s).unwrap();
        match &structure {
            HoleStructure::AffineSolid8 { solid, removed_plane } => {
                assert_eq!(solid.dim(), 4);
                assert_eq!(removed_plane, s.blocks().last().unwrap());
            }
            other => panic!("expected an affine solid, got {other:?}"),
        }
        assert_eq!(structure.hole_space_dimension(), 4);
        assert_eq!(spread17_type(&s).unwrap().to_string(), "(3^1)");
    }

    #[test]
    fn removing_a_far_block_gives_plane_plus_affine_solid() {
        let seventeen = seventeen_spread();
        let dropped = seventeen.blocks()[1].clone();
        let blocks: Vec<_> = seventeen
            .blocks()
            .iter()
            .filter(|b| **b != dropped)
            .cloned()
            .collect();
        let s = PartialSpread::new(blocks).unwrap();
        match classify_hole_structure(&s).unwrap() {
            HoleStructure::PlanePlusAffineSolid { plane, solid, removed_plane, meet_dim } => {
                assert_eq!(plane, dropped);
                assert_eq!(meet_dim, 0);
                assert_eq!(solid.dim(), 4);
                assert_eq!(removed_plane, *seventeen.blocks().last().unwrap());
            }
            other => panic!("expected plane plus affine solid, got {other:?}"),
        }
    }

    #[test]
    fn sizes_other_than_16_and_17_are_rejected() {
        let s = PartialSpread::new(vec![]).unwrap();
        assert_eq!(
            classify_hole_structure(&s),
            Err(Error::UnclassifiableSize { got: 0 })
        );
        assert_eq!(spread17_type(&s), Err(Error::UnclassifiableSize { got: 0 }));
    }

    #[test]
    fn partition_detection() {
        let s = testutil::lifted_field_spread();
        let mut members = s.blocks().to_vec();
        assert!(!is_vector_space_partition(&members));
        members.push(s.hole_space().clone());
        assert!(is_vector_space_partition(&members));
        assert_eq!(
            projgeom::dimension_distribution(&members).to_string(),
            "(3^16 4^1)"
        );
        members.pop();
        members.push(Subspace::full(7));
        assert!(!is_vector_space_partition(&members));
        assert!(!is_vector_space_partition(&[]));
        assert!(is_vector_space_partition(&[Subspace::full(7)]));
    }
}
