use gf2core::{GF2Vector, Subspace};

use crate::{DimensionDistribution, Error};

/// The graph-theoretic distance of two subspaces in the subspace lattice:
/// dim U + dim W - 2 dim(U meet W).
pub fn subspace_distance(a: &Subspace, b: &Subspace) -> usize {
    a.dim() + b.dim() - 2 * a.meet(b).dim()
}

/// Applies the orthogonal complement to every member. An anti-automorphism
/// of the lattice, so pairwise subspace distances survive and dimensions map
/// k to v - k.
pub fn dual_set(c: &[Subspace]) -> Vec<Subspace> {
    c.iter().map(Subspace::orthogonal_complement).collect()
}

/// The multiset of member dimensions.
pub fn dimension_distribution(c: &[Subspace]) -> DimensionDistribution {
    DimensionDistribution::from_dims(c.iter().map(Subspace::dim))
}

/// Minimum pairwise subspace distance; needs at least two members.
pub fn min_subspace_distance(c: &[Subspace]) -> Result<usize, Error> {
    if c.len() < 2 {
        return Err(Error::TooFewMembers(c.len()));
    }
    let mut min = usize::MAX;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            min = min.min(subspace_distance(&c[i], &c[j]));
        }
    }
    Ok(min)
}

/// Whether the given points form a projective basis of PG(v-1,2): exactly
/// v + 1 points, any v of them linearly independent.
pub fn is_projective_basis(points: &[Subspace], v: usize) -> bool {
    if points.len() != v + 1 {
        return false;
    }
    assert!(points.iter().all(|p| p.dim() == 1 && p.ambient() == v));
    for skip in 0..points.len() {
        let rows: Vec<u32> = points
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, p)| p.basis().row_words()[0])
            .collect();
        if gf2core::GF2Matrix::new(v, rows).rank() != v {
            return false;
        }
    }
    true
}

/// Maps subspaces one dimension above `modulo` to the points they become in
/// the quotient geometry PG(V/modulo).
///
/// The quotient is realized in fixed coordinates: the complement spanned by
/// the standard basis vectors at the non-pivot columns of the echelon basis
/// of `modulo`. Each image meets that complement in exactly one point, whose
/// coordinates at the non-pivot columns (in increasing column order) are the
/// returned quotient coordinates.
pub fn quotient_points(images: &[Subspace], modulo: &Subspace) -> Result<Vec<Subspace>, Error> {
    let v = modulo.ambient();
    let pivots: Vec<usize> = (0..modulo.dim())
        .map(|i| modulo.basis().row(i).leading_coord().expect("echelon rows are nonzero"))
        .collect();
    let frame: Vec<usize> = (1..=v).filter(|j| !pivots.contains(j)).collect();
    let q = frame.len();
    let complement = Subspace::span(&gf2core::GF2Matrix::new(
        v,
        frame.iter().map(|&j| 1 << (v - j)).collect(),
    ))
    .points();

    images
        .iter()
        .enumerate()
        .map(|(index, image)| {
            if !image.contains(modulo) {
                return Err(Error::ImageMissesModulo { index });
            }
            if image.dim() != modulo.dim() + 1 {
                return Err(Error::ImageDimension {
                    index,
                    got: image.dim(),
                    expected: modulo.dim() + 1,
                });
            }
            // The complement is transversal to modulo, so the image meets it
            // in exactly one point.
            let meet = image.points() & complement;
            debug_assert_eq!(meet.len(), 1);
            let x = GF2Vector::new(meet.iter().next().expect("one point"), v);
            let mut bits = 0u32;
            for (idx, &col) in frame.iter().enumerate() {
                if x.coord(col) {
                    bits |= 1 << (q - 1 - idx);
                }
            }
            Ok(Subspace::point(GF2Vector::new(bits, q)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gf2core::GF2Matrix;
    use proptest::prelude::*;

    fn sub(v: usize, rows: &[u32]) -> Subspace {
        Subspace::span(&GF2Matrix::new(v, rows.to_vec()))
    }

    #[test]
    fn distance_examples() {
        let u = sub(7, &[0b1000000, 0b0100000, 0b0010000]);
        assert_eq!(subspace_distance(&u, &u), 0);
        let w = sub(7, &[0b0001000, 0b0000100, 0b0000010]);
        assert_eq!(subspace_distance(&u, &w), 6);
        let solid = sub(7, &[0b1000000, 0b0000100, 0b0000010, 0b0000001]);
        assert_eq!(subspace_distance(&u, &solid), 5);
    }

    #[test]
    fn min_distance_needs_two_members() {
        let u = sub(7, &[0b1000000]);
        assert_eq!(min_subspace_distance(&[u.clone()]), Err(Error::TooFewMembers(1)));
        assert_eq!(min_subspace_distance(&[u.clone(), u]), Ok(0));
    }

    #[test]
    fn projective_basis_of_pg62() {
        let mut pts: Vec<Subspace> =
            (1..=7).map(|j| Subspace::point(GF2Vector::unit(7, j))).collect();
        pts.push(Subspace::point(GF2Vector::all_one(7)));
        assert!(is_projective_basis(&pts, 7));

        let mut bad: Vec<Subspace> =
            (1..=7).map(|j| Subspace::point(GF2Vector::unit(7, j))).collect();
        bad.push(Subspace::point(GF2Vector::unit(7, 1) ^ GF2Vector::unit(7, 2)));
        assert!(!is_projective_basis(&bad, 7));
        assert!(!is_projective_basis(&bad[..7], 7));
    }

    #[test]
    fn quotient_of_lines_through_the_all_one_point() {
        let one = GF2Vector::all_one(7);
        let modulo = Subspace::point(one);
        let lines: Vec<Subspace> = (1..=7)
            .map(|j| {
                Subspace::span(&GF2Matrix::from_rows(7, &[one, GF2Vector::unit(7, j)]))
            })
            .collect();
        let quotient = quotient_points(&lines, &modulo).expect("valid images");
        assert_eq!(quotient.len(), 7);
        assert!(quotient.iter().all(|p| p.ambient() == 6 && p.dim() == 1));
        // Those seven lines project to a projective basis of the quotient.
        assert!(is_projective_basis(&quotient, 6));
    }

    #[test]
    fn quotient_rejects_bad_images() {
        let modulo = Subspace::point(GF2Vector::all_one(7));
        let stranger = sub(7, &[0b1000000, 0b0100000]);
        assert_eq!(
            quotient_points(&[stranger], &modulo),
            Err(Error::ImageMissesModulo { index: 0 })
        );
        assert_eq!(
            quotient_points(&[modulo.clone()], &modulo),
            Err(Error::ImageDimension { index: 0, got: 1, expected: 2 })
        );
    }

    #[test]
    fn distribution_examples() {
        let spread: Vec<Subspace> = (0..3).map(|_| sub(7, &[1, 2, 4])).collect();
        assert_eq!(dimension_distribution(&spread).to_string(), "(3^3)");
        assert_eq!(dimension_distribution(&[]).to_string(), "()");
    }

    fn arb_subspace() -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(0u32..128, 0..=5)
            .prop_map(|rows| Subspace::span(&GF2Matrix::new(7, rows)))
    }

    proptest! {
        #[test]
        fn metric_axioms(a in arb_subspace(), b in arb_subspace(), c in arb_subspace()) {
            prop_assert_eq!(subspace_distance(&a, &a), 0);
            prop_assert_eq!(subspace_distance(&a, &b), subspace_distance(&b, &a));
            prop_assert!(
                subspace_distance(&a, &c)
                    <= subspace_distance(&a, &b) + subspace_distance(&b, &c)
            );
        }

        #[test]
        fn the_two_distance_formulas_agree(a in arb_subspace(), b in arb_subspace()) {
            let via_meet = subspace_distance(&a, &b);
            let via_join = 2 * a.join(&b).dim() - a.dim() - b.dim();
            prop_assert_eq!(via_meet, via_join);
        }

        #[test]
        fn dual_set_preserves_distances(a in arb_subspace(), b in arb_subspace()) {
            let d = dual_set(&[a.clone(), b.clone()]);
            prop_assert_eq!(subspace_distance(&d[0], &d[1]), subspace_distance(&a, &b));
            let dd = dual_set(&d);
            prop_assert_eq!(dd, vec![a, b]);
        }
    }
}
