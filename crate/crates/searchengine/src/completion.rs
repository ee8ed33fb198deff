//! Completion of 16-block spreads with the seven-line hole star.
//!
//! A complete 16-block partial plane spread leaves 15 holes that form seven
//! concurrent lines whose directions are a projective basis.  Up to
//! isomorphism the hole set can be fixed as the unit points, their
//! complements, and the all-one point; the search then runs over spreads
//! avoiding that set.  A hyperplane with exactly three holes must contain
//! exactly three blocks, so those triples seed an exact cover over the
//! remaining 91 points.

use std::collections::{BTreeMap, HashMap};

use gf2core::{PointSet, Subspace};
use isomorph::{canonical_key, canonicalize, ColoredConfiguration, PointPerm};
use projgeom::{enumerate_grassmannian, subspaces_of, Geometry};
use spreadkit::PartialSpread;

use crate::cover::{solve_exact_cover, CoverInstance};
use crate::orbits::orbit_reps;
use crate::Error;

/// Three pairwise disjoint planes inside the distinguished hyperplane,
/// avoiding the hole set.  Exactly the blocks a completed spread places in
/// that hyperplane.
#[derive(Clone, Debug)]
pub struct StartTriple {
    planes: [Subspace; 3],
}

impl StartTriple {
    pub fn planes(&self) -> &[Subspace; 3] {
        &self.planes
    }

    fn union_mask(&self) -> u128 {
        self.planes.iter().map(|p| p.points().bits()).fold(0, |a, b| a | b)
    }
}

/// Representatives of the orbits on start configurations, one level per
/// blocks-placed count.
#[derive(Clone, Debug)]
pub struct StartingConfigurations {
    pub singles: Vec<Subspace>,
    pub pairs: Vec<[Subspace; 2]>,
    pub triples: Vec<StartTriple>,
}

/// The normalized 15-point hole set together with the first hyperplane
/// containing exactly three of its points.
pub fn seven_lines_frame(geo: &Geometry) -> (PointSet, Subspace) {
    let mut holes = PointSet::from_bits(0);
    holes.insert(127);
    for j in 0..7 {
        holes.insert(1 << j);
        holes.insert(127 ^ (1 << j));
    }
    let h = geo
        .hyperplanes()
        .iter()
        .find(|h| (h.points() & holes).len() == 3)
        .expect("seven of the 127 hyperplanes carry three holes")
        .clone();
    (holes, h)
}

fn check_frame(n_set: PointSet, h: &Subspace) -> Result<(), Error> {
    let geo = Geometry::new(7);
    let (expected, _) = seven_lines_frame(&geo);
    if n_set != expected {
        return Err(Error::WrongHoleSet);
    }
    if h.dim() != 6 || h.ambient() != 7 {
        return Err(Error::NotAHyperplane { got: h.dim() });
    }
    let inside = (h.points() & n_set).len();
    if inside != 3 {
        return Err(Error::WrongHyperplaneHoles { got: inside });
    }
    Ok(())
}

/// The seven hole lines plus the hyperplane, colored so that automorphisms
/// preserve the hole set and the hyperplane separately.
fn frame_configuration(n_set: PointSet, h: &Subspace) -> ColoredConfiguration {
    let mut words: Vec<(u32, Subspace)> = (0..7)
        .map(|j| {
            let mut line = PointSet::from_bits(0);
            line.insert(1 << j);
            line.insert(127 ^ (1 << j));
            line.insert(127);
            debug_assert!(line.is_subset(n_set));
            (0, Subspace::from_points(7, line))
        })
        .collect();
    words.push((1, h.clone()));
    ColoredConfiguration::new(7, words).expect("ambient 7")
}

/// Stabilizer generators of the hole set and hyperplane pair.
fn frame_stabilizer(n_set: PointSet, h: &Subspace) -> Vec<PointPerm> {
    canonicalize(&frame_configuration(n_set, h))
        .group
        .generators()
        .to_vec()
}

/// Classifies the ways to place one, two, or three disjoint blocks inside
/// `h` while avoiding `n_set`, up to the stabilizer of the frame.
///
/// Singles and pairs are reduced by direct orbit enumeration.  Triples are
/// generated over each pair representative, reduced under the pair
/// stabilizer, and deduplicated across pairs by canonical key, which keeps
/// the orbit walks small.  All three lists are sorted by point mask.
pub fn starting_configurations(
    n_set: PointSet,
    h: &Subspace,
) -> Result<StartingConfigurations, Error> {
    check_frame(n_set, h)?;
    let gens = frame_stabilizer(n_set, h);

    let cands: Vec<Subspace> = subspaces_of(h, 3)
        .filter(|p| p.points().is_disjoint(n_set))
        .collect();
    let cand_masks: Vec<u128> = cands.iter().map(|p| p.points().bits()).collect();
    let by_mask: HashMap<u128, usize> =
        cand_masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    let singles: Vec<Subspace> = orbit_reps(&cand_masks, &gens)
        .into_iter()
        .map(|m| cands[by_mask[&m]].clone())
        .collect();

    let mut pair_masks = Vec::new();
    let mut pair_origin: HashMap<u128, (usize, usize)> = HashMap::new();
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if cand_masks[i] & cand_masks[j] == 0 {
                let union = cand_masks[i] | cand_masks[j];
                pair_masks.push(union);
                pair_origin.entry(union).or_insert((i, j));
            }
        }
    }
    let pair_reps = orbit_reps(&pair_masks, &gens);
    let pairs: Vec<[Subspace; 2]> = pair_reps
        .iter()
        .map(|m| {
            let (i, j) = pair_origin[m];
            [cands[i].clone(), cands[j].clone()]
        })
        .collect();

    let mut by_key: BTreeMap<String, (u128, StartTriple)> = BTreeMap::new();
    for pair in &pairs {
        let pair_cfg = {
            let mut words: Vec<(u32, Subspace)> = frame_configuration(n_set, h).words().to_vec();
            words.push((2, pair[0].clone()));
            words.push((2, pair[1].clone()));
            ColoredConfiguration::new(7, words).expect("ambient 7")
        };
        let pair_gens = canonicalize(&pair_cfg).group.generators().to_vec();
        let pair_mask = pair[0].points().bits() | pair[1].points().bits();

        let ext_masks: Vec<u128> = cand_masks
            .iter()
            .copied()
            .filter(|m| m & pair_mask == 0)
            .collect();
        for z in orbit_reps(&ext_masks, &pair_gens) {
            let triple = StartTriple {
                planes: [pair[0].clone(), pair[1].clone(), cands[by_mask[&z]].clone()],
            };
            let mut words: Vec<(u32, Subspace)> = frame_configuration(n_set, h).words().to_vec();
            for p in triple.planes() {
                words.push((2, p.clone()));
            }
            let key = canonical_key(&ColoredConfiguration::new(7, words).expect("ambient 7"));
            let mask = triple.union_mask();
            match by_key.entry(key.as_str().to_string()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert((mask, triple));
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    if mask < e.get().0 {
                        e.insert((mask, triple));
                    }
                }
            }
        }
    }
    let mut triples: Vec<(u128, StartTriple)> = by_key.into_values().collect();
    triples.sort_by_key(|(m, _)| *m);

    Ok(StartingConfigurations {
        singles,
        pairs,
        triples: triples.into_iter().map(|(_, t)| t).collect(),
    })
}

/// Runs the exact cover completion for each start triple and calls `found`
/// with the start index and every resulting 16-block spread.  Each spread
/// consists of the triple plus 13 cover blocks and leaves exactly the
/// prescribed holes.
pub fn complete16_with_holeset(
    n_set: PointSet,
    h: &Subspace,
    starts: &[StartTriple],
    mut found: impl FnMut(usize, PartialSpread),
) -> Result<(), Error> {
    check_frame(n_set, h)?;
    let hole_free: Vec<Subspace> = enumerate_grassmannian(7, 3)
        .filter(|p| p.points().is_disjoint(n_set))
        .collect();

    for (idx, start) in starts.iter().enumerate() {
        for p in start.planes() {
            let ok = h.contains(p) && p.points().is_disjoint(n_set);
            if !ok {
                return Err(Error::BadStartTriple);
            }
        }
        let start_mask = start.union_mask();
        if start.planes()[0].points().bits() & start.planes()[1].points().bits() != 0
            || (start.planes()[0].points().bits() | start.planes()[1].points().bits())
                & start.planes()[2].points().bits()
                != 0
        {
            return Err(Error::BadStartTriple);
        }

        let universe = (PointSet::full(7) - n_set) - PointSet::from_bits(start_mask);
        let rows: Vec<Subspace> = hole_free
            .iter()
            .filter(|p| p.points().bits() & start_mask == 0)
            .cloned()
            .collect();
        let inst = CoverInstance::new(universe, rows.iter().map(|p| p.points()).collect())
            .expect("rows avoid the holes and the start");
        solve_exact_cover(&inst, |solution| {
            let mut blocks: Vec<Subspace> = start.planes().to_vec();
            blocks.extend(solution.iter().map(|&r| rows[r].clone()));
            let spread = PartialSpread::new(blocks).expect("cover rows are disjoint planes");
            debug_assert_eq!(spread.holes(), n_set);
            found(idx, spread);
        });
    }
    Ok(())
}
