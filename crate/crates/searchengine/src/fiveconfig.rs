//! Classification of five-block seeds and their extension to 17-spreads.
//!
//! Every 17-block partial plane spread of `PG(6,2)` has two hyperplanes
//! that each contain three of its blocks with one block in common, because
//! the hyperplane hole counts force the block distribution.  Fixing one
//! block and the two hyperplanes therefore loses no isomorphism classes,
//! and the five blocks involved fall into finitely many classes that seed
//! the whole search.

use std::collections::{BTreeMap, HashMap};

use gf2core::{GF2Matrix, Subspace};
use isomorph::{canonical_key, canonicalize, CanonicalKey, ColoredConfiguration};
use projgeom::{subspaces_of, Geometry};
use spreadkit::PartialSpread;

use crate::orbits::orbit_reps;
use crate::packing::pack_disjoint_planes_affine;
use crate::Error;

/// Five pairwise disjoint planes together with two distinct hyperplanes,
/// each containing three of the planes and sharing exactly one of them.
#[derive(Clone, Debug)]
pub struct FiveConfiguration {
    blocks: [Subspace; 5],
    h1: Subspace,
    h2: Subspace,
}

impl FiveConfiguration {
    pub fn new(blocks: [Subspace; 5], h1: Subspace, h2: Subspace) -> Result<Self, Error> {
        PartialSpread::new(blocks.to_vec())?;
        for h in [&h1, &h2] {
            if h.dim() != 6 || h.ambient() != 7 {
                return Err(Error::NotAHyperplane { got: h.dim() });
            }
        }
        if h1 == h2 {
            return Err(Error::HyperplanesEqual);
        }
        let w = h1.meet(&h2);
        let inner1 = blocks.iter().filter(|b| h1.contains(b)).count();
        let inner2 = blocks.iter().filter(|b| h2.contains(b)).count();
        let common = blocks.iter().filter(|b| w.contains(b)).count();
        if inner1 != 3 || inner2 != 3 || common != 1 {
            return Err(Error::BlockSplit {
                inner1,
                inner2,
                common,
            });
        }
        Ok(FiveConfiguration { blocks, h1, h2 })
    }

    pub fn blocks(&self) -> &[Subspace; 5] {
        &self.blocks
    }

    pub fn hyperplanes(&self) -> (&Subspace, &Subspace) {
        (&self.h1, &self.h2)
    }

    pub fn spread(&self) -> PartialSpread {
        PartialSpread::new(self.blocks.to_vec()).expect("validated at construction")
    }

    /// Key of the bare five-block set.  The hyperplanes are determined by
    /// the blocks up to relabeling, so they carry no extra color.
    pub fn canonical_key(&self) -> CanonicalKey {
        let cfg = ColoredConfiguration::plain(7, &self.blocks).expect("ambient 7");
        canonical_key(&cfg)
    }
}

fn unit_span(v: usize, rows: &[u32]) -> Subspace {
    Subspace::span(&GF2Matrix::new(v, rows.to_vec()))
}

/// All unordered pairs of disjoint members of `cands`, as union masks with
/// the contributing indices.  Two disjoint planes cannot share a union with
/// any other plane pair, so the mask identifies the pair.
fn disjoint_pair_masks(cands: &[Subspace]) -> (Vec<u128>, HashMap<u128, (usize, usize)>) {
    let masks: Vec<u128> = cands.iter().map(|c| c.points().bits()).collect();
    let mut pairs = Vec::new();
    let mut origin = HashMap::new();
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if masks[i] & masks[j] == 0 {
                let union = masks[i] | masks[j];
                pairs.push(union);
                origin.entry(union).or_insert((i, j));
            }
        }
    }
    (pairs, origin)
}

/// Classifies the five-block seeds up to linear isomorphism.
///
/// The base block `⟨e1,e2,e3⟩` and the hyperplanes `x7 = 0` and `x6 = 0`
/// are fixed; any other choice is equivalent under `GL(7,2)`.  Disjoint
/// plane pairs inside the first hyperplane are reduced to orbit
/// representatives under the stabilizer of the fixed triple, partner pairs
/// inside the second hyperplane under the per-representative stabilizer,
/// and the assembled configurations are deduplicated by canonical key.
/// Results are sorted by key.
pub fn classify_five_configurations() -> Vec<FiveConfiguration> {
    let geo = Geometry::new(7);
    let b = unit_span(7, &[64, 32, 16]);
    let h1 = geo.hyperplanes()[0].clone();
    let h2 = geo.hyperplanes()[1].clone();
    debug_assert!(h1.contains(&b) && h2.contains(&b));

    let cand1: Vec<Subspace> = subspaces_of(&h1, 3).filter(|p| p.is_disjoint(&b)).collect();
    let cand2: Vec<Subspace> = subspaces_of(&h2, 3).filter(|p| p.is_disjoint(&b)).collect();

    let frame = ColoredConfiguration::new(
        7,
        vec![(0, b.clone()), (1, h1.clone()), (2, h2.clone())],
    )
    .expect("ambient 7");
    let stab = canonicalize(&frame).group;

    let (pairs1, origin1) = disjoint_pair_masks(&cand1);
    let reps1 = orbit_reps(&pairs1, stab.generators());

    let mut classes: BTreeMap<String, FiveConfiguration> = BTreeMap::new();
    for rep1 in reps1 {
        let (i, j) = origin1[&rep1];
        let (x, y) = (cand1[i].clone(), cand1[j].clone());

        let seeded = ColoredConfiguration::new(
            7,
            vec![
                (0, b.clone()),
                (1, h1.clone()),
                (2, h2.clone()),
                (3, x.clone()),
                (3, y.clone()),
            ],
        )
        .expect("ambient 7");
        let stab_xy = canonicalize(&seeded).group;

        let cand2f: Vec<Subspace> = cand2
            .iter()
            .filter(|c| c.is_disjoint(&x) && c.is_disjoint(&y))
            .cloned()
            .collect();
        let (pairs2, origin2) = disjoint_pair_masks(&cand2f);
        let reps2 = orbit_reps(&pairs2, stab_xy.generators());

        for rep2 in reps2 {
            let (k, l) = origin2[&rep2];
            let fc = FiveConfiguration::new(
                [
                    b.clone(),
                    x.clone(),
                    y.clone(),
                    cand2f[k].clone(),
                    cand2f[l].clone(),
                ],
                h1.clone(),
                h2.clone(),
            )
            .expect("construction satisfies the containment counts");
            classes
                .entry(fc.canonical_key().as_str().to_string())
                .or_insert(fc);
        }
    }
    classes.into_values().collect()
}

/// Calls `found` with every extension of the seed to a 17-block partial
/// spread: 12 pairwise disjoint free planes added to the five seed blocks,
/// leaving 8 holes.
///
/// The extensions are the 12-cliques of the disjointness graph on free
/// planes, but they are enumerated as packings of the 92-point hole set
/// with an 8-point leftover, which prunes far harder than clique search
/// because every point pins down the planes that may cover it.  The 8
/// holes of any 17-block partial plane spread form an affine solid, so
/// the affine packing variant applies and pins the whole leftover down
/// after at most four hole decisions.
pub fn extend_to_17(fc: &FiveConfiguration, mut found: impl FnMut(PartialSpread)) {
    let seed = fc.spread();
    let candidates = seed.free_planes();
    let mut blocks: Vec<Subspace> = fc.blocks().to_vec();
    pack_disjoint_planes_affine(seed.holes(), &candidates, 12, 8, |packed| {
        blocks.truncate(5);
        blocks.extend(packed.iter().map(|&i| candidates[i].clone()));
        let spread = PartialSpread::new(blocks.clone()).expect("packed planes stay disjoint");
        found(spread);
    });
}
