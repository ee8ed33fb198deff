//! Packing of pairwise disjoint planes with a bounded leftover.
//!
//! Extending a partial spread by k planes means packing k disjoint planes
//! into its hole set so that a fixed number of points stays uncovered.
//! Branching on a point, not a plane, keeps the tree small: every point of
//! the universe is either covered by exactly one chosen plane or ends up in
//! the leftover, so fixing the fate of one point at a time visits each
//! solution along exactly one path.
//!
//! Three measures keep the search tight.  The most constrained point is
//! decided first.  Points with no remaining candidate are forced into the
//! leftover as a batch, and the branch dies as soon as they outnumber the
//! remaining budget.  When few candidates survive, the instance is
//! re-indexed so the bit sets shrink with it.
//!
//! A fourth measure applies when the caller knows every solution's
//! leftover to be a coset of a linear subspace, as the hole set of a
//! full-size spread always is: the affine closure of the designated
//! leftover points is forced into the leftover too, so a handful of
//! decisions pins down the entire leftover and the rest of the search
//! reduces to an exact cover.

use gf2core::{PointSet, Subspace};

use crate::bitset::IndexSet;

/// Calls `found` for every way to choose `count` pairwise disjoint planes
/// from `candidates` covering all but exactly `leftover` points of
/// `universe`.  Candidates must lie inside the universe, which must hold
/// exactly `7 * count + leftover` points.  Solutions stream as ascending
/// candidate index lists.
pub fn pack_disjoint_planes(
    universe: PointSet,
    candidates: &[Subspace],
    count: usize,
    leftover: usize,
    found: impl FnMut(&[usize]),
) {
    pack(false, universe, candidates, count, leftover, found);
}

/// [`pack_disjoint_planes`] for searches whose leftovers are known to form
/// affine subspaces, that is, cosets of linear subspaces not containing
/// zero.  Sound only under that guarantee; in exchange, every designated
/// leftover point immediately forces its affine closure with the others.
pub fn pack_disjoint_planes_affine(
    universe: PointSet,
    candidates: &[Subspace],
    count: usize,
    leftover: usize,
    found: impl FnMut(&[usize]),
) {
    pack(true, universe, candidates, count, leftover, found);
}

fn pack(
    affine: bool,
    universe: PointSet,
    candidates: &[Subspace],
    count: usize,
    leftover: usize,
    mut found: impl FnMut(&[usize]),
) {
    debug_assert!(candidates.iter().all(|c| c.points().is_subset(universe)));
    debug_assert_eq!(universe.len(), 7 * count + leftover, "sizes must balance");

    let masks: Vec<u128> = candidates.iter().map(|c| c.points().bits()).collect();
    let layer = Layer::build(&masks, affine);
    let active = IndexSet::full(masks.len());
    let mut chosen = Vec::with_capacity(count);
    layer.step(
        universe.bits(),
        leftover,
        count,
        0,
        &active,
        &mut chosen,
        &mut |sol| {
            let mut solution = sol.to_vec();
            solution.sort_unstable();
            found(&solution);
        },
    );
}

/// The smallest affine subspace containing all points of `mask`: the coset
/// of the linear span of the differences through the first point.  `None`
/// when that coset would contain the zero vector and therefore is not a
/// set of projective points.
fn affine_closure(mask: u128) -> Option<u128> {
    debug_assert_ne!(mask, 0);
    let anchor = mask.trailing_zeros() + 1;
    let mut diffs: Vec<u32> = vec![0];
    let mut have: u128 = 1;
    let mut rest = mask;
    while rest != 0 {
        let p = rest.trailing_zeros() + 1;
        rest &= rest - 1;
        let d = p ^ anchor;
        if have >> d & 1 == 0 {
            let doubled: Vec<u32> = diffs.iter().map(|&x| x ^ d).collect();
            for &x in &doubled {
                have |= 1u128 << x;
            }
            diffs.extend(doubled);
        }
    }
    if have >> anchor & 1 == 1 {
        return None;
    }
    let mut out = 0u128;
    for &x in &diffs {
        out |= 1u128 << ((x ^ anchor) - 1);
    }
    Some(out)
}

/// One re-indexing layer: candidate masks plus, per point, the candidates
/// through it.  Indices are local to the layer.
struct Layer {
    masks: Vec<u128>,
    through: Vec<IndexSet>,
    affine: bool,
}

impl Layer {
    fn build(masks: &[u128], affine: bool) -> Layer {
        let mut through = vec![IndexSet::empty(masks.len()); 128];
        for (i, &m) in masks.iter().enumerate() {
            for p in PointSet::from_bits(m).iter() {
                through[p as usize].insert(i);
            }
        }
        Layer {
            masks: masks.to_vec(),
            through,
            affine,
        }
    }

    /// Designates the points of `fresh` as leftover.  In affine mode the
    /// closure of all designated points joins them.  `None` kills the
    /// branch: the budget ran out, or a closure point is already covered.
    fn absorb(
        &self,
        mut uncovered: u128,
        mut budget: usize,
        holes: u128,
        fresh: u128,
    ) -> Option<(u128, usize, u128)> {
        debug_assert_eq!(fresh & !uncovered, 0);
        let nfresh = fresh.count_ones() as usize;
        if nfresh > budget {
            return None;
        }
        budget -= nfresh;
        uncovered &= !fresh;
        let mut all = holes | fresh;
        if self.affine {
            let closure = affine_closure(all)?;
            let extra = closure & !all;
            if extra & !uncovered != 0 {
                return None;
            }
            let nextra = extra.count_ones() as usize;
            if nextra > budget {
                return None;
            }
            budget -= nextra;
            uncovered &= !extra;
            all = closure;
        }
        Some((uncovered, budget, all))
    }

    /// `budget` is the number of points that may still join the leftover,
    /// `remaining` the number of planes still to place, `holes` the points
    /// already designated as leftover.  `chosen` collects indices
    /// translated to the outermost layer by the callback chain.
    #[allow(clippy::too_many_arguments)]
    fn step(
        &self,
        uncovered: u128,
        budget: usize,
        remaining: usize,
        holes: u128,
        active: &IndexSet,
        chosen: &mut Vec<usize>,
        found: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            debug_assert_eq!(uncovered.count_ones() as usize, budget);
            debug_assert!(
                !self.affine || affine_closure(holes | uncovered) == Some(holes | uncovered),
                "affine mode applied to a search with a non-affine leftover"
            );
            found(chosen);
            return;
        }
        if active.len() < remaining {
            return;
        }

        // One pass over the undecided points: count options, collect the
        // points nobody can cover, and remember the tightest point.
        let mut forced: u128 = 0;
        let mut best: Option<(usize, u32)> = None;
        let mut rest = uncovered;
        while rest != 0 {
            let p = rest.trailing_zeros() + 1;
            rest &= rest - 1;
            let n = self.through[p as usize].intersection_len(active);
            if n == 0 {
                forced |= 1u128 << (p - 1);
            } else if best.map_or(true, |(b, _)| n < b) {
                best = Some((n, p));
            }
        }

        if forced != 0 {
            // Uncoverable points must all join the leftover.
            self.hole_step(
                uncovered, budget, remaining, holes, forced, active, chosen, found,
            );
            return;
        }

        // Shrink the index space once most candidates are gone.
        if active.len() * 4 <= self.masks.len() && active.len() >= 64 {
            let map: Vec<usize> = active.iter().collect();
            let inner_masks: Vec<u128> = map.iter().map(|&i| self.masks[i]).collect();
            let inner = Layer::build(&inner_masks, self.affine);
            let inner_active = IndexSet::full(inner_masks.len());
            let mut inner_chosen = Vec::with_capacity(remaining);
            let base = chosen.clone();
            inner.step(
                uncovered,
                budget,
                remaining,
                holes,
                &inner_active,
                &mut inner_chosen,
                &mut |inner_sol| {
                    let mut full = base.clone();
                    full.extend(inner_sol.iter().map(|&i| map[i]));
                    found(&full);
                },
            );
            return;
        }

        let (_, p) = best.expect("no forced points and remaining > 0");
        let mut options = self.through[p as usize].clone();
        options.intersect_with(active);
        for i in options.iter() {
            let mask = self.masks[i];
            let mut narrowed = active.clone();
            for q in PointSet::from_bits(mask).iter() {
                narrowed.intersect_complement_with(&self.through[q as usize]);
            }
            chosen.push(i);
            self.step(
                uncovered & !mask,
                budget,
                remaining - 1,
                holes,
                &narrowed,
                chosen,
                found,
            );
            chosen.pop();
        }

        if budget > 0 {
            self.hole_step(
                uncovered,
                budget,
                remaining,
                holes,
                1u128 << (p - 1),
                active,
                chosen,
                found,
            );
        }
    }

    /// Designates `fresh` as leftover via [`Layer::absorb`], drops the
    /// candidates through any newly designated point, and continues.
    #[allow(clippy::too_many_arguments)]
    fn hole_step(
        &self,
        uncovered: u128,
        budget: usize,
        remaining: usize,
        holes: u128,
        fresh: u128,
        active: &IndexSet,
        chosen: &mut Vec<usize>,
        found: &mut dyn FnMut(&[usize]),
    ) {
        let Some((next_uncovered, next_budget, next_holes)) =
            self.absorb(uncovered, budget, holes, fresh)
        else {
            return;
        };
        let mut narrowed = active.clone();
        let mut gone = uncovered & !next_uncovered;
        while gone != 0 {
            let q = gone.trailing_zeros() + 1;
            gone &= gone - 1;
            narrowed.intersect_complement_with(&self.through[q as usize]);
        }
        self.step(
            next_uncovered,
            next_budget,
            remaining,
            next_holes,
            &narrowed,
            chosen,
            found,
        );
    }
}
