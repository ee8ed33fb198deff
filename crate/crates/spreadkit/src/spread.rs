use gf2core::{PointSet, Subspace};

use crate::Error;

/// A set of pairwise disjoint planes in PG(6,2), together with the derived
/// hole data: the uncovered points and their span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSpread {
    blocks: Vec<Subspace>,
    covered: PointSet,
    holes: PointSet,
    hole_space: Subspace,
}

impl PartialSpread {
    /// Validates that every block is a plane of PG(6,2) and that no two
    /// blocks share a point.
    pub fn new(blocks: Vec<Subspace>) -> Result<Self, Error> {
        let mut covered = PointSet::EMPTY;
        for (index, b) in blocks.iter().enumerate() {
            if b.ambient() != 7 {
                return Err(Error::WrongAmbient { index, got: b.ambient() });
            }
            if b.dim() != 3 {
                return Err(Error::NotAPlane { index, got: b.dim() });
            }
            if !(covered & b.points()).is_empty() {
                let j = index;
                let i = blocks[..index]
                    .iter()
                    .position(|a| !(a.points() & b.points()).is_empty())
                    .expect("some earlier block overlaps");
                return Err(Error::OverlappingBlocks { i, j });
            }
            covered = covered | b.points();
        }
        let holes = PointSet::full(7) - covered;
        let hole_space = Subspace::from_points(7, holes);
        Ok(PartialSpread { blocks, covered, holes, hole_space })
    }

    pub fn blocks(&self) -> &[Subspace] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn covered(&self) -> PointSet {
        self.covered
    }

    /// The points of PG(6,2) not covered by any block.
    pub fn holes(&self) -> PointSet {
        self.holes
    }

    /// The span of the hole set.
    pub fn hole_space(&self) -> &Subspace {
        &self.hole_space
    }

    /// How many holes lie inside the given subspace.
    pub fn hole_multiplicity(&self, t: &Subspace) -> usize {
        (self.holes & t.points()).len()
    }

    /// All lines entirely contained in the hole set, as encoding triples
    /// p < q < r with p ^ q = r.
    pub(crate) fn hole_lines(&self) -> Vec<[u32; 3]> {
        let pts: Vec<u32> = self.holes.iter().collect();
        let mut lines = Vec::new();
        for (a, &p) in pts.iter().enumerate() {
            for &q in &pts[a + 1..] {
                let r = p ^ q;
                if r > q && self.holes.contains(r) {
                    lines.push([p, q, r]);
                }
            }
        }
        lines
    }

    /// All planes entirely contained in the hole set. Adding any one of them
    /// as a block keeps the spread property, and every admissible extension
    /// block arises this way.
    pub fn free_planes(&self) -> Vec<Subspace> {
        let mut masks = std::collections::BTreeSet::new();
        for [p, q, r] in self.hole_lines() {
            for h in self.holes.iter() {
                if h == p || h == q || h == r {
                    continue;
                }
                let closure = [p, q, r, h, p ^ h, q ^ h, r ^ h];
                if closure.iter().all(|&x| self.holes.contains(x)) {
                    masks.insert(closure.iter().fold(PointSet::EMPTY, |s, &x| {
                        s | PointSet::singleton(x)
                    }));
                }
            }
        }
        masks
            .into_iter()
            .map(|m| Subspace::from_points(7, m))
            .collect()
    }

    /// A spread is complete when no plane fits inside the hole set.
    pub fn is_complete(&self) -> bool {
        self.free_planes().is_empty()
    }
}
