use gf2core::GF2Matrix;

/// A permutation of the nonzero points 1..2^v of F_2^v, stored as an image
/// table indexed by encoding minus one.
///
/// All permutations handled here come from invertible linear maps, with
/// vectors acting as rows: the image of x under the matrix M is x * M, and
/// the matrix rows are the images of the unit vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointPerm {
    v: usize,
    images: Vec<u32>,
}

impl PointPerm {
    pub fn identity(v: usize) -> PointPerm {
        PointPerm { v, images: (1..1 << v).collect() }
    }

    /// Builds from an image table; `images[p - 1]` is the image of point p.
    pub fn from_images(v: usize, images: Vec<u32>) -> PointPerm {
        assert_eq!(images.len(), (1 << v) - 1);
        debug_assert!({
            let mut seen = vec![false; images.len() + 1];
            images.iter().all(|&q| {
                let fresh = (1..=images.len() as u32).contains(&q) && !seen[q as usize];
                if fresh {
                    seen[q as usize] = true;
                }
                fresh
            })
        });
        PointPerm { v, images }
    }

    pub fn from_matrix(m: &GF2Matrix) -> PointPerm {
        let v = m.ncols();
        assert_eq!(m.nrows(), v, "need an invertible square matrix");
        let images = (1u32..1 << v)
            .map(|p| {
                let mut acc = 0;
                for i in 0..v {
                    if p & (1 << (v - 1 - i)) != 0 {
                        acc ^= m.row_words()[i];
                    }
                }
                acc
            })
            .collect();
        let perm = PointPerm::from_images(v, images);
        debug_assert!(perm.is_linear());
        perm
    }

    /// The matrix whose row i is the image of the unit vector e_(i+1).
    pub fn to_matrix(&self) -> GF2Matrix {
        let rows = (0..self.v).map(|i| self.apply(1 << (self.v - 1 - i))).collect();
        GF2Matrix::new(self.v, rows)
    }

    pub fn ambient(&self) -> usize {
        self.v
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, p: u32) -> u32 {
        self.images[p as usize - 1]
    }

    pub fn apply_mask(&self, mask: u128) -> u128 {
        let mut out = 0;
        for p in 1..=self.images.len() as u32 {
            if mask & (1 << (p - 1)) != 0 {
                out |= 1 << (self.apply(p) - 1);
            }
        }
        out
    }

    /// Composition acting right to left: `a.compose(&b)` applies b first.
    pub fn compose(&self, other: &PointPerm) -> PointPerm {
        assert_eq!(self.v, other.v);
        PointPerm {
            v: self.v,
            images: other.images.iter().map(|&q| self.apply(q)).collect(),
        }
    }

    pub fn inverse(&self) -> PointPerm {
        let mut images = vec![0; self.images.len()];
        for (i, &q) in self.images.iter().enumerate() {
            images[q as usize - 1] = i as u32 + 1;
        }
        PointPerm { v: self.v, images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &q)| q == i as u32 + 1)
    }

    /// Whether the permutation respects the additive structure, so that it
    /// comes from an invertible matrix.
    pub fn is_linear(&self) -> bool {
        let n = self.images.len() as u32;
        for p in 1..=n {
            for q in p + 1..=n {
                if self.apply(p) ^ self.apply(q) != self.apply(p ^ q) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shift(v: usize) -> PointPerm {
        // Companion-style map sending e_i to e_(i+1) and e_v to e_1 + e_2.
        let mut rows: Vec<u32> = (1..v).map(|i| 1 << (v - 1 - i)).collect();
        rows.push((1 << (v - 1)) | (1 << (v - 2)));
        PointPerm::from_matrix(&GF2Matrix::new(v, rows))
    }

    #[test]
    fn identity_and_inverse() {
        let id = PointPerm::identity(4);
        assert!(id.is_identity());
        let s = shift(4);
        assert!(!s.is_identity());
        assert!(s.compose(&s.inverse()).is_identity());
        assert!(s.inverse().compose(&s).is_identity());
    }

    #[test]
    fn matrix_roundtrip() {
        let s = shift(5);
        assert_eq!(PointPerm::from_matrix(&s.to_matrix()), s);
        assert!(s.is_linear());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = shift(4);
        let b = a.compose(&a);
        for p in 1..16 {
            assert_eq!(b.apply(p), a.apply(a.apply(p)));
        }
        // Matrix side: rows act as x * M, so composing permutations
        // multiplies the matrices in application order.
        assert_eq!(b.to_matrix(), a.to_matrix().mul(&a.to_matrix()));
    }

    #[test]
    fn mask_action_matches_pointwise_action() {
        let s = shift(4);
        let mask: u128 = 0b1010_1100_0110_001;
        let moved = s.apply_mask(mask);
        for p in 1u32..16 {
            assert_eq!(
                mask & (1 << (p - 1)) != 0,
                moved & (1 << (s.apply(p) - 1)) != 0
            );
        }
    }
}
