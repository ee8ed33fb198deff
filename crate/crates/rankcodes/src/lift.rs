use gf2core::{GF2Matrix, Subspace};
use spreadkit::PartialSpread;

use crate::{Error, RankCode};

/// Lifts every word A of an m×n code to the row space of (I | A) in the
/// 7-dimensional space, in word order.  Distances double: two words at
/// rank distance d lift to subspaces at subspace distance 2d.  Every
/// lifted subspace is disjoint from the span of the last n unit vectors.
pub fn lift(c: &RankCode) -> Result<Vec<Subspace>, Error> {
    let m = c.nrows();
    let n = c.ncols();
    if m + n != 7 {
        return Err(Error::LiftAmbient { rows: m, cols: n });
    }
    Ok(c.words()
        .iter()
        .map(|word| {
            let rows: Vec<u32> = (0..m)
                .map(|i| 1 << (6 - i) | word.row(i).bits())
                .collect();
            Subspace::span(&GF2Matrix::new(7, rows))
        })
        .collect())
}

/// Inverts the lift against a distinguished subspace `s`: changes basis so
/// that `s` becomes the span of the last unit vectors, upon which each
/// block reduces to the row space of some (I | A), and collects the A's.
/// Every block must have the complementary dimension and meet `s` only in
/// zero.
pub fn unlift(blocks: &[Subspace], s: &Subspace) -> Result<RankCode, Error> {
    let v = s.ambient();
    let n = s.dim();
    let m = v - n;
    for (index, b) in blocks.iter().enumerate() {
        if b.ambient() != v || b.dim() != m {
            return Err(Error::BlockDim {
                index,
                got: b.dim(),
                expected: m,
            });
        }
        if !b.is_disjoint(s) {
            return Err(Error::BlockMeetsTarget { index });
        }
    }

    // Rows of the basis change: a complement of s first, then s itself, so
    // that right multiplication by the inverse sends s to the span of the
    // last n unit vectors.
    let mut extended = s.clone();
    let mut complement = Vec::with_capacity(m);
    for j in 0..v {
        let x = gf2core::GF2Vector::unit(v, j + 1);
        if !extended.member(x) {
            complement.push(x.bits());
            extended = extended.join(&Subspace::point(x));
        }
    }
    debug_assert_eq!(complement.len(), m);
    let mut basis_rows = complement;
    basis_rows.extend(s.basis().row_words().iter().copied());
    let to_standard = GF2Matrix::new(v, basis_rows).inverse().unwrap();

    let words = blocks
        .iter()
        .map(|b| {
            let moved = Subspace::span(&b.basis().mul(&to_standard));
            let rows: Vec<u32> = (0..m)
                .map(|i| {
                    let row = moved.basis().row(i).bits();
                    debug_assert_eq!(row >> n, 1 << (m - 1 - i), "reduced block must start with I");
                    row & ((1 << n) - 1)
                })
                .collect();
            GF2Matrix::new(n, rows)
        })
        .collect();
    RankCode::new(m, n, words)
}

/// Reads a 16-block spread whose holes fill a solid as a 3×4 rank-metric
/// code: the blocks together with the hole solid partition the point set,
/// and unlifting the blocks against that solid recovers the code.
pub fn mrd_from_spread(s: &PartialSpread) -> Result<RankCode, Error> {
    if s.len() != 16 {
        return Err(Error::WrongSpreadSize { got: s.len() });
    }
    if s.hole_space().dim() != 4 {
        return Err(Error::HoleSpanDim {
            got: s.hole_space().dim(),
        });
    }
    unlift(s.blocks(), s.hole_space())
}
