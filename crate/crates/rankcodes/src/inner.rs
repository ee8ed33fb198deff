use gf2core::GF2Matrix;
use isomorph::{canonicalize, AutomorphismGroup, ColoredConfiguration};

use crate::lift::lift;
use crate::{Error, RankCode};

/// An isometry of the rank metric that maps A to P·A·Q + R with invertible
/// P and Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerAut {
    p: GF2Matrix,
    q: GF2Matrix,
    r: GF2Matrix,
    p_inv: GF2Matrix,
}

impl InnerAut {
    /// Validates shapes against an m×n word format and the invertibility
    /// of P (m×m) and Q (n×n); R must be m×n.
    pub fn new(p: GF2Matrix, q: GF2Matrix, r: GF2Matrix) -> Result<Self, Error> {
        let rows = r.nrows();
        let cols = r.ncols();
        for (name, mat, want) in [('P', &p, rows), ('Q', &q, cols)] {
            if mat.nrows() != want || mat.ncols() != want {
                return Err(Error::AutShape {
                    name,
                    got_rows: mat.nrows(),
                    got_cols: mat.ncols(),
                    rows,
                    cols,
                });
            }
        }
        let p_inv = p.inverse().ok_or(Error::SingularAut { name: 'P' })?;
        if q.inverse().is_none() {
            return Err(Error::SingularAut { name: 'Q' });
        }
        Ok(InnerAut { p, q, r, p_inv })
    }

    /// The image P·A·Q + R of a word.
    pub fn apply(&self, a: &GF2Matrix) -> GF2Matrix {
        self.p.mul(a).mul(&self.q).xor(&self.r)
    }

    /// The matrix of the induced map on the lifted space, acting on row
    /// vectors: block upper triangular with P⁻¹ and P⁻¹R on top and Q at
    /// the bottom.  Applying it to the lift of A gives the lift of the
    /// image of A, and it maps the span of the last n unit vectors to
    /// itself.
    pub fn matrix(&self) -> GF2Matrix {
        let m = self.r.nrows();
        let n = self.r.ncols();
        let top_right = self.p_inv.mul(&self.r);
        let mut rows = Vec::with_capacity(m + n);
        for i in 0..m {
            rows.push(self.p_inv.row(i).bits() << n | top_right.row(i).bits());
        }
        for j in 0..n {
            rows.push(self.q.row(j).bits());
        }
        GF2Matrix::new(m + n, rows)
    }
}

/// The automorphism group of the lifted code, computed on its planes as a
/// subspace configuration.  For a maximum-rank-distance code with fewer
/// rows than columns, every symmetry of the lifted planes fixes the unique
/// n-space disjoint from all of them and is induced by an [`InnerAut`], so
/// the order of this group is the number of inner automorphisms.
pub fn inner_automorphism_group(c: &RankCode) -> Result<AutomorphismGroup, Error> {
    let planes = lift(c)?;
    let cfg = ColoredConfiguration::plain(7, &planes)?;
    Ok(canonicalize(&cfg).group)
}
