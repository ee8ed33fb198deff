use std::fmt;

use crate::GF2Vector;

/// A matrix over GF(2) with up to [`crate::MAX_AMBIENT`] columns, stored as
/// one row word per row.
///
/// The column encoding is the one of [`GF2Vector`]: column j corresponds to
/// the bit of value 2^(ncols - j).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Matrix {
    rows: Vec<u32>,
    ncols: u8,
}

impl GF2Matrix {
    /// Builds a matrix from raw row words. Panics if a row has a bit beyond
    /// `ncols`.
    pub fn new(ncols: usize, rows: Vec<u32>) -> Self {
        assert!(ncols <= crate::MAX_AMBIENT, "ambient dimension {ncols} too large");
        for &r in &rows {
            assert!(r < 1u32 << ncols, "row {r:#b} does not fit in {ncols} columns");
        }
        GF2Matrix { rows, ncols: ncols as u8 }
    }

    pub fn from_rows(ncols: usize, rows: &[GF2Vector]) -> Self {
        for r in rows {
            assert_eq!(r.ambient(), ncols, "row width mismatch");
        }
        Self::new(ncols, rows.iter().map(|r| r.bits()).collect())
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Self::new(ncols, vec![0; nrows])
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| 1 << (n - 1 - i)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols as usize
    }

    pub fn row(&self, i: usize) -> GF2Vector {
        GF2Vector::new(self.rows[i], self.ncols())
    }

    pub fn row_words(&self) -> &[u32] {
        &self.rows
    }

    /// Entry at row i (0-based), column j (1-based).
    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.row(i).coord(j)
    }

    /// The unique reduced row echelon form of the row space, zero rows
    /// removed. Pivots run strictly left to right, so the resulting rows are
    /// in strictly decreasing numeric order.
    pub fn rref(&self) -> GF2Matrix {
        let v = self.ncols();
        let mut rows: Vec<u32> = self.rows.iter().copied().filter(|&r| r != 0).collect();
        let mut next = 0;
        for col in 0..v {
            let mask = 1u32 << (v - 1 - col);
            let Some(i) = (next..rows.len()).find(|&i| rows[i] & mask != 0) else {
                continue;
            };
            rows.swap(next, i);
            let pivot = rows[next];
            for (k, r) in rows.iter_mut().enumerate() {
                if k != next && *r & mask != 0 {
                    *r ^= pivot;
                }
            }
            next += 1;
        }
        // Every remaining row was eliminated against all pivots and owns
        // none, so it is zero by now.
        rows.truncate(next);
        GF2Matrix { rows, ncols: self.ncols }
    }

    pub fn rank(&self) -> usize {
        self.rref().nrows()
    }

    /// Entrywise sum, which over GF(2) is also the entrywise difference.
    pub fn xor(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.ncols, other.ncols, "shape mismatch");
        assert_eq!(self.nrows(), other.nrows(), "shape mismatch");
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a ^ b).collect();
        GF2Matrix { rows, ncols: self.ncols }
    }

    /// Matrix product; `self` is a×b, `rhs` is b×c.
    pub fn mul(&self, rhs: &GF2Matrix) -> GF2Matrix {
        let b = self.ncols();
        assert_eq!(b, rhs.nrows(), "inner dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0;
                for j in 0..b {
                    if r & (1 << (b - 1 - j)) != 0 {
                        acc ^= rhs.rows[j];
                    }
                }
                acc
            })
            .collect();
        GF2Matrix { rows, ncols: rhs.ncols }
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<GF2Matrix> {
        let n = self.nrows();
        assert_eq!(n, self.ncols(), "inverse of a non-square matrix");
        // Gauss-Jordan on (self | I), tracking the right half separately.
        let mut left = self.rows.clone();
        let mut right: Vec<u32> = (0..n).map(|i| 1 << (n - 1 - i)).collect();
        for col in 0..n {
            let mask = 1u32 << (n - 1 - col);
            let i = (col..n).find(|&i| left[i] & mask != 0)?;
            left.swap(col, i);
            right.swap(col, i);
            for k in 0..n {
                if k != col && left[k] & mask != 0 {
                    left[k] ^= left[col];
                    right[k] ^= right[col];
                }
            }
        }
        Some(GF2Matrix { rows: right, ncols: self.ncols })
    }

    /// A basis (in reduced echelon form) of the kernel {x : self · xᵀ = 0}.
    pub fn kernel(&self) -> GF2Matrix {
        let v = self.ncols();
        let reduced = self.rref();
        let pivots: Vec<usize> = (0..reduced.nrows())
            .map(|i| reduced.row(i).leading_coord().expect("echelon rows are nonzero"))
            .collect();
        let mut rows = Vec::with_capacity(v - pivots.len());
        for j in 1..=v {
            if pivots.contains(&j) {
                continue;
            }
            // Free column j: set x_j = 1 and solve for the pivot coordinates.
            let mut x = GF2Vector::unit(v, j);
            for (i, &p) in pivots.iter().enumerate() {
                if reduced.entry(i, j) {
                    x = x ^ GF2Vector::unit(v, p);
                }
            }
            rows.push(x.bits());
        }
        GF2Matrix { rows, ncols: self.ncols }.rref()
    }
}

// A matrix debug-prints as one bit string per row, e.g. [1000110, 0101001].
impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.nrows() {
            list.entry(&self.row(i));
        }
        list.finish()
    }
}
