use gf2core::{GF2Matrix, Subspace};

use crate::PartialSpread;

/// Multiplication in F_16 = F_2[x] / (x^4 + x + 1), elements as 4-bit
/// integers with the constant term in the lowest bit.
pub(crate) fn f16_mul(a: u32, b: u32) -> u32 {
    let mut acc = 0;
    for t in 0..4 {
        if b & (1 << t) != 0 {
            acc ^= a << t;
        }
    }
    for bit in (4..8).rev() {
        if acc & (1 << bit) != 0 {
            acc ^= (1 << bit) | (0b11 << (bit - 4));
        }
    }
    acc
}

/// The classical size-16 spread obtained by lifting the multiplication
/// maps of F_16, truncated to three rows: block c is spanned by the rows
/// (e_i | c x^(i-1)) for i = 1, 2, 3. Its holes are exactly the nonzero
/// points of the solid spanned by the last four coordinates.
pub(crate) fn lifted_field_spread() -> PartialSpread {
    let blocks = (0..16)
        .map(|c| {
            let rows = (0..3).map(|i| (1 << (6 - i)) | f16_mul(c, 1 << i)).collect();
            Subspace::span(&GF2Matrix::new(7, rows))
        })
        .collect();
    PartialSpread::new(blocks).expect("field blocks are pairwise disjoint")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f16_multiplication_is_a_field() {
        for a in 1..16 {
            let row: std::collections::BTreeSet<u32> = (0..16).map(|b| f16_mul(a, b)).collect();
            assert_eq!(row.len(), 16, "multiplication by {a} must permute");
        }
        // x * x^3 = x^4 = x + 1.
        assert_eq!(f16_mul(2, 8), 3);
        for a in 0..16 {
            assert_eq!(f16_mul(a, 1), a);
        }
    }
}
