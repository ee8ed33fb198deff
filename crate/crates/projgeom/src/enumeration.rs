use gf2core::{GF2Matrix, Subspace};

/// Yields every k-dimensional subspace of F_2^v exactly once.
///
/// The order is fixed: pivot column sets run in colexicographic order, and
/// for each pivot set the free entries of the reduced echelon matrix are
/// counted upward in binary, with the entries read row-major and the last
/// one taken as the least significant digit. The stream is therefore fully
/// deterministic, which downstream pipelines rely on for reproducibility.
pub fn enumerate_grassmannian(v: usize, k: usize) -> impl Iterator<Item = Subspace> {
    assert!(v <= gf2core::MAX_POINT_AMBIENT);
    let pivot_sets = if k > v { vec![] } else { pivot_sets_colex(v, k) };
    pivot_sets.into_iter().flat_map(move |pivots| {
        let free = free_positions(v, &pivots);
        let count = 1u64 << free.len();
        (0..count).map(move |t| {
            let mut rows: Vec<u32> = pivots.iter().map(|&p| 1 << (v - p)).collect();
            for (idx, &(row, col)) in free.iter().enumerate() {
                if t >> (free.len() - 1 - idx) & 1 == 1 {
                    rows[row] |= 1 << (v - col);
                }
            }
            Subspace::span(&GF2Matrix::new(v, rows))
        })
    })
}

/// Yields every k-dimensional subspace of `u` exactly once, as subspaces of
/// the ambient space of `u`. Order is inherited from
/// [`enumerate_grassmannian`] on the internal coordinates of `u`.
pub fn subspaces_of(u: &Subspace, k: usize) -> impl Iterator<Item = Subspace> + '_ {
    let d = u.dim();
    let v = u.ambient();
    enumerate_grassmannian(d, k).map(move |w| {
        // Push the internal basis through u's echelon basis: the row vector
        // c maps to sum of c_i * (row i of the basis of u).
        let rows = w
            .basis()
            .row_words()
            .iter()
            .map(|&c| {
                let mut x = 0u32;
                for i in 0..d {
                    if c >> (d - 1 - i) & 1 == 1 {
                        x ^= u.basis().row_words()[i];
                    }
                }
                x
            })
            .collect();
        Subspace::span(&GF2Matrix::new(v, rows))
    })
}

/// All k-subsets of {1..v} in colexicographic order. A set precedes another
/// when the largest element where they differ belongs to the other, which is
/// the same as comparing the descending-sorted tuples lexicographically.
fn pivot_sets_colex(v: usize, k: usize) -> Vec<Vec<usize>> {
    let mut sets = vec![];
    let mut current = vec![0usize; k];
    fn rec(sets: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, depth: usize, max: usize) {
        if depth == 0 {
            sets.push(current.clone());
            return;
        }
        // Choose the largest remaining element last: iterate the top element
        // of the prefix from small to large.
        for top in depth..=max {
            current[depth - 1] = top;
            rec(sets, current, depth - 1, top - 1);
        }
    }
    rec(&mut sets, &mut current, k, v);
    sets
}

/// Row-major free entry positions of a reduced echelon matrix with the given
/// pivot columns: (row, col) with col right of the row's pivot and not a
/// pivot itself.
fn free_positions(v: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut free = vec![];
    for (row, &p) in pivots.iter().enumerate() {
        for col in p + 1..=v {
            if !pivots.contains(&col) {
                free.push((row, col));
            }
        }
    }
    free
}
