//! Exact cover over point sets, solved with dancing links.
//!
//! Completing a partial spread to a prescribed hole set is an exact cover
//! problem: the universe is the set of points still to be covered and each
//! candidate block contributes one row.  The solver enumerates every
//! solution, so downstream counts are exact.

use gf2core::PointSet;

use crate::Error;

/// One exact cover instance: a universe of points and candidate rows, each a
/// nonempty subset of the universe.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    universe: PointSet,
    rows: Vec<PointSet>,
}

impl CoverInstance {
    pub fn new(universe: PointSet, rows: Vec<PointSet>) -> Result<Self, Error> {
        for (i, &row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::EmptyCoverRow { row: i });
            }
            if !row.is_subset(universe) {
                return Err(Error::CoverRowOutsideUniverse { row: i });
            }
        }
        Ok(CoverInstance { universe, rows })
    }

    pub fn universe(&self) -> PointSet {
        self.universe
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }
}

/// Doubly linked torus node.  Index 0 is the root; column headers follow in
/// ascending point order, then row nodes in input order.
#[derive(Clone, Copy)]
struct Node {
    left: usize,
    right: usize,
    up: usize,
    down: usize,
    col: usize,
    row: usize,
}

struct Torus {
    nodes: Vec<Node>,
    col_size: Vec<usize>,
    col_point: Vec<u32>,
}

impl Torus {
    fn build(inst: &CoverInstance) -> Torus {
        let points: Vec<u32> = inst.universe.iter().collect();
        let ncols = points.len();
        let mut nodes = Vec::with_capacity(1 + ncols + inst.rows.iter().map(|r| r.len()).sum::<usize>());

        // Root and column headers, linked left to right.
        for i in 0..=ncols {
            nodes.push(Node {
                left: if i == 0 { ncols } else { i - 1 },
                right: if i == ncols { 0 } else { i + 1 },
                up: i,
                down: i,
                col: i,
                row: usize::MAX,
            });
        }
        let mut col_of_point = std::collections::HashMap::new();
        for (i, &p) in points.iter().enumerate() {
            col_of_point.insert(p, i + 1);
        }

        let mut col_size = vec![0usize; ncols + 1];
        for (row_id, row) in inst.rows.iter().enumerate() {
            let first = nodes.len();
            for p in row.iter() {
                let c = col_of_point[&p];
                let id = nodes.len();
                let above = nodes[c].up;
                nodes.push(Node {
                    left: if id == first { id } else { id - 1 },
                    right: first,
                    up: above,
                    down: c,
                    col: c,
                    row: row_id,
                });
                nodes[above].down = id;
                nodes[c].up = id;
                if id > first {
                    nodes[id - 1].right = id;
                }
                col_size[c] += 1;
            }
            if nodes.len() > first {
                nodes[first].left = nodes.len() - 1;
            }
        }
        Torus {
            nodes,
            col_size,
            col_point: points,
        }
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.nodes[c].left, self.nodes[c].right);
        self.nodes[l].right = r;
        self.nodes[r].left = l;
        let mut i = self.nodes[c].down;
        while i != c {
            let mut j = self.nodes[i].right;
            while j != i {
                let (u, d) = (self.nodes[j].up, self.nodes[j].down);
                self.nodes[u].down = d;
                self.nodes[d].up = u;
                self.col_size[self.nodes[j].col] -= 1;
                j = self.nodes[j].right;
            }
            i = self.nodes[i].down;
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.nodes[c].up;
        while i != c {
            let mut j = self.nodes[i].left;
            while j != i {
                let (u, d) = (self.nodes[j].up, self.nodes[j].down);
                self.nodes[u].down = j;
                self.nodes[d].up = j;
                self.col_size[self.nodes[j].col] += 1;
                j = self.nodes[j].left;
            }
            i = self.nodes[i].up;
        }
        let (l, r) = (self.nodes[c].left, self.nodes[c].right);
        self.nodes[l].right = c;
        self.nodes[r].left = c;
    }

    /// Active column with the fewest rows; ties go to the lowest point
    /// encoding, which is the leftmost header.
    fn choose_column(&self) -> Option<usize> {
        let mut best = None;
        let mut c = self.nodes[0].right;
        while c != 0 {
            let size = self.col_size[c];
            if best.map_or(true, |(s, _)| size < s) {
                best = Some((size, c));
            }
            c = self.nodes[c].right;
        }
        best.map(|(_, c)| c)
    }

    fn search(&mut self, partial: &mut Vec<usize>, found: &mut impl FnMut(&[usize])) {
        let c = match self.choose_column() {
            None => {
                let mut solution = partial.clone();
                solution.sort_unstable();
                found(&solution);
                return;
            }
            Some(c) => c,
        };
        if self.col_size[c] == 0 {
            return;
        }
        self.cover(c);
        let mut r = self.nodes[c].down;
        while r != c {
            partial.push(self.nodes[r].row);
            let mut j = self.nodes[r].right;
            while j != r {
                self.cover(self.nodes[j].col);
                j = self.nodes[j].right;
            }
            self.search(partial, found);
            let mut j = self.nodes[r].left;
            while j != r {
                self.uncover(self.nodes[j].col);
                j = self.nodes[j].left;
            }
            partial.pop();
            r = self.nodes[r].down;
        }
        self.uncover(c);
    }
}

/// Calls `found` with the ascending row indices of every exact cover of the
/// instance.  An empty universe yields the single empty solution.
pub fn solve_exact_cover(inst: &CoverInstance, mut found: impl FnMut(&[usize])) {
    let mut torus = Torus::build(inst);
    debug_assert_eq!(torus.col_point.len() + 1 + inst.rows.iter().map(|r| r.len()).sum::<usize>(), torus.nodes.len());
    let mut partial = Vec::new();
    torus.search(&mut partial, &mut found);
}
