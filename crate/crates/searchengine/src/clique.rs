//! Exact fixed-size clique enumeration over compatibility graphs.
//!
//! The construction pipelines reduce "extend this partial object by k more
//! members" to listing every k-clique of a graph whose vertices are
//! candidate subspaces and whose edges mark admissible pairs.  Enumeration
//! must be exhaustive and deterministic; a missed clique is a missed
//! isomorphism class downstream.
//!
//! The search works on a flat bit matrix.  Whenever a candidate set drops
//! to a quarter of the current vertex count, the subgraph is re-indexed so
//! that all later set operations run on proportionally narrow words; at
//! production sizes this trims most of the running time.

use gf2core::Subspace;

/// Undirected graph on candidate subspaces with bit-matrix adjacency.
///
/// Vertices are reordered by descending degree when the graph is built, so
/// that branching on low indices first shrinks candidate sets quickly.  The
/// order is fixed from then on; `vertices()` reflects it.
#[derive(Clone, Debug)]
pub struct CompatGraph {
    vertices: Vec<Subspace>,
    core: Core,
}

impl CompatGraph {
    /// Builds the graph over `vertices`, joining `i` and `j` when
    /// `compatible(i, j)` holds.  The rule sees indices into the given order
    /// and is only consulted for `i < j`; loops are never created.
    pub fn new(vertices: Vec<Subspace>, mut compatible: impl FnMut(usize, usize) -> bool) -> Self {
        let n = vertices.len();
        let mut degree = vec![0usize; n];
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if compatible(i, j) {
                    degree[i] += 1;
                    degree[j] += 1;
                    edges.push((i, j));
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(degree[i]), i));
        let mut rank = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }

        let mut core = Core::empty(n);
        for (i, j) in edges {
            core.connect(rank[i], rank[j]);
        }
        let vertices = order.into_iter().map(|old| vertices[old].clone()).collect();
        CompatGraph { vertices, core }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in branching order.  Clique members reported by
    /// [`enumerate_cliques`] index into this slice.
    pub fn vertices(&self) -> &[Subspace] {
        &self.vertices
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.core.row(i)[j / 64] >> (j % 64) & 1 == 1
    }
}

/// Adjacency as a flat row-major bit matrix, `words` u64 words per row.
#[derive(Clone, Debug)]
struct Core {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Core {
    fn empty(n: usize) -> Core {
        let words = n.div_ceil(64).max(1);
        Core {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn connect(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Subgraph on `map`, with vertex `k` standing for `map[k]`.  Relative
    /// order is preserved.
    fn induced(&self, map: &[usize]) -> Core {
        let mut sub = Core::empty(map.len());
        for (a, &i) in map.iter().enumerate() {
            let row = self.row(i);
            for (b, &j) in map.iter().enumerate().skip(a + 1) {
                if row[j / 64] >> (j % 64) & 1 == 1 {
                    sub.connect(a, b);
                }
            }
        }
        sub
    }
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + bit)
        })
    })
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// Calls `found` once for every clique of exactly `target` vertices, as
/// index sets into the graph's branching order.  Members are listed in the
/// order they were picked.
///
/// Branch and bound in the Tomita style: each node greedily colors its
/// candidate set, branches on vertices in descending color order, restricts
/// candidates to earlier vertices intersected with the neighborhood, and
/// stops the scan once a vertex's color proves the remaining prefix too
/// shallow for the target.
pub fn enumerate_cliques(g: &CompatGraph, target: usize, mut found: impl FnMut(&[usize])) {
    if target == 0 {
        found(&[]);
        return;
    }
    // All vertices start as candidates; padding bits stay clear.
    let mut cand = vec![u64::MAX; g.core.words];
    for b in g.len()..g.core.words * 64 {
        cand[b / 64] &= !(1 << (b % 64));
    }
    let mut current = Vec::with_capacity(target);
    descend(&g.core, target, &cand, &mut current, &mut |clique| {
        found(clique)
    });
}

fn descend(
    core: &Core,
    target: usize,
    cand: &[u64],
    current: &mut Vec<usize>,
    found: &mut dyn FnMut(&[usize]),
) {
    let needed = target - current.len();
    let size = popcount(cand);
    if size < needed {
        return;
    }

    // Re-index once the candidate set is sparse in the current space.
    if size * 4 <= core.n && size >= 32 {
        let map: Vec<usize> = iter_ones(cand).collect();
        let sub = core.induced(&map);
        let mut sub_cand = vec![u64::MAX; sub.words];
        for b in sub.n..sub.words * 64 {
            sub_cand[b / 64] &= !(1 << (b % 64));
        }
        let base_len = current.len();
        let mut inner: Vec<usize> = Vec::new();
        descend(&sub, needed, &sub_cand, &mut inner, &mut |clique| {
            current.truncate(base_len);
            current.extend(clique.iter().map(|&k| map[k]));
            found(current);
        });
        current.truncate(base_len);
        return;
    }

    // Greedy coloring in static order; a clique inside `cand` containing v
    // and only vertices listed before it has at most color(v) members.
    let mut classes: Vec<Vec<u64>> = Vec::new();
    let mut ordered: Vec<(u32, u32)> = Vec::with_capacity(size);
    for v in iter_ones(cand) {
        let row = core.row(v);
        let c = match classes.iter().position(|class| disjoint(class, row)) {
            Some(c) => c,
            None => {
                classes.push(vec![0; core.words]);
                classes.len() - 1
            }
        };
        classes[c][v / 64] |= 1 << (v % 64);
        ordered.push((c as u32 + 1, v as u32));
    }
    ordered.sort_unstable();

    let mut allowed = cand.to_vec();
    for &(color, v) in ordered.iter().rev() {
        if (color as usize) < needed {
            break;
        }
        let v = v as usize;
        allowed[v / 64] &= !(1 << (v % 64));
        current.push(v);
        if current.len() == target {
            found(current);
        } else {
            let row = core.row(v);
            let narrowed: Vec<u64> = allowed.iter().zip(row).map(|(a, r)| a & r).collect();
            descend(core, target, &narrowed, current, found);
        }
        current.pop();
    }
}
