use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::{ColoredConfiguration, PermutationGroup, PointPerm};

/// splitmix64 finalizer. The refinement traces and with them the search
/// tree depend on this exact function, so it must stay byte-for-byte
/// stable; canonical keys recorded in fixtures rely on it.
fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

#[derive(Default)]
struct Hasher64(u64);

impl Hasher64 {
    fn absorb(&mut self, x: u64) {
        self.0 = mix64(self.0 ^ mix64(x));
    }

    fn finish(&self) -> u64 {
        mix64(self.0)
    }
}

/// Lowercase hex SHA-256 of the canonically relabeled configuration.
/// Two configurations get the same key exactly when some invertible linear
/// map carries one to the other with tags preserved.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn from_hex(s: &str) -> CanonicalKey {
        CanonicalKey(s.to_string())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The linear symmetries of a configuration, as point permutations.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    v: usize,
    generators: Vec<PointPerm>,
    order: u128,
}

impl AutomorphismGroup {
    fn from_generators(v: usize, generators: Vec<PointPerm>) -> AutomorphismGroup {
        let order = PermutationGroup::from_generators(v, &generators).order();
        AutomorphismGroup { v, generators, order }
    }

    pub fn ambient(&self) -> usize {
        self.v
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[PointPerm] {
        &self.generators
    }

    /// Partition of the word indices into orbits, each sorted, ordered by
    /// their smallest index.
    pub fn word_orbits(&self, cfg: &ColoredConfiguration) -> Vec<Vec<usize>> {
        let words: Vec<(u32, u128)> = cfg
            .words()
            .iter()
            .map(|(t, w)| (*t, w.points().bits()))
            .collect();
        let index: HashMap<(u32, u128), usize> =
            words.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let mut parent: Vec<usize> = (0..words.len()).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for g in &self.generators {
            for (i, &(tag, mask)) in words.iter().enumerate() {
                let j = index[&(tag, g.apply_mask(mask))];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbits: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..words.len() {
            orbits.entry(find(&mut parent, i)).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = orbits.into_values().collect();
        out.sort();
        out
    }

    /// Sorted multiset of word orbit sizes, the usual shorthand for how the
    /// symmetries shuffle the members.
    pub fn word_orbit_sizes(&self, cfg: &ColoredConfiguration) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.word_orbits(cfg).iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Canonical key plus the symmetries discovered on the way.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub key: CanonicalKey,
    pub group: AutomorphismGroup,
}

pub fn canonicalize(cfg: &ColoredConfiguration) -> Canonical {
    let mut searcher = Searcher::new(cfg);
    searcher.run();
    let best = searcher.best.expect("search always reaches a leaf");
    let mut hasher = Sha256::new();
    hasher.update([cfg.ambient() as u8]);
    hasher.update((best.cert.words.len() as u32).to_be_bytes());
    for (tag, mask) in &best.cert.words {
        hasher.update(tag.to_be_bytes());
        hasher.update(mask.to_be_bytes());
    }
    hasher.update(&best.cert.lines);
    let key = CanonicalKey(format!("{:x}", hasher.finalize()));
    Canonical {
        key,
        group: AutomorphismGroup::from_generators(cfg.ambient(), searcher.auts),
    }
}

pub fn canonical_key(cfg: &ColoredConfiguration) -> CanonicalKey {
    canonicalize(cfg).key
}

pub fn are_isomorphic(a: &ColoredConfiguration, b: &ColoredConfiguration) -> bool {
    a.ambient() == b.ambient() && canonical_key(a) == canonical_key(b)
}

/// A configuration is iso-dual when it is isomorphic to its own dual.
pub fn is_iso_dual(cfg: &ColoredConfiguration) -> bool {
    are_isomorphic(cfg, &cfg.dual())
}

/// The key of the isomorphism class of the pair {configuration, dual}:
/// the smaller of the two keys, so that dual configurations fold together.
pub fn duality_folded_key(cfg: &ColoredConfiguration) -> CanonicalKey {
    canonical_key(cfg).min(canonical_key(&cfg.dual()))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Cert {
    words: Vec<(u32, u128)>,
    lines: Vec<u8>,
}

#[derive(Clone)]
struct Leaf {
    trace: Vec<u64>,
    cert: Cert,
    perm: PointPerm,
}

/// Point and word colors carried through the search tree together.
#[derive(Clone)]
struct Coloring {
    points: Vec<u32>,
    words: Vec<u32>,
}

/// Individualization-refinement search alternating between both sides of
/// the point-word incidence.
///
/// Points start colored by the tagged words containing them. One
/// refinement round recolors the words by the sorted colors of their
/// points, then recolors each point by the colors of the words through it
/// together with the color pairs on the lines through it. Ties left after
/// refinement are broken by individualizing one point of the first
/// smallest non-singleton class. Each leaf is a full relabeling; the best
/// leaf by (trace, certificate) is the canonical one, and pairs of leaves
/// with equal certificates yield the automorphisms used both for
/// reporting and for orbit pruning.
struct Searcher {
    v: usize,
    n: u32,
    word_masks: Vec<(u32, u128)>,
    words_by_point: Vec<Vec<u16>>,
    points_by_word: Vec<Vec<u16>>,
    init_rank: Vec<u32>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    auts: Vec<PointPerm>,
}

impl Searcher {
    fn new(cfg: &ColoredConfiguration) -> Searcher {
        let v = cfg.ambient();
        let n = (1u32 << v) - 1;
        let word_masks: Vec<(u32, u128)> = cfg
            .words()
            .iter()
            .map(|(t, w)| (*t, w.points().bits()))
            .collect();
        let mut words_by_point = vec![Vec::new(); n as usize];
        let mut points_by_word = vec![Vec::new(); word_masks.len()];
        for (wi, &(_, mask)) in word_masks.iter().enumerate() {
            for p in 1..=n {
                if mask & (1 << (p - 1)) != 0 {
                    words_by_point[p as usize - 1].push(wi as u16);
                    points_by_word[wi].push(p as u16);
                }
            }
        }
        // Rank points by the sorted list of (tag, dimension) of the words
        // containing them.
        let mut sigs: Vec<Vec<(u32, u32)>> = Vec::with_capacity(n as usize);
        for p in 1..=n {
            let mut s: Vec<(u32, u32)> = cfg
                .words()
                .iter()
                .filter(|(_, w)| w.points().contains(p))
                .map(|(t, w)| (*t, w.dim() as u32))
                .collect();
            s.sort_unstable();
            sigs.push(s);
        }
        let mut distinct: Vec<&Vec<(u32, u32)>> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let init_rank = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present") as u32)
            .collect();
        Searcher {
            v,
            n,
            word_masks,
            words_by_point,
            points_by_word,
            init_rank,
            first: None,
            best: None,
            auts: Vec::new(),
        }
    }

    fn run(&mut self) {
        let coloring = Coloring {
            points: self.init_rank.clone(),
            words: vec![0; self.word_masks.len()],
        };
        let mut prefix = Vec::new();
        self.explore(coloring, Vec::new(), &mut prefix);
    }

    /// One dense re-ranking of `colors` by the signature values, keeping
    /// the old color as the major sort key. Returns the new color count
    /// and absorbs the invariant data into the trace hasher.
    fn rerank(colors: &mut [u32], sigs: &[u64], th: &mut Hasher64) -> u32 {
        if colors.is_empty() {
            return 0;
        }
        let mut order: Vec<u32> = (0..colors.len() as u32).collect();
        order.sort_unstable_by_key(|&i| (colors[i as usize], sigs[i as usize]));
        let mut new_colors = vec![0u32; colors.len()];
        let mut next = 0u32;
        for (i, &x) in order.iter().enumerate() {
            if i > 0 {
                let prev = order[i - 1] as usize;
                if colors[prev] != colors[x as usize] || sigs[prev] != sigs[x as usize] {
                    next += 1;
                }
            }
            new_colors[x as usize] = next;
            th.absorb((next as u64) << 32 | colors[x as usize] as u64);
            th.absorb(sigs[x as usize]);
        }
        colors.copy_from_slice(&new_colors);
        next + 1
    }

    /// Refines until both sides are stable; returns the trace value.
    fn refine(&self, coloring: &mut Coloring) -> u64 {
        let mut th = Hasher64::default();
        let mut psigs = vec![0u64; self.n as usize];
        let mut wsigs = vec![0u64; self.word_masks.len()];
        loop {
            let before = (
                coloring.points.iter().max().map_or(0, |&m| m + 1),
                coloring.words.iter().max().map_or(0, |&m| m + 1),
            );
            for (wi, points) in self.points_by_word.iter().enumerate() {
                let mut cs: Vec<u32> =
                    points.iter().map(|&p| coloring.points[p as usize - 1]).collect();
                cs.sort_unstable();
                let mut h = Hasher64::default();
                h.absorb(self.word_masks[wi].0 as u64);
                for c in cs {
                    h.absorb(c as u64);
                }
                wsigs[wi] = h.finish();
            }
            let words_after = Self::rerank(&mut coloring.words, &wsigs, &mut th);
            for p in 1..=self.n {
                let mut pairs: Vec<u64> = Vec::with_capacity(self.n as usize / 2);
                for q in 1..=self.n {
                    let r = p ^ q;
                    if q != p && q < r {
                        let (a, b) = (
                            coloring.points[q as usize - 1],
                            coloring.points[r as usize - 1],
                        );
                        pairs.push(((a.min(b) as u64) << 32) | a.max(b) as u64);
                    }
                }
                pairs.sort_unstable();
                let mut h = Hasher64::default();
                let mut through: Vec<u32> = self.words_by_point[p as usize - 1]
                    .iter()
                    .map(|&wi| coloring.words[wi as usize])
                    .collect();
                through.sort_unstable();
                for c in through {
                    h.absorb(c as u64);
                }
                for x in pairs {
                    h.absorb(x);
                }
                psigs[p as usize - 1] = h.finish();
            }
            let points_after = Self::rerank(&mut coloring.points, &psigs, &mut th);
            if (points_after, words_after) == before {
                return th.finish();
            }
        }
    }

    fn explore(&mut self, mut coloring: Coloring, mut trace: Vec<u64>, prefix: &mut Vec<u32>) {
        trace.push(self.refine(&mut coloring));
        if !self.keep(&trace) {
            return;
        }
        let ncolors = coloring.points.iter().max().map_or(0, |&m| m + 1);
        if ncolors == self.n {
            let leaf = self.build_leaf(&coloring.points, trace);
            self.on_leaf(leaf);
            return;
        }
        let target = self.target_cell(&coloring.points, ncolors);
        let members: Vec<u32> = (1..=self.n)
            .filter(|&p| coloring.points[p as usize - 1] == target)
            .collect();
        let mut explored: Vec<u32> = Vec::new();
        for p in members {
            if self.in_explored_orbit(p, &explored, prefix) {
                continue;
            }
            let mut child = coloring.clone();
            child.points[p as usize - 1] = ncolors;
            prefix.push(p);
            self.explore(child, trace.clone(), prefix);
            prefix.pop();
            explored.push(p);
        }
    }

    /// A subtree stays alive while its trace is no worse than the best
    /// known or still matches the very first leaf; the second condition is
    /// what guarantees the automorphism generators are complete.
    fn keep(&self, trace: &[u64]) -> bool {
        let Some(best) = &self.best else { return true };
        if prefix_cmp(trace, &best.trace) != Ordering::Greater {
            return true;
        }
        let first = self.first.as_ref().expect("first is set with best");
        prefix_cmp(trace, &first.trace) == Ordering::Equal
    }

    /// First smallest color class with at least two points.
    fn target_cell(&self, colors: &[u32], ncolors: u32) -> u32 {
        let mut sizes = vec![0u32; ncolors as usize];
        for &c in colors {
            sizes[c as usize] += 1;
        }
        (0..ncolors)
            .filter(|&c| sizes[c as usize] > 1)
            .min_by_key(|&c| (sizes[c as usize], c))
            .expect("some class is non-singleton")
    }

    fn in_explored_orbit(&self, p: u32, explored: &[u32], prefix: &[u32]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let n = self.n as usize;
        let mut parent: Vec<u32> = (0..=n as u32).collect();
        fn find(parent: &mut [u32], mut i: u32) -> u32 {
            while parent[i as usize] != i {
                parent[i as usize] = parent[parent[i as usize] as usize];
                i = parent[i as usize];
            }
            i
        }
        for g in &self.auts {
            if prefix.iter().any(|&x| g.apply(x) != x) {
                continue;
            }
            for x in 1..=self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let root = find(&mut parent, p);
        explored.iter().any(|&q| find(&mut parent, q) == root)
    }

    fn build_leaf(&self, colors: &[u32], trace: Vec<u64>) -> Leaf {
        let perm = PointPerm::from_images(
            self.v,
            colors.iter().map(|&c| c + 1).collect(),
        );
        let inv = perm.inverse();
        let mut words: Vec<(u32, u128)> = self
            .word_masks
            .iter()
            .map(|&(t, m)| (t, perm.apply_mask(m)))
            .collect();
        words.sort_unstable();
        let n = self.n;
        let mut lines = Vec::with_capacity((n as usize * (n as usize - 1)) / 2);
        for a in 1..=n {
            for b in a + 1..=n {
                lines.push(perm.apply(inv.apply(a) ^ inv.apply(b)) as u8);
            }
        }
        Leaf { trace, cert: Cert { words, lines }, perm }
    }

    fn on_leaf(&mut self, leaf: Leaf) {
        if self.best.is_none() {
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return;
        }
        let first_perm = {
            let first = self.first.as_ref().expect("set with best");
            (first.trace == leaf.trace && first.cert == leaf.cert).then(|| first.perm.clone())
        };
        if let Some(perm) = first_perm {
            self.record_aut(&perm, &leaf.perm);
        }
        let (ordering, best_perm) = {
            let best = self.best.as_ref().expect("checked above");
            ((&leaf.trace, &leaf.cert).cmp(&(&best.trace, &best.cert)), best.perm.clone())
        };
        match ordering {
            Ordering::Less => self.best = Some(leaf),
            Ordering::Equal => self.record_aut(&best_perm, &leaf.perm),
            Ordering::Greater => {}
        }
    }

    fn record_aut(&mut self, reference: &PointPerm, other: &PointPerm) {
        let sigma = reference.inverse().compose(other);
        if sigma.is_identity() || self.auts.contains(&sigma) {
            return;
        }
        debug_assert!(sigma.is_linear());
        debug_assert!({
            let mut moved: Vec<(u32, u128)> = self
                .word_masks
                .iter()
                .map(|&(t, m)| (t, sigma.apply_mask(m)))
                .collect();
            let mut original = self.word_masks.clone();
            moved.sort_unstable();
            original.sort_unstable();
            moved == original
        });
        self.auts.push(sigma);
    }
}

/// Lexicographic comparison over the overlapping prefix.
fn prefix_cmp(a: &[u64], b: &[u64]) -> Ordering {
    let len = a.len().min(b.len());
    a[..len].cmp(&b[..len])
}

#[cfg(test)]
mod tests {
    use super::*;
    use gf2core::{GF2Matrix, Subspace};
    use std::sync::OnceLock;

    fn line(v: usize, rows: [u32; 2]) -> Subspace {
        Subspace::span(&GF2Matrix::new(v, rows.to_vec()))
    }

    fn cfg(words: Vec<(u32, Subspace)>) -> ColoredConfiguration {
        ColoredConfiguration::new(4, words).unwrap()
    }

    /// Every invertible linear map of F_2^4, as a point permutation.
    fn gl4() -> &'static Vec<PointPerm> {
        static GL4: OnceLock<Vec<PointPerm>> = OnceLock::new();
        GL4.get_or_init(|| {
            let mut out = Vec::new();
            let extend = |span: u16, r: u32| -> u16 {
                let mut bigger = 0;
                for s in 0..16u32 {
                    if span & (1 << s) != 0 {
                        bigger |= 1 << (s ^ r);
                    }
                }
                span | bigger
            };
            for r0 in 1..16u32 {
                let s0 = extend(1, r0);
                for r1 in (1..16u32).filter(|&r| s0 & (1 << r) == 0) {
                    let s1 = extend(s0, r1);
                    for r2 in (1..16u32).filter(|&r| s1 & (1 << r) == 0) {
                        let s2 = extend(s1, r2);
                        for r3 in (1..16u32).filter(|&r| s2 & (1 << r) == 0) {
                            out.push(PointPerm::from_matrix(&GF2Matrix::new(
                                4,
                                vec![r0, r1, r2, r3],
                            )));
                        }
                    }
                }
            }
            assert_eq!(out.len(), 20160);
            out
        })
    }

    fn word_set(c: &ColoredConfiguration) -> Vec<(u32, u128)> {
        let mut w: Vec<(u32, u128)> = c
            .words()
            .iter()
            .map(|(t, s)| (*t, s.points().bits()))
            .collect();
        w.sort_unstable();
        w
    }

    fn brute_isomorphic(a: &ColoredConfiguration, b: &ColoredConfiguration) -> bool {
        let target = word_set(b);
        gl4().iter().any(|g| word_set(&a.transformed(g)) == target)
    }

    fn brute_aut_order(c: &ColoredConfiguration) -> u128 {
        let own = word_set(c);
        gl4()
            .iter()
            .filter(|g| word_set(&c.transformed(g)) == own)
            .count() as u128
    }

    fn sample_configurations() -> Vec<ColoredConfiguration> {
        let l12 = line(4, [8, 4]);
        let l34 = line(4, [2, 1]);
        let l23 = line(4, [4, 2]);
        let diag = line(4, [8 ^ 2, 4 ^ 1]);
        let plane = Subspace::span(&GF2Matrix::new(4, vec![8, 4, 2]));
        vec![
            cfg(vec![(0, l12.clone()), (0, l34.clone())]),
            cfg(vec![(0, l12.clone()), (0, l23.clone())]),
            cfg(vec![(0, l12.clone()), (0, l34.clone()), (0, diag.clone())]),
            cfg(vec![(0, plane.clone()), (0, l12.clone())]),
            cfg(vec![(0, plane.clone()), (0, l34.clone())]),
            cfg(vec![(0, l12.clone()), (1, l34.clone())]),
            cfg(vec![(1, l12.clone()), (0, l34.clone())]),
            cfg(vec![(0, l12.clone()), (2, l34.clone())]),
            cfg(vec![(0, plane), (1, l12)]),
        ]
    }

    #[test]
    fn keys_agree_with_brute_force_isomorphism() {
        let configs = sample_configurations();
        let keys: Vec<CanonicalKey> = configs.iter().map(canonical_key).collect();
        for i in 0..configs.len() {
            for j in i..configs.len() {
                assert_eq!(
                    keys[i] == keys[j],
                    brute_isomorphic(&configs[i], &configs[j]),
                    "configs {i} and {j}"
                );
            }
        }
    }

    #[test]
    fn automorphism_orders_agree_with_brute_force() {
        for (i, c) in sample_configurations().iter().enumerate() {
            assert_eq!(
                canonicalize(c).group.order(),
                brute_aut_order(c),
                "config {i}"
            );
        }
    }

    #[test]
    fn keys_are_invariant_under_the_group_action() {
        let configs = sample_configurations();
        for (i, c) in configs.iter().enumerate() {
            let key = canonical_key(c);
            for g in gl4().iter().step_by(211) {
                assert_eq!(canonical_key(&c.transformed(g)), key, "config {i}");
            }
        }
    }

    #[test]
    fn word_orbits_agree_with_brute_force() {
        for (idx, c) in sample_configurations().iter().enumerate() {
            let words = word_set(c);
            let mut orbit_of = vec![usize::MAX; words.len()];
            let mut next = 0;
            for g in gl4() {
                if word_set(&c.transformed(g)) != words {
                    continue;
                }
                let mut images = Vec::new();
                for (t, w) in c.words() {
                    let m = (*t, g.apply_mask(w.points().bits()));
                    images.push(c
                        .words()
                        .iter()
                        .position(|(t2, w2)| (*t2, w2.points().bits()) == m)
                        .unwrap());
                }
                for (i, &j) in images.iter().enumerate() {
                    let (a, b) = (orbit_of[i].min(orbit_of[j]), i.min(j));
                    let target = if a == usize::MAX { b } else { a.min(b) };
                    let old_i = orbit_of[i];
                    let old_j = orbit_of[j];
                    for o in orbit_of.iter_mut() {
                        if *o != usize::MAX && (*o == old_i || *o == old_j) {
                            *o = target;
                        }
                    }
                    orbit_of[i] = target;
                    orbit_of[j] = target;
                }
            }
            let mut brute: Vec<Vec<usize>> = Vec::new();
            for rep in 0..words.len() {
                let members: Vec<usize> =
                    (0..words.len()).filter(|&i| orbit_of[i] == rep).collect();
                if !members.is_empty() {
                    brute.push(members);
                }
            }
            let canonical = canonicalize(c);
            assert_eq!(canonical.group.word_orbits(c), brute, "config {idx}");
        }
    }

    #[test]
    fn line_stabilizer_has_index_thirty_five() {
        let c = cfg(vec![(0, line(4, [8, 4]))]);
        assert_eq!(canonicalize(&c).group.order(), 20160 / 35);
    }

    #[test]
    fn small_ambient_full_group() {
        let c = ColoredConfiguration::new(3, vec![]).unwrap();
        assert_eq!(canonicalize(&c).group.order(), 168);
    }

    #[test]
    fn duality_detection() {
        let l = cfg(vec![(0, line(4, [8, 4]))]);
        assert!(is_iso_dual(&l));
        let p = cfg(vec![(0, Subspace::span(&GF2Matrix::new(4, vec![8, 4, 2])))]);
        assert!(!is_iso_dual(&p));
        assert_eq!(duality_folded_key(&p), duality_folded_key(&p.dual()));
    }
}
