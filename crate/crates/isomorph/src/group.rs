use std::collections::HashMap;

use crate::PointPerm;

/// A permutation group of linear point permutations, held as a stabilizer
/// chain over the fixed base e_1, ..., e_v. Fixing every unit vector forces
/// the identity, so the chain always suffices to read off the group order.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    v: usize,
    base: Vec<u32>,
    /// assigned[i] holds strong generators first moving base point i; the
    /// generating set of the i-th stabilizer is the union over j >= i.
    assigned: Vec<Vec<PointPerm>>,
    transversals: Vec<HashMap<u32, PointPerm>>,
}

impl PermutationGroup {
    pub fn from_generators(v: usize, gens: &[PointPerm]) -> PermutationGroup {
        let base: Vec<u32> = (0..v).map(|i| 1 << (v - 1 - i)).collect();
        let mut g = PermutationGroup {
            v,
            transversals: vec![HashMap::new(); base.len()],
            assigned: vec![Vec::new(); base.len()],
            base,
        };
        for gen in gens {
            assert_eq!(gen.ambient(), v);
            debug_assert!(gen.is_linear());
            if let Some(level) = g.first_moved_base(gen) {
                g.assigned[level].push(gen.clone());
            }
        }
        for i in (0..v).rev() {
            g.close_level(i);
        }
        g
    }

    pub fn ambient(&self) -> usize {
        self.v
    }

    pub fn order(&self) -> u128 {
        self.transversals.iter().map(|t| t.len().max(1) as u128).product()
    }

    pub fn contains(&self, g: &PointPerm) -> bool {
        self.strip(g.clone(), 0).1.is_identity()
    }

    /// The index of the first base point the permutation moves; None for
    /// the identity.
    fn first_moved_base(&self, g: &PointPerm) -> Option<usize> {
        (0..self.base.len()).find(|&i| g.apply(self.base[i]) != self.base[i])
    }

    /// Divides out the transversal entries level by level; the returned
    /// residue fixes the base points before the returned level.
    fn strip(&self, mut g: PointPerm, from: usize) -> (usize, PointPerm) {
        for i in from..self.base.len() {
            let x = g.apply(self.base[i]);
            match self.transversals[i].get(&x) {
                Some(u) => g = u.inverse().compose(&g),
                None => return (i, g),
            }
        }
        (self.base.len(), g)
    }

    fn level_generators(&self, level: usize) -> Vec<PointPerm> {
        self.assigned[level..].iter().flatten().cloned().collect()
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let gens = self.level_generators(level);
        let mut trans = HashMap::new();
        trans.insert(self.base[level], PointPerm::identity(self.v));
        let mut queue = vec![self.base[level]];
        while let Some(x) = queue.pop() {
            for g in &gens {
                let y = g.apply(x);
                if !trans.contains_key(&y) {
                    let u = g.compose(&trans[&x]);
                    trans.insert(y, u);
                    queue.push(y);
                }
            }
        }
        self.transversals[level] = trans;
    }

    /// Makes the chain strong from this level down, assuming deeper levels
    /// are already closed: every Schreier generator must strip to the
    /// identity, and any residue is inserted and the affected levels redone.
    fn close_level(&mut self, level: usize) {
        'rebuild: loop {
            self.rebuild_orbit(level);
            let gens = self.level_generators(level);
            let points: Vec<u32> = self.transversals[level].keys().copied().collect();
            for x in points {
                for g in &gens {
                    let tx = self.transversals[level][&x].clone();
                    let tgx = self.transversals[level][&g.apply(x)].clone();
                    let schreier = tgx.inverse().compose(&g.compose(&tx));
                    let (l, residue) = self.strip(schreier, level + 1);
                    if !residue.is_identity() {
                        assert!(l < self.base.len(), "linear residue must move a base point");
                        self.assigned[l].push(residue);
                        for j in (level + 1..=l).rev() {
                            self.close_level(j);
                        }
                        continue 'rebuild;
                    }
                }
            }
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gf2core::GF2Matrix;

    /// All transvections I + E_ij generate the full linear group.
    fn transvection_generators(v: usize) -> Vec<PointPerm> {
        let mut gens = Vec::new();
        for i in 0..v {
            for j in 0..v {
                if i != j {
                    let mut rows: Vec<u32> = (0..v).map(|r| 1 << (v - 1 - r)).collect();
                    rows[i] |= 1 << (v - 1 - j);
                    gens.push(PointPerm::from_matrix(&GF2Matrix::new(v, rows)));
                }
            }
        }
        gens
    }

    fn gl_order(v: usize) -> u128 {
        (0..v).map(|i| (1u128 << v) - (1u128 << i)).product()
    }

    #[test]
    fn full_linear_group_orders() {
        for v in 2..=7 {
            let g = PermutationGroup::from_generators(v, &transvection_generators(v));
            assert_eq!(g.order(), gl_order(v), "GL({v},2)");
        }
    }

    #[test]
    fn gl7_has_the_expected_order() {
        assert_eq!(gl_order(7), 163_849_992_929_280);
    }

    #[test]
    fn trivial_and_cyclic_groups() {
        let g = PermutationGroup::from_generators(4, &[]);
        assert_eq!(g.order(), 1);
        let c = PointPerm::from_matrix(&GF2Matrix::new(4, vec![4, 2, 1, 9]));
        let g = PermutationGroup::from_generators(4, &[c.clone()]);
        let mut power = c.clone();
        let mut n = 1u128;
        while !power.is_identity() {
            power = c.compose(&power);
            n += 1;
        }
        assert_eq!(g.order(), n);
        assert!(g.contains(&c.compose(&c)));
    }

    #[test]
    fn membership_test_rejects_outside_elements() {
        // The group generated by upper triangular transvections has order
        // 2^(v(v-1)/2); a lower one lies outside.
        let v = 4;
        let mut gens = Vec::new();
        for i in 0..v {
            for j in i + 1..v {
                let mut rows: Vec<u32> = (0..v).map(|r| 1 << (v - 1 - r)).collect();
                rows[i] |= 1 << (v - 1 - j);
                gens.push(PointPerm::from_matrix(&GF2Matrix::new(v, rows)));
            }
        }
        let g = PermutationGroup::from_generators(v, &gens);
        assert_eq!(g.order(), 1 << 6);
        let mut rows: Vec<u32> = (0..v).map(|r| 1 << (v - 1 - r)).collect();
        rows[2] |= 1 << (v - 1);
        let lower = PointPerm::from_matrix(&GF2Matrix::new(v, rows));
        assert!(!g.contains(&lower));
    }
}
