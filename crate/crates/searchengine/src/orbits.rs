//! Orbit enumeration on point masks under a set of permutation generators.

use std::collections::HashSet;

use isomorph::PointPerm;

/// Orbit representatives of `masks` under the group generated by `gens`, in
/// ascending mask order.  Each representative is the smallest mask of its
/// orbit.  The group must map the mask pool into itself; breadth-first
/// walks stay inside the pool, so every mask is visited exactly once.
pub fn orbit_reps(masks: &[u128], gens: &[PointPerm]) -> Vec<u128> {
    let pool: HashSet<u128> = masks.iter().copied().collect();
    let mut sorted: Vec<u128> = pool.iter().copied().collect();
    sorted.sort_unstable();
    let mut seen: HashSet<u128> = HashSet::new();
    let mut reps = Vec::new();
    for &m in &sorted {
        if seen.contains(&m) {
            continue;
        }
        reps.push(m);
        let mut frontier = vec![m];
        seen.insert(m);
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = g.apply_mask(x);
                debug_assert!(pool.contains(&y), "group must preserve the mask pool");
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
    }
    reps
}
