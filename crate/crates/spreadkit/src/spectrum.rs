use std::collections::BTreeMap;
use std::fmt;

use gf2core::{GF2Vector, Subspace};
use projgeom::Geometry;

use crate::{Error, PartialSpread};

fn fmt_multiset(counts: &BTreeMap<usize, usize>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, (value, mult)) in counts.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{value}^{mult}")?;
    }
    write!(f, ")")
}

/// For each hyperplane of PG(6,2), the number of blocks lying inside it,
/// recorded as a multiset: `multiplicity(i)` hyperplanes contain exactly
/// `i` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    counts: BTreeMap<usize, usize>,
}

impl Spectrum {
    pub fn of_spread(s: &PartialSpread, geo: &Geometry) -> Spectrum {
        assert_eq!(geo.ambient(), 7);
        Spectrum::from_counts(geo.hyperplanes().iter().map(|h| {
            s.blocks().iter().filter(|b| h.contains(b)).count()
        }))
    }

    /// One entry per hyperplane: how many blocks it contains.
    pub fn from_counts(counts: impl IntoIterator<Item = usize>) -> Spectrum {
        let mut map = BTreeMap::new();
        for c in counts {
            *map.entry(c).or_insert(0) += 1;
        }
        Spectrum { counts: map }
    }

    /// Build directly from (blocks inside, number of hyperplanes) pairs.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (usize, usize)>) -> Spectrum {
        Spectrum {
            counts: pairs.into_iter().filter(|&(_, m)| m > 0).collect(),
        }
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, blocks_inside: usize) -> usize {
        self.counts.get(&blocks_inside).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// The three counting identities every spectrum of a partial plane
    /// spread satisfies: the hyperplane count is 127, each block lies in 15
    /// hyperplanes, and each disjoint pair of blocks spans a hyperplane.
    pub fn satisfies_standard_equations(&self, size: usize) -> bool {
        let sum: usize = self.counts.values().sum();
        let weighted: usize = self.counts.iter().map(|(&i, &m)| i * m).sum();
        let pairs: usize = self.counts.iter().map(|(&i, &m)| i * i.saturating_sub(1) / 2 * m).sum();
        sum == 127 && weighted == 15 * size && pairs == size * size.saturating_sub(1) / 2
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_multiset(&self.counts, f)
    }
}

/// For each hyperplane of the hole space, the number of holes it contains,
/// again as a multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleSpectrum {
    counts: BTreeMap<usize, usize>,
}

impl HoleSpectrum {
    pub fn of_spread(s: &PartialSpread) -> HoleSpectrum {
        let n = s.hole_space().dim();
        if n == 0 {
            return HoleSpectrum { counts: BTreeMap::new() };
        }
        HoleSpectrum::from_counts(
            projgeom::subspaces_of(s.hole_space(), n - 1).map(|t| s.hole_multiplicity(&t)),
        )
    }

    /// One entry per hyperplane of the hole space: how many holes it contains.
    pub fn from_counts(counts: impl IntoIterator<Item = usize>) -> HoleSpectrum {
        let mut map = BTreeMap::new();
        for c in counts {
            *map.entry(c).or_insert(0) += 1;
        }
        HoleSpectrum { counts: map }
    }

    /// Build directly from (holes inside, number of hyperplanes) pairs.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (usize, usize)>) -> HoleSpectrum {
        HoleSpectrum {
            counts: pairs.into_iter().filter(|&(_, m)| m > 0).collect(),
        }
    }

    /// Derives the hole spectrum from the block spectrum without touching
    /// the spread itself.
    ///
    /// A hyperplane of PG(6,2) with i blocks inside carries 63 - 3 size - 4i
    /// holes, and the hyperplanes of the hole space (dimension n) arise from
    /// grouping the 127 ambient hyperplanes into fibers of size 2^(7-n) with
    /// constant hole count. The grouping forces every class size to divide
    /// evenly and the classes to add up to the 2^n - 1 hyperplanes of the
    /// hole space; both are checked.
    pub fn from_block_spectrum(
        spec: &Spectrum,
        size: usize,
        n: usize,
    ) -> Result<HoleSpectrum, Error> {
        assert!((1..=7).contains(&n), "hole space dimension out of range");
        let denominator = 1usize << (7 - n);
        let num_holes = 127 - 7 * size;
        let mut counts = BTreeMap::new();
        for j in 0..num_holes {
            if 63 < 3 * size + j || (63 - 3 * size - j) % 4 != 0 {
                continue;
            }
            let i = (63 - 3 * size - j) / 4;
            let numerator = spec.multiplicity(i);
            if numerator % denominator != 0 {
                return Err(Error::InexactTransfer { j, numerator, denominator });
            }
            if numerator > 0 {
                counts.insert(j, numerator / denominator);
            }
        }
        let got: usize = counts.values().sum();
        let expected = (1usize << n) - 1;
        if got != expected {
            return Err(Error::TransferTotal { got, expected });
        }
        Ok(HoleSpectrum { counts })
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, holes_inside: usize) -> usize {
        self.counts.get(&holes_inside).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

impl fmt::Display for HoleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_multiset(&self.counts, f)
    }
}

/// Hole count of a hyperplane of PG(6,2) that contains `blocks_inside` of
/// the blocks of a spread of the given size: the other blocks each meet the
/// hyperplane in a line.
pub fn predicted_hyperplane_holes(size: usize, blocks_inside: usize) -> usize {
    assert!(
        3 * size + 4 * blocks_inside <= 63,
        "no hyperplane fits {blocks_inside} blocks of a size-{size} spread"
    );
    63 - 3 * size - 4 * blocks_inside
}

/// Checks the inclusion-exclusion relation between the hole counts of a
/// subspace W, a subspace Y two dimensions above it, and the three
/// intermediate subspaces: 2 h(W) = h(X1) + h(X2) + h(X3) - h(Y).
pub fn sieve_identity_holds(
    s: &PartialSpread,
    w: &Subspace,
    y: &Subspace,
) -> Result<bool, Error> {
    if !y.contains(w) || y.dim() != w.dim() + 2 {
        return Err(Error::SieveShape { wdim: w.dim(), ydim: y.dim() });
    }
    let mut intermediates = std::collections::BTreeSet::new();
    for p in (y.points() - w.points()).iter() {
        intermediates.insert(w.join(&Subspace::point(GF2Vector::new(p, y.ambient()))));
    }
    debug_assert_eq!(intermediates.len(), 3);
    let side: usize = intermediates.iter().map(|x| s.hole_multiplicity(x)).sum();
    Ok(2 * s.hole_multiplicity(w) + s.hole_multiplicity(y) == side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil;
    use gf2core::GF2Matrix;

    #[test]
    fn empty_spread_spectra() {
        let s = PartialSpread::new(vec![]).unwrap();
        let geo = Geometry::new(7);
        let spec = Spectrum::of_spread(&s, &geo);
        assert_eq!(spec, Spectrum::from_multiplicities([(0, 127)]));
        assert!(spec.satisfies_standard_equations(0));
        let direct = HoleSpectrum::of_spread(&s);
        assert_eq!(direct, HoleSpectrum::from_multiplicities([(63, 127)]));
        assert_eq!(HoleSpectrum::from_block_spectrum(&spec, 0, 7).unwrap(), direct);
    }

    #[test]
    fn single_block_spectra() {
        let b = Subspace::span(&GF2Matrix::new(7, vec![64, 32, 16]));
        let s = PartialSpread::new(vec![b]).unwrap();
        let geo = Geometry::new(7);
        let spec = Spectrum::of_spread(&s, &geo);
        // 15 hyperplanes contain the block; the other 112 cut it in a line.
        assert_eq!(spec, Spectrum::from_multiplicities([(0, 112), (1, 15)]));
        assert!(spec.satisfies_standard_equations(1));
        assert_eq!(spec.to_string(), "(0^112 1^15)");
        let direct = HoleSpectrum::of_spread(&s);
        assert_eq!(direct, HoleSpectrum::from_multiplicities([(56, 15), (60, 112)]));
        assert_eq!(HoleSpectrum::from_block_spectrum(&spec, 1, 7).unwrap(), direct);
    }

    #[test]
    fn field_spread_prefixes_agree_with_predictions() {
        let geo = Geometry::new(7);
        let full = testutil::lifted_field_spread();
        for k in 0..=16 {
            let s = PartialSpread::new(full.blocks()[..k].to_vec()).unwrap();
            let spec = Spectrum::of_spread(&s, &geo);
            assert!(spec.satisfies_standard_equations(k), "size {k}");
            for h in geo.hyperplanes() {
                let inside = s.blocks().iter().filter(|b| h.contains(b)).count();
                assert_eq!(
                    s.hole_multiplicity(h),
                    predicted_hyperplane_holes(k, inside),
                    "size {k}"
                );
            }
            let n = s.hole_space().dim();
            assert_eq!(
                HoleSpectrum::from_block_spectrum(&spec, k, n).unwrap(),
                HoleSpectrum::of_spread(&s),
                "size {k}"
            );
        }
    }

    #[test]
    fn full_field_spread_hole_spectrum() {
        let s = testutil::lifted_field_spread();
        let geo = Geometry::new(7);
        let spec = Spectrum::of_spread(&s, &geo);
        assert_eq!(spec.to_string(), "(0^7 2^120)");
        let direct = HoleSpectrum::of_spread(&s);
        assert_eq!(direct.to_string(), "(7^15)");
        assert_eq!(HoleSpectrum::from_block_spectrum(&spec, 16, 4).unwrap(), direct);
    }

    #[test]
    fn transfer_matches_known_distributions() {
        // Size 17 with a solid of holes.
        let spec = Spectrum::from_multiplicities([(1, 7), (2, 112), (3, 8)]);
        let hs = HoleSpectrum::from_block_spectrum(&spec, 17, 4).unwrap();
        assert_eq!(hs, HoleSpectrum::from_multiplicities([(0, 1), (4, 14)]));
        // Size 16 with a five-dimensional hole space.
        let spec = Spectrum::from_multiplicities([(0, 3), (1, 12), (2, 108), (3, 4)]);
        let hs = HoleSpectrum::from_block_spectrum(&spec, 16, 5).unwrap();
        assert_eq!(hs, HoleSpectrum::from_multiplicities([(3, 1), (7, 27), (11, 3)]));
    }

    #[test]
    fn transfer_detects_inconsistent_input() {
        let spec = Spectrum::from_multiplicities([(0, 5), (1, 10), (2, 108), (3, 4)]);
        assert!(matches!(
            HoleSpectrum::from_block_spectrum(&spec, 16, 5),
            Err(Error::InexactTransfer { .. })
        ));
        // Consistent divisibility but wrong bookkeeping total.
        let spec = Spectrum::from_multiplicities([(0, 127)]);
        assert!(matches!(
            HoleSpectrum::from_block_spectrum(&spec, 16, 5),
            Err(Error::TransferTotal { .. })
        ));
    }

    #[test]
    fn sieve_identity_on_field_spread() {
        let s = testutil::lifted_field_spread();
        let full = Subspace::full(7);
        let geo = Geometry::new(7);
        for i in 0..10 {
            let w = geo.hyperplanes()[i].meet(&geo.hyperplanes()[i + 1]);
            assert_eq!(sieve_identity_holds(&s, &w, &full), Ok(true));
        }
        let b = &s.blocks()[0];
        let line = Subspace::span(&GF2Matrix::new(7, b.basis().row_words()[..2].to_vec()));
        let outside = Subspace::span(&GF2Matrix::new(7, vec![s.blocks()[1].basis().row_words()[0]]));
        assert_eq!(sieve_identity_holds(&s, &line, &b.join(&outside)), Ok(true));
        let point = Subspace::span(&GF2Matrix::new(7, b.basis().row_words()[..1].to_vec()));
        assert_eq!(sieve_identity_holds(&s, &point, b), Ok(true));
        assert_eq!(
            sieve_identity_holds(&s, b, b),
            Err(Error::SieveShape { wdim: 3, ydim: 3 })
        );
    }
}
