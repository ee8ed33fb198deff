use gf2core::Subspace;

use crate::Error;

/// A finite list of subspaces of F_2^v, each carrying an integer tag.
/// Configurations are compared up to the action of the invertible linear
/// maps; tags are preserved, so members with different tags can never be
/// exchanged. Words with equal tag form an unordered set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredConfiguration {
    v: usize,
    words: Vec<(u32, Subspace)>,
}

impl ColoredConfiguration {
    pub fn new(v: usize, words: Vec<(u32, Subspace)>) -> Result<ColoredConfiguration, Error> {
        if !(1..=7).contains(&v) {
            return Err(Error::UnsupportedAmbient { got: v });
        }
        for (index, (_, w)) in words.iter().enumerate() {
            if w.ambient() != v {
                return Err(Error::MixedAmbient { index, got: w.ambient(), expected: v });
            }
        }
        Ok(ColoredConfiguration { v, words })
    }

    /// All members under a single tag.
    pub fn plain(v: usize, members: &[Subspace]) -> Result<ColoredConfiguration, Error> {
        ColoredConfiguration::new(v, members.iter().map(|s| (0, s.clone())).collect())
    }

    pub fn ambient(&self) -> usize {
        self.v
    }

    pub fn words(&self) -> &[(u32, Subspace)] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The configuration of orthogonal complements, tags kept. Applying it
    /// twice gives back the original.
    pub fn dual(&self) -> ColoredConfiguration {
        ColoredConfiguration {
            v: self.v,
            words: self
                .words
                .iter()
                .map(|(t, w)| (*t, w.orthogonal_complement()))
                .collect(),
        }
    }

    /// Image under an invertible linear point permutation.
    pub fn transformed(&self, g: &crate::PointPerm) -> ColoredConfiguration {
        assert_eq!(g.ambient(), self.v);
        ColoredConfiguration {
            v: self.v,
            words: self
                .words
                .iter()
                .map(|(t, w)| {
                    (*t, Subspace::from_points(self.v, gf2core::PointSet::from_bits(g.apply_mask(w.points().bits()))))
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gf2core::GF2Matrix;

    #[test]
    fn ambient_validation() {
        let line = Subspace::span(&GF2Matrix::new(4, vec![8, 4]));
        assert!(ColoredConfiguration::new(4, vec![(0, line.clone())]).is_ok());
        assert_eq!(
            ColoredConfiguration::new(5, vec![(0, line.clone())]),
            Err(Error::MixedAmbient { index: 0, got: 4, expected: 5 })
        );
        assert_eq!(
            ColoredConfiguration::new(9, vec![]),
            Err(Error::UnsupportedAmbient { got: 9 })
        );
    }

    #[test]
    fn dual_is_an_involution() {
        let cfg = ColoredConfiguration::new(
            4,
            vec![
                (0, Subspace::span(&GF2Matrix::new(4, vec![8, 4]))),
                (1, Subspace::span(&GF2Matrix::new(4, vec![2]))),
            ],
        )
        .unwrap();
        assert_eq!(cfg.dual().dual(), cfg);
        assert_eq!(cfg.dual().words()[0].1.dim(), 2);
        assert_eq!(cfg.dual().words()[1].1.dim(), 3);
    }
}
