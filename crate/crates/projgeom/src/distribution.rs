use std::collections::BTreeMap;
use std::fmt;

/// A multiset of subspace dimensions, e.g. `(3^16 4^1)` for sixteen planes
/// and one solid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimensionDistribution {
    counts: BTreeMap<usize, usize>,
}

impl DimensionDistribution {
    pub fn from_dims(dims: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = BTreeMap::new();
        for d in dims {
            *counts.entry(d).or_insert(0) += 1;
        }
        DimensionDistribution { counts }
    }

    /// dimension -> multiplicity, ascending by dimension.
    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, dim: usize) -> usize {
        self.counts.get(&dim).copied().unwrap_or(0)
    }

    /// Total number of members counted.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// The distribution after replacing every dimension k by v - k, which is
    /// what dualizing a subspace set does.
    pub fn dual(&self, v: usize) -> Self {
        DimensionDistribution {
            counts: self.counts.iter().map(|(&d, &m)| (v - d, m)).collect(),
        }
    }
}

impl fmt::Display for DimensionDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (dim, mult)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{dim}^{mult}")?;
        }
        write!(f, ")")
    }
}
