//! Canonical forms and symmetry groups for tagged subspace configurations
//! over F_2, compared up to the action of the invertible linear maps.
//!
//! A configuration is a list of subspaces with integer tags; two
//! configurations are isomorphic when a linear map carries the one word
//! set to the other, tag for tag. Canonical keys are computed with an
//! individualization-refinement search working directly on the nonzero
//! points, so equal keys mean isomorphic and vice versa. Automorphism
//! groups fall out of the same search; their orders come from a
//! Schreier-Sims stabilizer chain.

mod canon;
mod config;
mod group;
mod perm;

pub use canon::{
    are_isomorphic, canonical_key, canonicalize, duality_folded_key, is_iso_dual,
    AutomorphismGroup, Canonical, CanonicalKey,
};
pub use config::ColoredConfiguration;
pub use group::PermutationGroup;
pub use perm::PointPerm;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension {got} is outside the supported range 1..=7")]
    UnsupportedAmbient { got: usize },
    #[error("word {index} lives in ambient dimension {got}, expected {expected}")]
    MixedAmbient { index: usize, got: usize, expected: usize },
}
