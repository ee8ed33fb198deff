//! Analysis of partial plane spreads in the projective geometry PG(6,2).
//!
//! A partial plane spread is a set of pairwise disjoint planes (3-dimensional
//! subspaces of the 7-dimensional binary vector space).  The points not
//! covered by any plane are its holes.  This crate computes hole sets,
//! hyperplane spectra, and the finer hole spectra, checks the counting
//! identities those distributions satisfy, and classifies the geometric shape
//! of the hole set for spreads of sizes 16 and 17.

mod spectrum;
mod spread;
mod structure;
#[cfg(test)]
mod testutil;

pub use spectrum::{
    predicted_hyperplane_holes, sieve_identity_holds, HoleSpectrum, Spectrum,
};
pub use spread::PartialSpread;
pub use structure::{classify_hole_structure, is_vector_space_partition, spread17_type, HoleStructure};

use thiserror::Error;

/// Errors from spread construction and hole analysis.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("block {index} has dimension {got}, expected a plane of dimension 3")]
    NotAPlane { index: usize, got: usize },
    #[error("block {index} lives in ambient dimension {got}, expected 7")]
    WrongAmbient { index: usize, got: usize },
    #[error("blocks {i} and {j} share a point")]
    OverlappingBlocks { i: usize, j: usize },
    #[error("hole structure classification applies to spreads of size 16 or 17, got {got}")]
    UnclassifiableSize { got: usize },
    #[error("sieve arguments must be nested subspaces with dimension gap 2, got {wdim} inside {ydim}")]
    SieveShape { wdim: usize, ydim: usize },
    #[error("hole spectrum entry {j} would need {numerator} hyperplanes split over {denominator}, which does not divide evenly")]
    InexactTransfer {
        j: usize,
        numerator: usize,
        denominator: usize,
    },
    #[error("transferred hole spectrum covers {got} hyperplanes of the hole space, expected {expected}")]
    TransferTotal { got: usize, expected: usize },
    #[error("hole set does not match any recognized structure")]
    UnrecognizedHoleStructure,
    #[error("meet distribution {got} is not one of the three admissible size-17 types")]
    UnexpectedMeetType { got: String },
}
