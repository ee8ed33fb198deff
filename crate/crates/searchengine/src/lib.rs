//! Exact combinatorial search for the spread construction pipelines.
//!
//! Three generic solvers do the heavy lifting: fixed-size clique
//! enumeration over compatibility graphs ([`enumerate_cliques`]), exact
//! cover via dancing links ([`solve_exact_cover`]), and disjoint-plane
//! packing with a bounded leftover ([`pack_disjoint_planes`]).  On top of
//! them sit the three searches that produce the catalogs:
//!
//! * [`classify_five_configurations`] and [`extend_to_17`] build all
//!   17-block partial plane spreads of `PG(6,2)` from a normalized
//!   five-block seed.
//! * [`starting_configurations`] and [`complete16_with_holeset`] build all
//!   16-block spreads whose holes form the seven-line star.
//! * [`extend_17_to_34`] pairs a 17-spread with 17 solids to form mixed
//!   dimension distance-5 subspace codes.
//!
//! Every search is deterministic: candidate orders are fixed, solver
//! tie-breaks are fixed, and results come out in a reproducible order.

mod bitset;
mod clique;
mod completion;
mod cover;
mod fiveconfig;
mod orbits;
mod packing;
mod solids;

pub use clique::{enumerate_cliques, CompatGraph};
pub use completion::{
    complete16_with_holeset, seven_lines_frame, starting_configurations, StartTriple,
};
pub use cover::{solve_exact_cover, CoverInstance};
pub use fiveconfig::{classify_five_configurations, extend_to_17, FiveConfiguration};
pub use packing::{pack_disjoint_planes, pack_disjoint_planes_affine};
pub use solids::extend_17_to_34;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cover row {row} is empty")]
    EmptyCoverRow { row: usize },
    #[error("cover row {row} uses points outside the universe")]
    CoverRowOutsideUniverse { row: usize },
    #[error(transparent)]
    Spread(#[from] spreadkit::Error),
    #[error("expected a hyperplane, got a subspace of dimension {got}")]
    NotAHyperplane { got: usize },
    #[error("the two hyperplanes must differ")]
    HyperplanesEqual,
    #[error("blocks per hyperplane must be 3/3 with 1 in the intersection, got {inner1}/{inner2} with {common}")]
    BlockSplit {
        inner1: usize,
        inner2: usize,
        common: usize,
    },
    #[error("expected the 15-point seven-line hole set")]
    WrongHoleSet,
    #[error("hyperplane must contain exactly 3 holes, got {got}")]
    WrongHyperplaneHoles { got: usize },
    #[error("start triple must be disjoint planes inside the hyperplane avoiding the holes")]
    BadStartTriple,
    #[error("expected a spread of {expected} planes, got {got}")]
    WrongSpreadSize { expected: usize, got: usize },
}
