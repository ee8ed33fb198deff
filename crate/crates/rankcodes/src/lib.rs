//! Rank-metric codes over GF(2) and their subspace-code counterparts.
//!
//! A rank-metric code is a set of m×n binary matrices with the rank of the
//! difference as distance.  Lifting each word A to the row space of (I | A)
//! turns such a code into a set of m-dimensional subspaces of an
//! (m+n)-dimensional space, doubling distances.  This crate implements the
//! distance machinery, the maximum-rank-distance size bound, the lift and
//! its inverse, the matrix form of inner automorphisms, and the passage
//! between 3×4 codes and plane spreads of PG(6,2) whose holes fill a solid.

mod code;
mod inner;
mod lift;
mod parse;

pub use code::{rank_distance, RankCode};
pub use inner::{inner_automorphism_group, InnerAut};
pub use lift::{lift, mrd_from_spread, unlift};
pub use parse::read_matrix_lists;

use thiserror::Error;

/// Errors from code construction, lifting and parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("word {index} is {got_rows}x{got_cols}, expected {rows}x{cols}")]
    WordShape {
        index: usize,
        got_rows: usize,
        got_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("words {i} and {j} are identical")]
    DuplicateWord { i: usize, j: usize },
    #[error("rank distance needs equal shapes, got {a_rows}x{a_cols} and {b_rows}x{b_cols}")]
    DistanceShape {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },
    #[error("minimum distance needs at least 2 words, got {got}")]
    TooFewWords { got: usize },
    #[error("lifting a {rows}x{cols} code needs rows + cols = 7")]
    LiftAmbient { rows: usize, cols: usize },
    #[error("matrix {name} of shape {got_rows}x{got_cols} does not fit a {rows}x{cols} code")]
    AutShape {
        name: char,
        got_rows: usize,
        got_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix {name} is singular")]
    SingularAut { name: char },
    #[error("block {index} has dimension {got}, expected {expected}")]
    BlockDim {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("block {index} meets the distinguished subspace nontrivially")]
    BlockMeetsTarget { index: usize },
    #[error("spread has {got} blocks, expected 16")]
    WrongSpreadSize { got: usize },
    #[error("hole span has dimension {got}, expected a solid of dimension 4")]
    HoleSpanDim { got: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error(transparent)]
    Configuration(#[from] isomorph::Error),
}
