use thiserror::Error;

use crate::grid::GridPoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index s{index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("window {0:?} is not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("root e{0}-e{1} is not positive")]
    NotPositive(usize, usize),
    #[error("invalid root e{0}-e{1} for S_{2}")]
    InvalidRoot(usize, usize, usize),
    #[error("empty lattice path")]
    EmptyPath,
    #[error("invalid step character {0:?} at offset {1}")]
    InvalidStep(char, usize),
    #[error("point {0} is not in the Ferrers region")]
    PointOutsideRegion(GridPoint),
    #[error("node {0} is not an ascent of the tree")]
    NotAnAscent(GridPoint),
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("position {0} cannot be flipped")]
    NotFlippable(usize),
    #[error("{0:?} is not a facet of the subword complex")]
    NotAFacet(Vec<usize>),
    #[error("point set is not a nu-tree")]
    NotATree,
    #[error("vector length {found} does not match expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("path must start with N and end with E (use normalization)")]
    NotNormalized,
    #[error("path has consecutive north steps at offset {0}")]
    ConsecutiveNorth(usize),
    #[error("first/last brick coordinates ({first}, {last}) differ from the path constants ({want_first}, {want_last})")]
    NonConstantEnds { first: i64, last: i64, want_first: i64, want_last: i64 },
    #[error("tie in the minimizing functional between trees {0} and {1}")]
    FunctionalTie(usize, usize),
    #[error("tree has no node on horizontal line {0}")]
    EmptyLevel(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
