use thiserror::Error;

use crate::grid::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty cell set")]
    EmptyInput,
    #[error("cell set is not 4-connected")]
    NotConnected,
    #[error("duplicate cell ({}, {})", .0.x, .0.y)]
    DuplicateCell(Cell),
    #[error("size {value} out of range [{min}, {max}]")]
    SizeOutOfRange { value: usize, min: usize, max: usize },
    #[error("level h={h} out of range [2, {max}]")]
    LevelOutOfRange { h: usize, max: usize },
    #[error("polyomino is a rectangle")]
    IsRectangle,
    #[error("construction failed self-verification: {0}")]
    ConstructionFailed(String),
    #[error("vertex set is not a subset of the ground set")]
    NotASubset,
    #[error("hypergraph too large for the brute-force oracle ({edges} edges, {ground} vertices)")]
    ScaleExceeded { edges: usize, ground: usize },
    #[error("polyomino has {0} cells; the witness search supports at most 128")]
    TooLarge(usize),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
