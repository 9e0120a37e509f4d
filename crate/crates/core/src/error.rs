use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected n = {expected}, got n = {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid cycle element: {0}")]
    InvalidElem(String),
    #[error("set is not admissible: {0}")]
    NotAdmissible(String),
    #[error("T({i},{j}) is not a wedge for the given set")]
    NotAWedge { i: usize, j: usize },
    #[error("permutation is not covexillary")]
    NotCovexillary,
    #[error("permutation is not smooth")]
    NotSmooth,
    #[error("permutation is smooth; no witness partition exists")]
    SmoothInput,
    #[error("grid set is not in the admissible class of grids")]
    NotInGridClass,
    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),
    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("transposition set is not downward closed")]
    NotDownwardClosed,
    #[error("input not contained in the block subgroup")]
    NotBlockwise,
    #[error("no maximum exists for the candidate set: {0}")]
    NoMaximum(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
