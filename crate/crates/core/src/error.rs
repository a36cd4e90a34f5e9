use thiserror::Error;

use crate::g2lie::HilbertTable;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cannot parse field element {0:?}")]
    Parse(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error("not immersed: N_f not locally free in this presentation")]
    NotImmersed,

    #[error("join is not a scroll presentation")]
    JoinNotScroll,

    #[error(
        "quadric space did not stabilize within {cap} samples (kernel dimensions {history:?})"
    )]
    NonStabilizing { cap: usize, history: Vec<usize> },

    #[error("no diagonal correction of the Weyl lift exists over Q(i)")]
    NoDiagonalCorrection,

    #[error(
        "Hilbert function of the fixed locus in {locus} differs from 6k+1 (h = {h:?}): {table:?}"
    )]
    HilbertMismatch {
        locus: &'static str,
        h: Vec<String>,
        table: Box<HilbertTable>,
    },
}
