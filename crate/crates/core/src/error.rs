use alloc::string::String;

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("dimension must be even and positive, got {0}")]
    OddDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("structure constants violate the Jacobi identity on (e{}, e{}, e{})", .0 + 1, .1 + 1, .2 + 1)]
    Jacobi(usize, usize, usize),

    #[error("structure constants are not antisymmetric at [e{}, e{}]", .0 + 1, .1 + 1)]
    NotAntisymmetric(usize, usize),

    #[error("Lie algebra is not unimodular: tr ad(e{}) != 0", .0 + 1)]
    NotUnimodular(usize),

    #[error("J does not square to -Id")]
    NotAlmostComplex,

    #[error("degenerate (1,0)-coframe: {0}")]
    DegenerateCoframe(String),

    #[error("metric is not J-compatible")]
    IncompatibleMetric,

    #[error("metric gram is not real symmetric positive-definite")]
    NotPositiveDefinite,

    #[error("volume factor sqrt(det g) is not rational")]
    IrrationalVolume,

    #[error("symplectic form is degenerate")]
    DegenerateSymplectic,

    #[error("symplectic form is not closed")]
    NotClosed,

    #[error("operation needs a metric")]
    MissingMetric,

    #[error("operation needs a symplectic form")]
    MissingSymplectic,

    #[error("structure is not almost Kaehler: {0}")]
    NotAlmostKaehler(String),

    #[error("unsupported bidegree ({0},{1})")]
    UnsupportedBidegree(usize, usize),

    #[error("degree {0} out of range")]
    DegreeOutOfRange(usize),

    #[error("form is not in the expected subspace: {0}")]
    NotInSubspace(String),

    #[error("invalid operator word: {0}")]
    InvalidWord(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
