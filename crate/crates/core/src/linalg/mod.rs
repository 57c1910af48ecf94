//! Exact linear algebra over the Gaussian rationals.

mod matrix;
mod scalar;
mod subspace;

use thiserror::Error;

pub use matrix::{gram_adjoint, Echelon, Matrix};
pub use scalar::{fmt_rational, rational_sqrt, ParseScalarError, Scalar};
pub use subspace::{Quotient, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("index ({}, {}) out of bounds for {}x{} matrix", .index.0, .index.1, .shape.0, .shape.1)]
    OutOfBounds { index: (usize, usize), shape: (usize, usize) },

    #[error("shape mismatch: expected {}x{}, found {}x{}", .expected.0, .expected.1, .found.0, .found.1)]
    Shape { expected: (usize, usize), found: (usize, usize) },

    #[error("matrix is not square ({}x{})", .0.0, .0.1)]
    NotSquare((usize, usize)),

    #[error("matrix is singular")]
    Singular,

    #[error("gram matrix is not Hermitian")]
    NotHermitian,

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("vector of length {found} in ambient space of dimension {ambient}")]
    VectorLength { ambient: usize, found: usize },

    #[error("subspace is not contained in the total space")]
    NotContained,
}
