//! Exact invariant-form models of the cohomologies and harmonic spaces of
//! almost complex Lie-group quotients.
//!
//! Everything here works on the finite-dimensional complex of left-invariant
//! forms, i.e. the exterior algebra of the dual of a Lie algebra, with
//! Gaussian-rational coefficients. No floating point is used anywhere; every
//! dimension and every subspace is computed exactly and in a canonical form.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod almost_complex;
pub mod coeff_ext;
pub mod cohomology;
mod error;
pub mod exterior;
pub mod harmonic;
pub mod hermitian;
pub mod identities;
pub mod linalg;
pub mod model;

pub use almost_complex::{AlmostComplex, Bidegree, BidegreeComponent, NijenhuisReport, Parity};
pub use coeff_ext::{ExtendedComplex, ExtendedForm, ExtendedOp, FunctionModule};
pub use cohomology::{BComplex, CComplex, CohomologyEngine, CohomologySpace, CohomologyTag, ComplexTag};
pub use error::Error;
pub use exterior::{Exterior, FormBasis, IndexWord, InvariantForm, LieAlgebra};
pub use harmonic::{HTable, HarmonicOp, HarmonicSpace, OperatorWord};
pub use hermitian::{Metric, Symplectic};
pub use linalg::{Matrix, Quotient, Scalar, Subspace};
pub use model::{AdjointConvention, Check, GradedOp, InvariantModel};

pub type Result<T, E = Error> = core::result::Result<T, E>;
