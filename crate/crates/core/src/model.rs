//! Graded operators on the invariant complex and the model that bundles a
//! Lie algebra with its almost complex, metric and symplectic data.

use alloc::string::String;
use alloc::vec::Vec;

use crate::almost_complex::{AlmostComplex, BidegreeComponent, Parity};
use crate::exterior::{Exterior, InvariantForm, LieAlgebra};
use crate::hermitian::{Metric, Symplectic};
use crate::linalg::{gram_adjoint, Matrix, Scalar};
use crate::{Error, Result};

/// An operator `Λ^• → Λ^{•+shift}` stored as one matrix per source degree.
/// Blocks whose target degree is out of range have zero rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedOp {
    n: usize,
    shift: isize,
    blocks: Vec<Matrix>,
}

fn binom(n: usize, k: isize) -> usize {
    if k < 0 || k as usize > n {
        return 0;
    }
    let k = k as usize;
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl GradedOp {
    pub fn from_blocks(n: usize, shift: isize, blocks: Vec<Matrix>) -> Self {
        assert_eq!(blocks.len(), n + 1, "one block per degree");
        for (k, b) in blocks.iter().enumerate() {
            assert_eq!(b.shape(), (binom(n, k as isize + shift), binom(n, k as isize)), "block shape in degree {k}");
        }
        GradedOp { n, shift, blocks }
    }

    pub fn zero(n: usize, shift: isize) -> Self {
        let blocks = (0..=n).map(|k| Matrix::zeros(binom(n, k as isize + shift), binom(n, k as isize))).collect();
        GradedOp { n, shift, blocks }
    }

    pub fn identity(n: usize) -> Self {
        GradedOp { n, shift: 0, blocks: (0..=n).map(|k| Matrix::identity(binom(n, k as isize))).collect() }
    }

    /// Multiplication by `(-1)^k` on `Λ^k`.
    pub fn degree_sign(n: usize) -> Self {
        let blocks = (0..=n)
            .map(|k| {
                let id = Matrix::identity(binom(n, k as isize));
                if k % 2 == 0 {
                    id
                } else {
                    -&id
                }
            })
            .collect();
        GradedOp { n, shift: 0, blocks }
    }

    /// Applies `f(k, block)` to every block, keeping the shift.
    pub fn map_blocks(&self, mut f: impl FnMut(usize, &Matrix) -> Matrix) -> Self {
        let blocks = self.blocks.iter().enumerate().map(|(k, b)| f(k, b)).collect();
        GradedOp::from_blocks(self.n, self.shift, blocks)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> isize {
        self.shift
    }

    pub fn block(&self, k: usize) -> &Matrix {
        &self.blocks[k]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    fn target(&self, k: usize) -> Option<usize> {
        let t = k as isize + self.shift;
        (t >= 0 && t as usize <= self.n).then_some(t as usize)
    }

    /// `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &GradedOp) -> GradedOp {
        assert_eq!(self.n, rhs.n, "operator dimension");
        let shift = self.shift + rhs.shift;
        let blocks = (0..=self.n)
            .map(|k| match rhs.target(k) {
                Some(t) => &self.blocks[t] * &rhs.blocks[k],
                None => Matrix::zeros(binom(self.n, k as isize + shift), binom(self.n, k as isize)),
            })
            .collect();
        GradedOp::from_blocks(self.n, shift, blocks)
    }

    pub fn add(&self, rhs: &GradedOp) -> GradedOp {
        assert_eq!((self.n, self.shift), (rhs.n, rhs.shift), "operator sum degree");
        let blocks = self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a + b).collect();
        GradedOp { n: self.n, shift: self.shift, blocks }
    }

    pub fn sub(&self, rhs: &GradedOp) -> GradedOp {
        assert_eq!((self.n, self.shift), (rhs.n, rhs.shift), "operator difference degree");
        let blocks = self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a - b).collect();
        GradedOp { n: self.n, shift: self.shift, blocks }
    }

    pub fn scale(&self, s: &Scalar) -> GradedOp {
        GradedOp { n: self.n, shift: self.shift, blocks: self.blocks.iter().map(|b| b.scale(s)).collect() }
    }

    pub fn neg(&self) -> GradedOp {
        self.scale(&-Scalar::one())
    }

    /// Anticommutator `AB + BA`.
    pub fn anticommutator(&self, rhs: &GradedOp) -> GradedOp {
        self.compose(rhs).add(&rhs.compose(self))
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, rhs: &GradedOp) -> GradedOp {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn conj(&self) -> GradedOp {
        GradedOp { n: self.n, shift: self.shift, blocks: self.blocks.iter().map(Matrix::conj).collect() }
    }

    /// Applies the operator to a homogeneous form.
    pub fn apply(&self, alpha: &InvariantForm) -> InvariantForm {
        let k = alpha.degree();
        match self.target(k) {
            Some(t) => InvariantForm::from_vector(self.n, t, &self.blocks[k].apply(&alpha.to_vector())),
            None => InvariantForm::zero(self.n, k),
        }
    }

    /// Hermitian adjoint with respect to per-degree Gram matrices.
    pub fn adjoint(&self, grams: &[Matrix]) -> Result<GradedOp> {
        let shift = -self.shift;
        let blocks = (0..=self.n)
            .map(|j| {
                let t = j as isize + shift;
                if t < 0 || t as usize > self.n {
                    return Ok(Matrix::zeros(0, binom(self.n, j as isize)));
                }
                let t = t as usize;
                Ok(gram_adjoint(&self.blocks[t], &grams[t], &grams[j])?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedOp::from_blocks(self.n, shift, blocks))
    }

    /// `-* P̄ *` blockwise, for real star blocks `star[k]: Λ^k → Λ^{n-k}`.
    /// Equals the Hermitian adjoint for `d`, `d^c` and `δ`, but does not
    /// reverse compositions, so it differs from it on `dd^c` and the like.
    pub fn star_adjoint(&self, star: &[Matrix]) -> GradedOp {
        let n = self.n as isize;
        let shift = -self.shift;
        let blocks = (0..=self.n)
            .map(|j| {
                let t = j as isize + shift;
                if t < 0 || t > n {
                    return Matrix::zeros(0, binom(self.n, j as isize));
                }
                let mid = &self.blocks[self.n - j].conj() * &star[j];
                -&(&star[(n - t) as usize] * &mid)
            })
            .collect();
        GradedOp::from_blocks(self.n, shift, blocks)
    }
}

/// How adjoints of composite operators enter harmonic characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AdjointConvention {
    /// `P^* = -* P̄ *` for every `P`, composite or not.
    #[default]
    Star,
    /// The Hermitian adjoint for the metric.
    Gram,
}

/// Outcome of one named consistency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, detail: String::new() }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

/// A Lie algebra with an almost complex structure, and optionally a
/// compatible metric and a symplectic form, with all first-order operators
/// assembled.
#[derive(Debug, Clone)]
pub struct InvariantModel {
    algebra: LieAlgebra,
    acs: AlmostComplex,
    d: GradedOp,
    dc: GradedOp,
    components: [GradedOp; 4],
    metric: Option<Metric>,
    symplectic: Option<Symplectic>,
    convention: AdjointConvention,
}

impl InvariantModel {
    pub fn new(algebra: LieAlgebra, acs: AlmostComplex) -> Result<Self> {
        let algebra = algebra.validate()?;
        let n = algebra.dim();
        if acs.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: acs.dim() });
        }
        let d = GradedOp::from_blocks(n, 1, (0..=n).map(|k| algebra.d_matrix(k)).collect());
        let dc = acs.j_inv_op().compose(&d).compose(&acs.j_op());
        let components = BidegreeComponent::ALL.map(|t| acs.bidegree_component(&d, t));
        Ok(InvariantModel {
            algebra,
            acs,
            d,
            dc,
            components,
            metric: None,
            symplectic: None,
            convention: AdjointConvention::default(),
        })
    }

    /// Attaches a metric; the algebra must be unimodular for Gram adjoints to
    /// model adjoints on the quotient.
    pub fn with_metric(mut self, metric: Metric) -> Result<Self> {
        self.algebra.unimodular_check()?;
        if metric.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: metric.dim() });
        }
        if !metric.is_compatible(self.acs.j_frame()) {
            return Err(Error::IncompatibleMetric);
        }
        self.metric = Some(metric);
        Ok(self)
    }

    pub fn with_symplectic(mut self, symplectic: Symplectic) -> Result<Self> {
        if symplectic.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: symplectic.dim() });
        }
        self.symplectic = Some(symplectic);
        Ok(self)
    }

    pub fn with_adjoint_convention(mut self, convention: AdjointConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn adjoint_convention(&self) -> AdjointConvention {
        self.convention
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn m(&self) -> usize {
        self.dim() / 2
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn acs(&self) -> &AlmostComplex {
        &self.acs
    }

    pub fn exterior(&self) -> &Exterior {
        self.acs.exterior()
    }

    pub fn metric(&self) -> Result<&Metric> {
        self.metric.as_ref().ok_or(Error::MissingMetric)
    }

    pub fn symplectic(&self) -> Result<&Symplectic> {
        self.symplectic.as_ref().ok_or(Error::MissingSymplectic)
    }

    pub fn has_metric(&self) -> bool {
        self.metric.is_some()
    }

    pub fn has_symplectic(&self) -> bool {
        self.symplectic.is_some()
    }

    pub fn d(&self) -> &GradedOp {
        &self.d
    }

    /// `d^c = J^{-1} d J`.
    pub fn dc(&self) -> &GradedOp {
        &self.dc
    }

    pub fn component(&self, tag: BidegreeComponent) -> &GradedOp {
        &self.components[tag as usize]
    }

    /// `δ = ∂ + μ̄`.
    pub fn delta(&self) -> GradedOp {
        self.component(BidegreeComponent::Partial).add(self.component(BidegreeComponent::MuBar))
    }

    /// `δ̄ = ∂̄ + μ`.
    pub fn deltabar(&self) -> GradedOp {
        self.component(BidegreeComponent::PartialBar).add(self.component(BidegreeComponent::Mu))
    }

    pub fn j(&self) -> GradedOp {
        self.acs.j_op()
    }

    pub fn ddc(&self) -> GradedOp {
        self.d.compose(&self.dc)
    }

    pub fn dcd(&self) -> GradedOp {
        self.dc.compose(&self.d)
    }

    /// `dd^c + d^cd`, whose kernel defines the complex `B^•`.
    pub fn ddc_plus_dcd(&self) -> GradedOp {
        self.d.anticommutator(&self.dc)
    }

    pub fn parity(&self, which: Parity) -> GradedOp {
        self.acs.parity_projector(which)
    }

    /// Hodge star blocks `Λ^k → Λ^{n-k}`.
    pub fn star(&self) -> Result<&[Matrix]> {
        Ok(self.metric()?.star())
    }

    pub fn grams(&self) -> Result<&[Matrix]> {
        Ok(self.metric()?.grams())
    }

    pub fn adjoint(&self, op: &GradedOp) -> Result<GradedOp> {
        op.adjoint(self.grams()?)
    }

    /// The adjoint used in harmonic characterizations, per the model's
    /// [`AdjointConvention`].
    pub fn char_adjoint(&self, op: &GradedOp) -> Result<GradedOp> {
        match self.convention {
            AdjointConvention::Star => Ok(op.star_adjoint(self.star()?)),
            AdjointConvention::Gram => self.adjoint(op),
        }
    }

    pub fn lefschetz(&self) -> Result<&GradedOp> {
        Ok(self.symplectic()?.l())
    }

    pub fn lambda(&self) -> Result<&GradedOp> {
        Ok(self.symplectic()?.lambda())
    }

    /// `d^Λ = dΛ - Λd`.
    pub fn d_lambda(&self) -> Result<GradedOp> {
        Ok(self.d.commutator(self.lambda()?))
    }

    /// Whether `dω = 0` for the attached symplectic form.
    pub fn omega_closed(&self) -> Result<bool> {
        Ok(self.algebra.d(self.symplectic()?.omega()).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(6, 3), 20);
        assert_eq!(binom(4, -1), 0);
        assert_eq!(binom(4, 5), 0);
    }

    #[test]
    fn identity_composes() {
        let id = GradedOp::identity(4);
        assert_eq!(id.compose(&id), id);
        assert!(GradedOp::zero(4, 1).compose(&id).is_zero());
    }
}
