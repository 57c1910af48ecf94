//! Almost complex structures on the frame, the induced bigrading of forms,
//! the bidegree components of `d`, parity projectors and the Nijenhuis tensor.
//!
//! `J` is stored as its action on frame vectors: column `j` is `J e_j`. On
//! forms it acts by `(Jα)(v_1, …, v_k) = α(Jv_1, …, Jv_k)`, so on the
//! coefficient vectors of 1-forms it is the transpose `J^T`, and `(1,0)`-forms
//! are the `+i` eigenvectors of `J^T`.

use alloc::vec::Vec;

use crate::exterior::{Exterior, InvariantForm, LieAlgebra};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::model::GradedOp;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub p: usize,
    pub q: usize,
}

/// The four pieces of `d = μ + ∂ + ∂̄ + μ̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BidegreeComponent {
    Mu,
    Partial,
    PartialBar,
    MuBar,
}

impl BidegreeComponent {
    pub const ALL: [BidegreeComponent; 4] =
        [BidegreeComponent::Mu, BidegreeComponent::Partial, BidegreeComponent::PartialBar, BidegreeComponent::MuBar];

    /// Shift in `(p, q)`.
    pub fn shift(self) -> (isize, isize) {
        match self {
            BidegreeComponent::Mu => (2, -1),
            BidegreeComponent::Partial => (1, 0),
            BidegreeComponent::PartialBar => (0, 1),
            BidegreeComponent::MuBar => (-1, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BidegreeComponent::Mu => "mu",
            BidegreeComponent::Partial => "partial",
            BidegreeComponent::PartialBar => "partialbar",
            BidegreeComponent::MuBar => "mubar",
        }
    }
}

/// Forms whose components all have even (resp. odd) holomorphic degree `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(p: usize) -> Parity {
        if p % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisReport {
    /// `N(e_i, e_j)` in frame coordinates for `i < j` (0-based).
    pub table: Vec<((usize, usize), Vec<Scalar>)>,
    /// Rank of `μ̄` on `(1,0)`-forms.
    pub rank: usize,
}

impl NijenhuisReport {
    pub fn is_integrable(&self) -> bool {
        self.rank == 0
    }
}

/// An almost complex structure together with the complex coframe
/// `θ = (φ^1, …, φ^m, φ̄^1, …, φ̄^m)` and the change-of-basis matrices
/// between `θ`-words and `e`-words in every degree.
#[derive(Debug, Clone)]
pub struct AlmostComplex {
    ext: Exterior,
    j_frame: Matrix,
    coframe: Vec<Vec<Scalar>>,
    /// Column `A` of `c[k]` is the `e`-expansion of the `θ`-word `A`.
    c: Vec<Matrix>,
    c_inv: Vec<Matrix>,
    /// `(p, q)` of each `θ`-word, per degree.
    bideg: Vec<Vec<Bidegree>>,
    j_forms: Vec<Matrix>,
}

impl AlmostComplex {
    fn check_shape(ext: &Exterior, m: &Matrix) -> Result<()> {
        let n = ext.dim();
        if m.shape() != (n, n) {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
        }
        Ok(())
    }

    /// From the frame action of `J`; requires `J² = -Id` and a real matrix.
    pub fn from_frame(g: &LieAlgebra, j_frame: Matrix) -> Result<Self> {
        let ext = Exterior::new(g.dim());
        Self::check_shape(&ext, &j_frame)?;
        let n = ext.dim();
        if !j_frame.is_real() || &j_frame * &j_frame != -&Matrix::identity(n) {
            return Err(Error::NotAlmostComplex);
        }
        let jt = j_frame.transpose();
        let shifted = &jt - &Matrix::identity(n).scale(&Scalar::i());
        let coframe = shifted.kernel().basis().to_vec();
        Self::build(ext, j_frame, coframe)
    }

    /// From `m` complex covectors spanning the `(1,0)`-forms.
    pub fn from_coframe(g: &LieAlgebra, coframe: Vec<Vec<Scalar>>) -> Result<Self> {
        let ext = Exterior::new(g.dim());
        let n = ext.dim();
        let m = n / 2;
        if coframe.len() != m {
            return Err(Error::DegenerateCoframe(alloc::format!("expected {m} covectors, got {}", coframe.len())));
        }
        if coframe.iter().any(|v| v.len() != n) {
            return Err(Error::DegenerateCoframe(alloc::format!("covectors must have {n} components")));
        }
        let c1 = Self::theta_matrix(n, &coframe);
        let Ok(c1_inv) = c1.inverse() else {
            return Err(Error::DegenerateCoframe("covectors and their conjugates do not span the dual".into()));
        };
        let eig: Vec<Scalar> = (0..n).map(|a| if a < m { Scalar::i() } else { -Scalar::i() }).collect();
        let jt = &(&c1 * &Matrix::diagonal(&eig)) * &c1_inv;
        let j_frame = jt.transpose();
        if !j_frame.is_real() {
            return Err(Error::Internal("J reconstructed from a coframe is not real".into()));
        }
        Self::build(ext, j_frame, coframe)
    }

    fn theta_matrix(n: usize, coframe: &[Vec<Scalar>]) -> Matrix {
        let m = coframe.len();
        Matrix::from_fn(n, n, |r, a| if a < m { coframe[a][r].clone() } else { coframe[a - m][r].conj() })
    }

    fn build(ext: Exterior, j_frame: Matrix, coframe: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = ext.dim();
        let m = n / 2;
        let c1 = Self::theta_matrix(n, &coframe);
        let mut c = Vec::with_capacity(n + 1);
        let mut c_inv = Vec::with_capacity(n + 1);
        let mut bideg = Vec::with_capacity(n + 1);
        let mut j_forms = Vec::with_capacity(n + 1);
        let jt = j_frame.transpose();
        for k in 0..=n {
            let ck = ext.compound(&c1, k);
            let inv = ck.inverse().map_err(|_| Error::DegenerateCoframe("singular coframe".into()))?;
            c.push(ck);
            c_inv.push(inv);
            bideg.push(
                ext.basis(k)
                    .words()
                    .iter()
                    .map(|w| {
                        let p = w.indices().filter(|&a| a < m).count();
                        Bidegree { p, q: k - p }
                    })
                    .collect(),
            );
            j_forms.push(ext.compound(&jt, k));
        }
        let acs = AlmostComplex { ext, j_frame, coframe, c, c_inv, bideg, j_forms };
        // J must act on each θ-word of bidegree (p,q) as i^{p-q}
        for k in 0..=n {
            let diag: Vec<Scalar> = acs.bideg[k].iter().map(|b| Scalar::i_pow(b.p as i64 - b.q as i64)).collect();
            let via_theta = &(&acs.c[k] * &Matrix::diagonal(&diag)) * &acs.c_inv[k];
            if via_theta != acs.j_forms[k] {
                return Err(Error::DegenerateCoframe("coframe is not of type (1,0) for J".into()));
            }
        }
        Ok(acs)
    }

    pub fn exterior(&self) -> &Exterior {
        &self.ext
    }

    pub fn dim(&self) -> usize {
        self.ext.dim()
    }

    pub fn j_frame(&self) -> &Matrix {
        &self.j_frame
    }

    /// The `(1,0)`-covectors `φ^1, …, φ^m` as `e`-coefficient vectors.
    pub fn coframe(&self) -> &[Vec<Scalar>] {
        &self.coframe
    }

    /// `φ^a` (`a < m`) or `φ̄^{a-m}` as a form.
    pub fn theta(&self, a: usize) -> InvariantForm {
        let n = self.dim();
        InvariantForm::from_vector(n, 1, &self.c[1].column(a))
    }

    /// The form `θ^{a_1} ∧ … ∧ θ^{a_k}` for indices into `θ`.
    pub fn theta_word(&self, idx: &[usize]) -> InvariantForm {
        let n = self.dim();
        idx.iter().fold(InvariantForm::one(n), |acc, &a| acc.wedge(&self.theta(a)))
    }

    pub fn theta_basis(&self, k: usize) -> &Matrix {
        &self.c[k]
    }

    pub fn theta_basis_inv(&self, k: usize) -> &Matrix {
        &self.c_inv[k]
    }

    pub fn theta_bidegrees(&self, k: usize) -> &[Bidegree] {
        &self.bideg[k]
    }

    /// The `(1,0)`-forms as a subspace of `Λ^1`.
    pub fn lambda10(&self) -> Subspace {
        Subspace::span(self.dim(), self.coframe.clone()).expect("coframe length")
    }

    /// `J` on `Λ^k`.
    pub fn j_matrix(&self, k: usize) -> &Matrix {
        &self.j_forms[k]
    }

    pub fn j_op(&self) -> GradedOp {
        GradedOp::from_blocks(self.dim(), 0, self.j_forms.clone())
    }

    pub fn j_inv_op(&self) -> GradedOp {
        let blocks =
            (0..=self.dim()).map(|k| if k % 2 == 0 { self.j_forms[k].clone() } else { -&self.j_forms[k] }).collect();
        GradedOp::from_blocks(self.dim(), 0, blocks)
    }

    /// Conjugates an operator given in `θ` coordinates back to `e`
    /// coordinates, keeping only entries selected by `keep(row, col)`.
    fn masked(&self, theta_op: &[Matrix], shift: isize, keep: impl Fn(Bidegree, Bidegree) -> bool) -> GradedOp {
        let n = self.dim();
        let blocks = (0..=n)
            .map(|k| {
                let t = k as isize + shift;
                if t < 0 || t as usize > n {
                    return Matrix::zeros(0, self.ext.rank(k as isize));
                }
                let t = t as usize;
                let src = &self.bideg[k];
                let dst = &self.bideg[t];
                let m = &theta_op[k];
                let masked = Matrix::from_fn(m.rows(), m.cols(), |r, c| {
                    if keep(dst[r], src[c]) {
                        m.at(r, c).clone()
                    } else {
                        Scalar::zero()
                    }
                });
                &(&self.c[t] * &masked) * &self.c_inv[k]
            })
            .collect();
        GradedOp::from_blocks(n, shift, blocks)
    }

    fn to_theta(&self, op: &GradedOp) -> Vec<Matrix> {
        (0..=self.dim())
            .map(|k| {
                let t = k as isize + op.shift();
                let b = op.block(k);
                if t < 0 || t as usize > self.dim() {
                    b.clone()
                } else {
                    &(&self.c_inv[t as usize] * b) * &self.c[k]
                }
            })
            .collect()
    }

    /// The projector onto `Λ^{p,q}` (as a degree-preserving operator that is
    /// zero outside degree `p + q`).
    pub fn projector(&self, p: usize, q: usize) -> GradedOp {
        let id = GradedOp::identity(self.dim());
        let theta = self.to_theta(&id);
        let target = Bidegree { p, q };
        self.masked(&theta, 0, |r, c| r == target && c == target)
    }

    pub fn parity_projector(&self, which: Parity) -> GradedOp {
        let id = GradedOp::identity(self.dim());
        let theta = self.to_theta(&id);
        self.masked(&theta, 0, |r, c| r == c && Parity::of(c.p) == which)
    }

    /// The `(p,q)`-component of an operator of degree `shift` that moves
    /// bidegree by `(a, b)`.
    pub fn component_of(&self, op: &GradedOp, a: isize, b: isize) -> GradedOp {
        let theta = self.to_theta(op);
        self.masked(&theta, op.shift(), |r, c| r.p as isize == c.p as isize + a && r.q as isize == c.q as isize + b)
    }

    /// One of `μ, ∂, ∂̄, μ̄` from the full differential.
    pub fn bidegree_component(&self, d: &GradedOp, tag: BidegreeComponent) -> GradedOp {
        let (a, b) = tag.shift();
        self.component_of(d, a, b)
    }

    /// Whether `op` maps even forms to even forms and odd to odd (`even`), or
    /// swaps the two classes.
    pub fn has_parity(&self, op: &GradedOp, preserves: bool) -> bool {
        let theta = self.to_theta(op);
        (0..=self.dim()).all(|k| {
            let t = k as isize + op.shift();
            if t < 0 || t as usize > self.dim() {
                return true;
            }
            let (src, dst) = (&self.bideg[k], &self.bideg[t as usize]);
            let m = &theta[k];
            (0..m.rows())
                .all(|r| (0..m.cols()).all(|c| m.at(r, c).is_zero() || ((dst[r].p % 2 == src[c].p % 2) == preserves)))
        })
    }

    /// `N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]` on frame vectors, plus
    /// the rank of `μ̄` on `(1,0)`-forms.
    pub fn nijenhuis(&self, g: &LieAlgebra, d: &GradedOp) -> NijenhuisReport {
        let n = self.dim();
        let j = &self.j_frame;
        let mut table = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let x = Matrix::identity(n).column(a);
                let y = Matrix::identity(n).column(b);
                let jx = j.apply(&x);
                let jy = j.apply(&y);
                let t1 = g.bracket(&jx, &jy);
                let t2 = j.apply(&g.bracket(&jx, &y));
                let t3 = j.apply(&g.bracket(&x, &jy));
                let t4 = g.bracket(&x, &y);
                let v: Vec<Scalar> = (0..n).map(|i| &(&(&t1[i] - &t2[i]) - &t3[i]) - &t4[i]).collect();
                table.push(((a, b), v));
            }
        }
        let mubar = self.bidegree_component(d, BidegreeComponent::MuBar);
        let images: Vec<Vec<Scalar>> = self.coframe.iter().map(|v| mubar.block(1).apply(v)).collect();
        let rank = Subspace::span(self.ext.rank(2), images).expect("degree-2 vectors").dim();
        NijenhuisReport { table, rank }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn kt() -> LieAlgebra {
        LieAlgebra::from_brackets(4, &[(1, 2, 3, Scalar::one())]).unwrap()
    }

    fn kt_j() -> Matrix {
        // J e1 = e2, J e3 = e4
        let mut j = Matrix::zeros(4, 4);
        j.set(1, 0, Scalar::one()).unwrap();
        j.set(0, 1, -Scalar::one()).unwrap();
        j.set(3, 2, Scalar::one()).unwrap();
        j.set(2, 3, -Scalar::one()).unwrap();
        j
    }

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    #[test]
    fn kt_coframe() {
        let acs = AlmostComplex::from_frame(&kt(), kt_j()).unwrap();
        assert_eq!(acs.coframe(), &[vec![s(1), Scalar::i(), s(0), s(0)], vec![s(0), s(0), s(1), Scalar::i()]]);
    }

    #[test]
    fn coframe_roundtrip() {
        let g = kt();
        let a = AlmostComplex::from_frame(&g, kt_j()).unwrap();
        let b = AlmostComplex::from_coframe(&g, a.coframe().to_vec()).unwrap();
        assert_eq!(b.j_frame(), &kt_j());
    }

    #[test]
    fn real_covector_rejected() {
        let cf = vec![vec![s(1), s(0), s(0), s(0)], vec![s(0), s(0), s(1), Scalar::i()]];
        assert!(matches!(AlmostComplex::from_coframe(&kt(), cf), Err(Error::DegenerateCoframe(_))));
    }

    #[test]
    fn not_almost_complex() {
        assert_eq!(AlmostComplex::from_frame(&kt(), Matrix::identity(4)).unwrap_err(), Error::NotAlmostComplex);
    }

    #[test]
    fn projectors_partition_identity() {
        let acs = AlmostComplex::from_frame(&kt(), kt_j()).unwrap();
        let mut total = GradedOp::zero(4, 0);
        for k in 0..=4 {
            for p in 0..=k.min(2) {
                let q = k - p;
                if q > 2 {
                    continue;
                }
                let pr = acs.projector(p, q);
                assert_eq!(pr.compose(&pr), pr);
                total = total.add(&pr);
            }
        }
        assert_eq!(total, GradedOp::identity(4));
    }
}
