//! Metrics, the Hodge star and the Lefschetz operators of a symplectic form.
//!
//! A metric is a real symmetric positive-definite Gram matrix `G` on the
//! frame, `g(X, Y) = X^T G Y`. The induced Hermitian product on `k`-forms has
//! Gram matrix `compound_k(G^{-1})`, and `e^1 ∧ … ∧ e^n` is positively
//! oriented.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exterior::{Exterior, IndexWord, InvariantForm};
use crate::linalg::{rational_sqrt, Matrix, Scalar, Subspace};
use crate::model::GradedOp;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    n: usize,
    gram: Matrix,
    grams: Vec<Matrix>,
    volume: BigRational,
    /// `star[k]: Λ^k → Λ^{n-k}`.
    star: Vec<Matrix>,
}

impl Metric {
    pub fn new(gram: Matrix) -> Result<Self> {
        let n = gram.rows();
        if !gram.is_square() || gram.transpose() != gram || !gram.is_real() || !gram.is_hermitian_psd(true) {
            return Err(Error::NotPositiveDefinite);
        }
        let det = gram.determinant()?;
        let volume = rational_sqrt(det.re()).ok_or(Error::IrrationalVolume)?;
        let ext = Exterior::new(n);
        let inv = gram.inverse()?;
        let grams: Vec<Matrix> = (0..=n).map(|k| ext.compound(&inv, k)).collect();
        let vol = Scalar::real(volume.clone());
        let star = (0..=n)
            .map(|k| {
                let src = ext.basis(k);
                let dst = ext.basis(n - k);
                let mut s = Matrix::zeros(dst.len(), src.len());
                for (r, &w) in src.words().iter().enumerate() {
                    let wc = w.complement(n);
                    let (sign, _) = w.wedge(wc).expect("disjoint");
                    let row = dst.index_of(wc).expect("basis word");
                    let f = if sign > 0 { vol.clone() } else { -&vol };
                    for c in 0..src.len() {
                        let gv = grams[k].at(r, c);
                        if !gv.is_zero() {
                            *s.at_mut(row, c) = &f * gv;
                        }
                    }
                }
                s
            })
            .collect();
        Ok(Metric { n, gram, grams, volume, star })
    }

    pub fn identity(n: usize) -> Self {
        Metric::new(Matrix::identity(n)).expect("identity is a metric")
    }

    /// `s + J^T s J`, compatible with `J` for any positive-definite `s`.
    pub fn averaged(s: &Matrix, j_frame: &Matrix) -> Result<Self> {
        Metric::new(s + &(&j_frame.transpose() * &(s * j_frame)))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Gram matrices of the Hermitian product on `Λ^0, …, Λ^n`.
    pub fn grams(&self) -> &[Matrix] {
        &self.grams
    }

    /// `sqrt(det G)`, the coefficient of the volume form on `e^{1…n}`.
    pub fn volume(&self) -> &BigRational {
        &self.volume
    }

    pub fn star(&self) -> &[Matrix] {
        &self.star
    }

    pub fn star_apply(&self, alpha: &InvariantForm) -> InvariantForm {
        let k = alpha.degree();
        InvariantForm::from_vector(self.n, self.n - k, &self.star[k].apply(&alpha.to_vector()))
    }

    /// `g(J·, J·) = g`.
    pub fn is_compatible(&self, j_frame: &Matrix) -> bool {
        j_frame.shape() == self.gram.shape() && &j_frame.transpose() * &(&self.gram * j_frame) == self.gram
    }

    /// `⟨α, β⟩ = β^H G_k α`.
    pub fn inner(&self, alpha: &InvariantForm, beta: &InvariantForm) -> Scalar {
        if alpha.degree() != beta.degree() {
            return Scalar::zero();
        }
        let a = self.grams[alpha.degree()].apply(&alpha.to_vector());
        beta.to_vector().iter().zip(&a).map(|(b, x)| &b.conj() * x).sum()
    }
}

/// A nondegenerate invariant 2-form with its Lefschetz operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symplectic {
    omega: InvariantForm,
    w: Matrix,
    l: GradedOp,
    lambda: GradedOp,
}

impl Symplectic {
    pub fn new(omega: InvariantForm) -> Result<Self> {
        let n = omega.dim();
        if omega.degree() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: omega.degree() });
        }
        let mut w = Matrix::zeros(n, n);
        for (word, c) in omega.terms() {
            let ij: Vec<usize> = word.indices().collect();
            *w.at_mut(ij[0], ij[1]) = c.clone();
            *w.at_mut(ij[1], ij[0]) = -c;
        }
        let w_inv = w.inverse().map_err(|_| Error::DegenerateSymplectic)?;
        let q = w_inv.transpose();
        let ext = Exterior::new(n);
        let l = GradedOp::from_blocks(n, 2, (0..=n).map(|k| ext.wedge_left_matrix(&omega, k)).collect());
        // Λ = Σ_{i<j} Q_ij ι_{e_j} ι_{e_i}
        let lambda_blocks = (0..=n)
            .map(|k| {
                if k < 2 {
                    return Matrix::zeros(0, ext.rank(k as isize));
                }
                let mut acc = Matrix::zeros(ext.rank(k as isize - 2), ext.rank(k as isize));
                for i in 0..n {
                    for j in i + 1..n {
                        let qij = q.at(i, j);
                        if qij.is_zero() {
                            continue;
                        }
                        let t = &ext.interior_matrix(j, k - 1) * &ext.interior_matrix(i, k);
                        acc = &acc + &t.scale(qij);
                    }
                }
                acc
            })
            .collect();
        let lambda = GradedOp::from_blocks(n, -2, lambda_blocks);
        Ok(Symplectic { omega, w, l, lambda })
    }

    pub fn dim(&self) -> usize {
        self.omega.dim()
    }

    pub fn omega(&self) -> &InvariantForm {
        &self.omega
    }

    /// `W_ij = ω(e_i, e_j)`.
    pub fn matrix(&self) -> &Matrix {
        &self.w
    }

    pub fn l(&self) -> &GradedOp {
        &self.l
    }

    pub fn lambda(&self) -> &GradedOp {
        &self.lambda
    }

    /// `ω(JX, JY) = ω(X, Y)`.
    pub fn is_j_invariant(&self, j_frame: &Matrix) -> bool {
        &j_frame.transpose() * &(&self.w * j_frame) == self.w
    }

    /// The metric `g(X, Y) = ω(X, JY)`, i.e. Gram `W J`.
    pub fn compatible_metric(&self, j_frame: &Matrix) -> Result<Metric> {
        if !self.is_j_invariant(j_frame) {
            return Err(Error::IncompatibleMetric);
        }
        Metric::new(&self.w * j_frame)
    }

    /// Primitive forms of degree `k`, i.e. `ker Λ ∩ Λ^k`.
    pub fn primitive(&self, k: usize) -> Subspace {
        self.lambda.block(k).kernel()
    }

    /// Writes `α = Σ_j L^j P_{k-2j}` with each `P` primitive. Returns the
    /// nonzero pieces as `(j, P)`.
    pub fn primitive_decomposition(&self, alpha: &InvariantForm) -> Result<Vec<(usize, InvariantForm)>> {
        let n = self.dim();
        let k = alpha.degree();
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        let mut owners: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for j in 0..=k / 2 {
            let s = k - 2 * j;
            let prim = self.primitive(s);
            for b in prim.basis() {
                let mut v = b.clone();
                for step in 0..j {
                    v = self.l.block(s + 2 * step).apply(&v);
                }
                cols.push(v);
                owners.push((j, b.clone()));
            }
        }
        let target = alpha.to_vector();
        let m = Matrix::from_columns(target.len(), &cols)?;
        let x = m.solve(&target).ok_or_else(|| Error::Internal("Lefschetz decomposition failed".into()))?;
        let mut out: Vec<(usize, InvariantForm)> = Vec::new();
        for ((j, b), c) in owners.into_iter().zip(x) {
            if c.is_zero() {
                continue;
            }
            let piece = InvariantForm::from_vector(n, k - 2 * j, &b).scale(&c);
            match out.iter_mut().find(|(jj, _)| *jj == j) {
                Some((_, p)) => *p = p.add(&piece),
                None => out.push((j, piece)),
            }
        }
        out.retain(|(_, p)| !p.is_zero());
        Ok(out)
    }
}

/// The form `e^{1…n}` scaled by `sqrt(det G)`.
pub fn volume_form(metric: &Metric) -> InvariantForm {
    let n = metric.dim();
    let mut f = InvariantForm::zero(n, n);
    if !metric.volume().is_zero() {
        f.add_term(IndexWord::EMPTY.complement(n), Scalar::real(metric.volume().clone()));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(i: &[usize]) -> InvariantForm {
        InvariantForm::word(4, IndexWord::from_indices(i).unwrap())
    }

    fn omega() -> InvariantForm {
        w(&[0, 1]).add(&w(&[2, 3]))
    }

    #[test]
    fn star_basics() {
        let g = Metric::identity(4);
        assert_eq!(g.star_apply(&InvariantForm::one(4)).to_string(), "e1234");
        assert_eq!(g.star_apply(&w(&[0, 1])).to_string(), "e34");
        assert_eq!(g.star_apply(&omega()), omega());
        assert_eq!(g.star_apply(&w(&[0, 2])).to_string(), "-e24");
    }

    #[test]
    fn star_squared_sign() {
        let g = Metric::new(Matrix::diagonal(&[1, 1, 4, 4].map(Scalar::from))).unwrap();
        for k in 0..=4 {
            let ss = &g.star()[4 - k] * &g.star()[k];
            let expected = if k % 2 == 0 { Matrix::identity(ss.rows()) } else { -&Matrix::identity(ss.rows()) };
            assert_eq!(ss, expected, "degree {k}");
        }
    }

    #[test]
    fn irrational_volume() {
        let g = Matrix::diagonal(&[1, 1, 1, 2].map(Scalar::from));
        assert_eq!(Metric::new(g), Err(Error::IrrationalVolume));
    }

    #[test]
    fn lambda_omega_is_m() {
        let s = Symplectic::new(omega()).unwrap();
        let lw = s.lambda().apply(&omega());
        assert_eq!(lw, InvariantForm::constant(4, Scalar::from(2)));
        assert_eq!(s.l().apply(&InvariantForm::one(4)), omega());
    }

    #[test]
    fn degenerate_omega() {
        assert_eq!(Symplectic::new(w(&[0, 1])), Err(Error::DegenerateSymplectic));
    }

    #[test]
    fn decompose_omega() {
        let s = Symplectic::new(omega()).unwrap();
        let parts = s.primitive_decomposition(&omega()).unwrap();
        assert_eq!(parts, alloc::vec![(1, InvariantForm::one(4))]);
        let e1 = w(&[0]);
        assert_eq!(s.primitive_decomposition(&e1).unwrap(), alloc::vec![(0, e1)]);
    }

    #[test]
    fn sl2_counts() {
        let s = Symplectic::new(omega()).unwrap();
        assert_eq!(s.primitive(2).dim(), 6 - 1);
        assert_eq!(s.primitive(1).dim(), 4);
    }
}
