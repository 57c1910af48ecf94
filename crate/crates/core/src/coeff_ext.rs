//! Forms with coefficients in a finite-dimensional space of functions.
//!
//! A [`FunctionModule`] is a span of functions on the quotient that is closed
//! under the frame fields `e_i`, which act through derivation matrices
//! `D_i`. Forms with coefficients in the module are stored as vectors indexed
//! by `I * N + a` for the basis word `e^I` and the function `f_a`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::exterior::{FormBasis, InvariantForm, LieAlgebra};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::model::InvariantModel;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionModule {
    derivations: Vec<Matrix>,
    gram: Matrix,
}

impl FunctionModule {
    /// `derivations[i]` is the action of `e_i`: column `a` holds the
    /// coordinates of `e_i(f_a)`.
    pub fn new(derivations: Vec<Matrix>, gram: Matrix) -> Result<Self> {
        let n = gram.rows();
        if !gram.is_square() {
            return Err(Error::DimensionMismatch { expected: n, found: gram.cols() });
        }
        for d in &derivations {
            if d.shape() != (n, n) {
                return Err(Error::DimensionMismatch { expected: n, found: d.rows() });
            }
        }
        if !gram.is_hermitian_psd(true) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(FunctionModule { derivations, gram })
    }

    /// The span of `1, cos(2πny), sin(2πny)` for `n ≤ max_frequency`, where
    /// `e_i` acts as `weights[i] · d/dy`. The `2π` is absorbed into the
    /// basis, so `d/dy` is the integer rotation `cos_n ↦ -n sin_n`,
    /// `sin_n ↦ n cos_n`. The Gram matrix is the `L²` product on the circle.
    pub fn trig(weights: &[i64], max_frequency: usize) -> Self {
        let dim = 2 * max_frequency + 1;
        let mut rot = Matrix::zeros(dim, dim);
        for n in 1..=max_frequency {
            let (c, s) = (2 * n - 1, 2 * n);
            *rot.at_mut(s, c) = Scalar::from(-(n as i64));
            *rot.at_mut(c, s) = Scalar::from(n as i64);
        }
        let mut g = vec![Scalar::ratio(1, 2); dim];
        g[0] = Scalar::from(1);
        let derivations = weights.iter().map(|&w| rot.scale(&Scalar::from(w))).collect();
        FunctionModule { derivations, gram: Matrix::diagonal(&g) }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn derivation(&self, i: usize) -> &Matrix {
        &self.derivations[i]
    }

    pub fn derivations(&self) -> &[Matrix] {
        &self.derivations
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `[D_i, D_j] = Σ_k c^k_{ij} D_k`, returning the first failing pair.
    pub fn commutation_check(&self, g: &LieAlgebra) -> Result<()> {
        let n = g.dim();
        if self.derivations.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.derivations.len() });
        }
        for i in 0..n {
            for j in i + 1..n {
                let (di, dj) = (&self.derivations[i], &self.derivations[j]);
                let lhs = &(di * dj) - &(dj * di);
                let mut rhs = Matrix::zeros(self.dim(), self.dim());
                for k in 0..n {
                    let c = g.structure_constant(i, j, k);
                    if !c.is_zero() {
                        rhs = &rhs + &self.derivations[k].scale(c);
                    }
                }
                if lhs != rhs {
                    return Err(Error::Internal(format!("derivations do not represent [e{}, e{}]", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// Whether every `D_i` is skew-adjoint for the function Gram matrix.
    pub fn is_skew(&self) -> bool {
        self.derivations.iter().all(|d| {
            let lhs = &d.conj_transpose() * &self.gram;
            let rhs = &self.gram * d;
            lhs == -&rhs
        })
    }

    /// Truncation of a vector to the first `dim` basis functions, as used by
    /// trig modules whose bases are nested by frequency.
    pub fn embed(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        out.resize(self.dim(), Scalar::zero());
        out
    }
}

/// Functions of `y` on the Kodaira-Thurston nilmanifold, up to frequency
/// `max_frequency`. Only `e_3 = ∂_y + x∂_z` acts.
pub fn kt_trig_module(max_frequency: usize) -> FunctionModule {
    FunctionModule::trig(&[0, 0, 1, 0], max_frequency)
}

/// Functions of the circle coordinate `t` on the Kodaira-Thurston manifold.
pub fn kt_circle_module(max_frequency: usize) -> FunctionModule {
    FunctionModule::trig(&[1, 0, 0, 0], max_frequency)
}

/// A form whose coefficients live in a [`FunctionModule`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedForm {
    n: usize,
    degree: usize,
    module_dim: usize,
    coeffs: Vec<Scalar>,
}

impl ExtendedForm {
    pub fn zero(n: usize, degree: usize, module_dim: usize) -> Self {
        let len = FormBasis::new(n, degree).len() * module_dim;
        ExtendedForm { n, degree, module_dim, coeffs: vec![Scalar::zero(); len] }
    }

    /// `Σ f_j ⊗ α_j` for module vectors `f_j` and invariant forms `α_j` of
    /// one degree.
    pub fn from_terms(
        n: usize,
        degree: usize,
        module_dim: usize,
        terms: &[(Vec<Scalar>, InvariantForm)],
    ) -> Result<Self> {
        let mut out = ExtendedForm::zero(n, degree, module_dim);
        for (f, alpha) in terms {
            if alpha.degree() != degree || alpha.dim() != n {
                return Err(Error::DimensionMismatch { expected: degree, found: alpha.degree() });
            }
            if f.len() != module_dim {
                return Err(Error::DimensionMismatch { expected: module_dim, found: f.len() });
            }
            for (i, c) in alpha.to_vector().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (a, x) in f.iter().enumerate() {
                    out.coeffs[i * module_dim + a] += &(c * x);
                }
            }
        }
        Ok(out)
    }

    pub fn from_vector(n: usize, degree: usize, module_dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        let len = FormBasis::new(n, degree).len() * module_dim;
        if coeffs.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: coeffs.len() });
        }
        Ok(ExtendedForm { n, degree, module_dim, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn to_vector(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// The module vector multiplying the basis word with index `word`.
    pub fn coefficient(&self, word: usize) -> &[Scalar] {
        &self.coeffs[word * self.module_dim..(word + 1) * self.module_dim]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendedOp {
    D,
    Dc,
    DDc,
    DDcPlusDcD,
}

/// `d`, `J` and `d^c` on `Λ^• ⊗ M`.
#[derive(Debug, Clone)]
pub struct ExtendedComplex {
    n: usize,
    module: FunctionModule,
    d: Vec<Matrix>,
    dc: Vec<Matrix>,
    xi: Vec<Matrix>,
}

impl ExtendedComplex {
    /// `d(f ⊗ α) = Σ_i D_i f ⊗ e^i ∧ α + f ⊗ dα` and `d^c = J^{-1} d J` with
    /// `J` acting on the form factor.
    pub fn new(model: &InvariantModel, module: FunctionModule) -> Result<Self> {
        module.commutation_check(model.algebra())?;
        let n = model.dim();
        let ext = model.exterior();
        let id = Matrix::identity(module.dim());
        let d: Vec<Matrix> = (0..=n)
            .map(|k| {
                let mut m = model.d().block(k).kron(&id);
                if k < n {
                    for i in 0..n {
                        let di = module.derivation(i);
                        if di.is_zero() {
                            continue;
                        }
                        let w = ext.wedge_left_matrix(&InvariantForm::covector(n, i), k);
                        m = &m + &w.kron(di);
                    }
                }
                m
            })
            .collect();
        let j = model.acs().j_op();
        let j_inv = model.acs().j_inv_op();
        let dc = (0..=n)
            .map(|k| {
                if k == n {
                    return d[k].clone();
                }
                &(&j_inv.block(k + 1).kron(&id) * &d[k]) * &j.block(k).kron(&id)
            })
            .collect();
        // ξ_b = Σ_i X_{ib} e_i with X = (C_1^{-1})^T, the frame dual to θ
        let x = model.acs().theta_basis_inv(1).transpose();
        let xi = (0..n)
            .map(|b| {
                let mut m = Matrix::zeros(module.dim(), module.dim());
                for i in 0..n {
                    let c = x.at(i, b);
                    if !c.is_zero() {
                        m = &m + &module.derivation(i).scale(c);
                    }
                }
                m
            })
            .collect();
        Ok(ExtendedComplex { n, module, d, dc, xi })
    }

    pub fn module(&self) -> &FunctionModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn d(&self, k: usize) -> &Matrix {
        &self.d[k]
    }

    pub fn dc(&self, k: usize) -> &Matrix {
        &self.dc[k]
    }

    /// `dd^c: Λ^k ⊗ M → Λ^{k+2} ⊗ M`.
    pub fn ddc(&self, k: usize) -> Matrix {
        if k + 1 > self.n {
            return Matrix::zeros(0, self.d[k].cols());
        }
        &self.d[k + 1] * &self.dc[k]
    }

    pub fn ddc_plus_dcd(&self, k: usize) -> Matrix {
        if k + 1 > self.n {
            return Matrix::zeros(0, self.d[k].cols());
        }
        &(&self.d[k + 1] * &self.dc[k]) + &(&self.dc[k + 1] * &self.d[k])
    }

    pub fn matrix(&self, op: ExtendedOp, k: usize) -> Matrix {
        match op {
            ExtendedOp::D => self.d[k].clone(),
            ExtendedOp::Dc => self.dc[k].clone(),
            ExtendedOp::DDc => self.ddc(k),
            ExtendedOp::DDcPlusDcD => self.ddc_plus_dcd(k),
        }
    }

    pub fn apply(&self, op: ExtendedOp, alpha: &ExtendedForm) -> Result<ExtendedForm> {
        let k = alpha.degree();
        let shift = if matches!(op, ExtendedOp::D | ExtendedOp::Dc) { 1 } else { 2 };
        let m = self.matrix(op, k);
        if m.rows() == 0 {
            return Ok(ExtendedForm::zero(self.n, k + shift, self.module.dim()));
        }
        ExtendedForm::from_vector(self.n, k + shift, self.module.dim(), m.apply(alpha.to_vector()))
    }

    /// The action of `ξ_b` on the module, where `ξ_1, …, ξ_m, ξ̄_1, …, ξ̄_m`
    /// is the frame dual to `φ^1, …, φ^m, φ̄^1, …, φ̄^m`.
    pub fn xi(&self, b: usize) -> &Matrix {
        &self.xi[b]
    }

    /// `d² = 0` and `(d^c)² = 0` in every degree.
    pub fn squares_vanish(&self) -> bool {
        (0..self.n).all(|k| (&self.d[k + 1] * &self.d[k]).is_zero() && (&self.dc[k + 1] * &self.dc[k]).is_zero())
    }

    /// `ker d ∩ ker d^c` on extended `k`-forms.
    pub fn closed(&self, k: usize) -> Result<Subspace> {
        Ok(self.d[k].kernel().intersect(&self.dc[k].kernel())?)
    }

    /// `dd^c` applied to extended `(k-2)`-forms in `ker(dd^c + d^cd)`.
    pub fn ddc_exact_on_b(&self, k: usize) -> Result<Subspace> {
        let amb = self.d[k].cols();
        if k < 2 {
            return Ok(Subspace::zero(amb));
        }
        let src = self.ddc_plus_dcd(k - 2).kernel();
        Ok(src.image_under(&self.ddc(k - 2))?)
    }
}

/// The eight equations characterising `d`- and `d^c`-closed 2-forms
/// `a φ^{12} + e φ^{11̄} + f φ^{12̄} + g φ^{1̄2} + h φ^{22̄} + b φ^{1̄2̄}` on the
/// Kodaira-Thurston manifold, stacked into one vector. The extended complex
/// supplies the `ξ` actions.
pub struct StarCoefficients<'a> {
    pub a: &'a [Scalar],
    pub b: &'a [Scalar],
    pub e: &'a [Scalar],
    pub f: &'a [Scalar],
    pub g: &'a [Scalar],
    pub h: &'a [Scalar],
}

pub fn system_star_residual(cx: &ExtendedComplex, c: &StarCoefficients<'_>) -> Result<Vec<Scalar>> {
    if cx.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: cx.dim() });
    }
    let n = cx.module().dim();
    for v in [c.a, c.b, c.e, c.f, c.g, c.h] {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
    }
    let (x1, x2, x1b, x2b) = (cx.xi(0), cx.xi(1), cx.xi(2), cx.xi(3));
    let quarter = Scalar::ratio(1, 4);
    let add = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> { u.iter().zip(v).map(|(x, y)| x + y).collect() };
    let sub = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> { u.iter().zip(v).map(|(x, y)| x - y).collect() };
    let sc = |s: &Scalar, u: &[Scalar]| -> Vec<Scalar> { u.iter().map(|x| s * x).collect() };
    let amb = sc(&quarter, &sub(c.a, c.b));
    let gmf = sc(&quarter, &sub(c.g, c.f));
    let eqs = [
        x2b.apply(c.a),
        x2.apply(c.b),
        add(&amb, &x1b.apply(c.a)),
        add(&sc(&Scalar::from(-1), &amb), &x1.apply(c.b)),
        sub(&x1.apply(c.h), &x2.apply(c.f)),
        add(&x1b.apply(c.h), &x2b.apply(c.g)),
        sub(&sub(&gmf, &x2.apply(c.e)), &x1.apply(c.g)),
        add(&add(&sc(&Scalar::from(-1), &gmf), &x2b.apply(c.e)), &x1b.apply(c.f)),
    ];
    Ok(eqs.concat())
}

/// The extended 2-form with the given `φ`-coefficients.
pub fn star_form(model: &InvariantModel, module_dim: usize, c: &StarCoefficients<'_>) -> Result<ExtendedForm> {
    let acs = model.acs();
    let terms = [(c.a, [0, 1]), (c.e, [0, 2]), (c.f, [0, 3]), (c.g, [2, 1]), (c.h, [1, 3]), (c.b, [2, 3])];
    let terms: Vec<(Vec<Scalar>, InvariantForm)> = terms.iter().map(|(f, w)| (f.to_vec(), acs.theta_word(w))).collect();
    ExtendedForm::from_terms(model.dim(), 2, module_dim, &terms)
}

/// Dimension of `(ker d ∩ ker d^c ∩ Λ² ⊗ M_N) / dd^c(ker(dd^c + d^cd) ∩ M_N)`
/// on the Kodaira-Thurston manifold, with `M_N` the functions of `y` up to
/// frequency `N`.
pub fn bc_growth_witness(model: &InvariantModel, max_frequency: usize) -> Result<usize> {
    let cx = ExtendedComplex::new(model, kt_trig_module(max_frequency))?;
    let closed = cx.closed(2)?;
    let exact = cx.ddc_exact_on_b(2)?;
    if !exact.is_subspace_of(&closed)? {
        return Err(Error::Internal("dd^c-exact forms are not closed".into()));
    }
    Ok(closed.dim() - exact.dim())
}
