//! Laplacians of Bott-Chern and Aeppli type, their harmonic spaces, and the
//! relations between them.
//!
//! Every harmonic space is computed twice: as the kernel of the Laplacian and
//! as the intersection of the kernels of the first-order operators that
//! characterize it. The two must agree exactly.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use crate::linalg::{gram_adjoint, Matrix, Subspace};
use crate::model::{AdjointConvention, Check, GradedOp, InvariantModel};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HarmonicOp {
    D,
    Dc,
    DPlusDc,
    DcPlusD,
    DDc,
    DcD,
    Delta,
    DeltaBar,
    DeltaPlusDeltaBar,
    DeltaDeltaBar,
    DPlusDLambda,
    DDLambda,
}

impl HarmonicOp {
    pub const ALL: [HarmonicOp; 12] = [
        HarmonicOp::D,
        HarmonicOp::Dc,
        HarmonicOp::DPlusDc,
        HarmonicOp::DcPlusD,
        HarmonicOp::DDc,
        HarmonicOp::DcD,
        HarmonicOp::Delta,
        HarmonicOp::DeltaBar,
        HarmonicOp::DeltaPlusDeltaBar,
        HarmonicOp::DeltaDeltaBar,
        HarmonicOp::DPlusDLambda,
        HarmonicOp::DDLambda,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            HarmonicOp::D => "d",
            HarmonicOp::Dc => "dc",
            HarmonicOp::DPlusDc => "d+dc",
            HarmonicOp::DcPlusD => "dc+d",
            HarmonicOp::DDc => "ddc",
            HarmonicOp::DcD => "dcd",
            HarmonicOp::Delta => "delta",
            HarmonicOp::DeltaBar => "deltabar",
            HarmonicOp::DeltaPlusDeltaBar => "delta+deltabar",
            HarmonicOp::DeltaDeltaBar => "deltadeltabar",
            HarmonicOp::DPlusDLambda => "d+dLam",
            HarmonicOp::DDLambda => "ddLam",
        }
    }

    pub fn needs_symplectic(self) -> bool {
        matches!(self, HarmonicOp::DPlusDLambda | HarmonicOp::DDLambda)
    }

    /// The first-order data: a single operator, or a Bott-Chern type pair
    /// `(A, B)`, or an Aeppli type pair.
    fn shape(self, model: &InvariantModel) -> Result<Shape> {
        Ok(match self {
            HarmonicOp::D => Shape::Hodge(model.d().clone()),
            HarmonicOp::Dc => Shape::Hodge(model.dc().clone()),
            HarmonicOp::Delta => Shape::Hodge(model.delta()),
            HarmonicOp::DeltaBar => Shape::Hodge(model.deltabar()),
            HarmonicOp::DPlusDc => Shape::BottChern(model.d().clone(), model.dc().clone()),
            HarmonicOp::DcPlusD => Shape::BottChern(model.dc().clone(), model.d().clone()),
            HarmonicOp::DDc => Shape::Aeppli(model.d().clone(), model.dc().clone()),
            HarmonicOp::DcD => Shape::Aeppli(model.dc().clone(), model.d().clone()),
            HarmonicOp::DeltaPlusDeltaBar => Shape::BottChern(model.delta(), model.deltabar()),
            HarmonicOp::DeltaDeltaBar => Shape::Aeppli(model.delta(), model.deltabar()),
            HarmonicOp::DPlusDLambda => Shape::BottChern(model.d().clone(), model.d_lambda()?),
            HarmonicOp::DDLambda => Shape::Aeppli(model.d().clone(), model.d_lambda()?),
        })
    }

    /// The operators whose common kernel is the harmonic space, with
    /// adjoints taken in the model's convention.
    pub fn conditions(self, model: &InvariantModel) -> Result<Vec<GradedOp>> {
        let adj = |x: &GradedOp| model.char_adjoint(x);
        Ok(match self.shape(model)? {
            Shape::Hodge(a) => {
                let a_star = adj(&a)?;
                vec![a, a_star]
            }
            Shape::BottChern(a, b) => {
                let ab_star = adj(&a.compose(&b))?;
                vec![a, b, ab_star]
            }
            Shape::Aeppli(a, b) => {
                let ab = a.compose(&b);
                vec![adj(&a)?, adj(&b)?, ab]
            }
        })
    }

    /// The Laplacian as a graded operator of degree zero, built with
    /// Hermitian adjoints. Under [`AdjointConvention::Star`] the Bott-Chern
    /// type Laplacian of `(A, B)` is the one of `(B, A)`, since `(AB)^*` then
    /// has the kernel of the Hermitian adjoint of `BA`.
    pub fn laplacian(self, model: &InvariantModel) -> Result<GradedOp> {
        let adj = |x: &GradedOp| model.adjoint(x);
        // X X^* + X^* X
        let sq = |x: &GradedOp| -> Result<GradedOp> {
            let xs = adj(x)?;
            Ok(x.compose(&xs).add(&xs.compose(x)))
        };
        let shape = match self.shape(model)? {
            Shape::BottChern(a, b) if model.adjoint_convention() == AdjointConvention::Star => Shape::BottChern(b, a),
            s => s,
        };
        Ok(match shape {
            Shape::Hodge(a) => sq(&a)?,
            Shape::BottChern(a, b) => {
                let ab = a.compose(&b);
                let asb = adj(&a)?.compose(&b);
                let aa = adj(&a)?.compose(&a);
                let bb = adj(&b)?.compose(&b);
                sq(&ab)?.add(&sq(&asb)?).add(&aa).add(&bb)
            }
            Shape::Aeppli(a, b) => {
                let ab = a.compose(&b);
                let abs = a.compose(&adj(&b)?);
                let aa = a.compose(&adj(&a)?);
                let bb = b.compose(&adj(&b)?);
                sq(&ab)?.add(&sq(&abs)?).add(&aa).add(&bb)
            }
        })
    }
}

enum Shape {
    Hodge(GradedOp),
    BottChern(GradedOp, GradedOp),
    Aeppli(GradedOp, GradedOp),
}

impl fmt::Display for HarmonicOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for HarmonicOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HarmonicOp::ALL
            .into_iter()
            .find(|op| op.tag() == s.trim())
            .ok_or_else(|| Error::InvalidWord(format!("unknown operator `{s}`")))
    }
}

/// One letter of an operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    D,
    Dc,
    Delta,
    DeltaBar,
    L,
    Lam,
    DLam,
    Star,
}

impl Letter {
    fn name(self) -> &'static str {
        match self {
            Letter::D => "d",
            Letter::Dc => "dc",
            Letter::Delta => "delta",
            Letter::DeltaBar => "deltabar",
            Letter::L => "L",
            Letter::Lam => "Lam",
            Letter::DLam => "dLam",
            Letter::Star => "star",
        }
    }

    fn parse(s: &str) -> Option<Letter> {
        [Letter::D, Letter::Dc, Letter::Delta, Letter::DeltaBar, Letter::L, Letter::Lam, Letter::DLam, Letter::Star]
            .into_iter()
            .find(|l| l.name() == s)
    }

    fn graded(self, model: &InvariantModel) -> Result<GradedOp> {
        Ok(match self {
            Letter::D => model.d().clone(),
            Letter::Dc => model.dc().clone(),
            Letter::Delta => model.delta(),
            Letter::DeltaBar => model.deltabar(),
            Letter::L => model.lefschetz()?.clone(),
            Letter::Lam => model.lambda()?.clone(),
            Letter::DLam => model.d_lambda()?,
            Letter::Star => unreachable!("star is not of constant degree"),
        })
    }
}

/// A composition of letters, written left to right and applied right to
/// left, e.g. `"d dc*"` is `d ∘ (d^c)^*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    letters: Vec<(Letter, bool)>,
}

impl OperatorWord {
    pub fn letters(&self) -> &[(Letter, bool)] {
        &self.letters
    }

    /// Compiles the word on `Λ^k`. Returns the target degree (or `None` if
    /// some intermediate degree leaves `0..=n`, in which case the matrix has
    /// no rows) and the matrix.
    pub fn compile(&self, model: &InvariantModel, k: usize) -> Result<(Option<usize>, Matrix)> {
        let n = model.dim();
        let ext = model.exterior();
        if k > n {
            return Err(Error::DegreeOutOfRange(k));
        }
        let mut deg = k;
        let mut acc = Matrix::identity(ext.rank(k as isize));
        for &(letter, adjoint) in self.letters.iter().rev() {
            let block = if letter == Letter::Star {
                let star = model.star()?;
                let grams = model.grams()?;
                let b = if adjoint {
                    gram_adjoint(&star[n - deg], &grams[n - deg], &grams[deg])?
                } else {
                    star[deg].clone()
                };
                deg = n - deg;
                b
            } else {
                let mut op = letter.graded(model)?;
                if adjoint {
                    op = model.adjoint(&op)?;
                }
                let t = deg as isize + op.shift();
                if t < 0 || t as usize > n {
                    return Ok((None, Matrix::zeros(0, ext.rank(k as isize))));
                }
                let b = op.block(deg).clone();
                deg = t as usize;
                b
            };
            acc = &block * &acc;
        }
        Ok((Some(deg), acc))
    }
}

impl FromStr for OperatorWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (name, adjoint) = match tok.strip_suffix('*') {
                Some(t) => (t, true),
                None => (tok, false),
            };
            let letter = Letter::parse(name).ok_or_else(|| Error::InvalidWord(format!("unknown letter `{tok}`")))?;
            letters.push((letter, adjoint));
        }
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty word".to_string()));
        }
        Ok(OperatorWord { letters })
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, a)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(l.name())?;
            if *a {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicSpace {
    pub op: HarmonicOp,
    pub degree: usize,
    pub basis: Subspace,
}

impl HarmonicSpace {
    pub fn h(&self) -> usize {
        self.basis.dim()
    }
}

/// `Δ_P` on `Λ^k`, checked to be self-adjoint and positive semi-definite for
/// the Hermitian product.
pub fn laplacian_matrix(model: &InvariantModel, op: HarmonicOp, k: usize) -> Result<Matrix> {
    if k > model.dim() {
        return Err(Error::DegreeOutOfRange(k));
    }
    let lap = op.laplacian(model)?;
    let m = lap.block(k).clone();
    let weighted = &model.grams()?[k] * &m;
    if !weighted.is_hermitian_psd(false) {
        return Err(Error::Internal(format!("Laplacian {op} on degree {k} is not self-adjoint positive")));
    }
    Ok(m)
}

fn kernel_of_all(ops: &[GradedOp], k: usize, ambient: usize) -> Result<Subspace> {
    let mut rows: Vec<Vec<crate::Scalar>> = Vec::new();
    for op in ops {
        rows.extend(op.block(k).to_rows());
    }
    Ok(Matrix::from_rows(ambient, rows)?.kernel())
}

/// `ℋ^k_P` from the characterizing conditions, verified against `ker Δ_P`.
pub fn harmonic_space(model: &InvariantModel, op: HarmonicOp, k: usize) -> Result<HarmonicSpace> {
    let lap = laplacian_matrix(model, op, k)?;
    let ambient = model.exterior().rank(k as isize);
    let from_conditions = kernel_of_all(&op.conditions(model)?, k, ambient)?;
    let from_laplacian = lap.kernel();
    if from_conditions != from_laplacian {
        return Err(Error::Internal(format!("ker Δ_{op} differs from its first-order characterization in degree {k}")));
    }
    Ok(HarmonicSpace { op, degree: k, basis: from_conditions })
}

/// Invariant de Rham numbers `b_0, …, b_n`.
pub fn betti(model: &InvariantModel) -> Vec<usize> {
    let n = model.dim();
    let d = model.d();
    (0..=n)
        .map(|k| {
            let ker = d.block(k).kernel().dim();
            let im = if k == 0 { 0 } else { d.block(k - 1).rank() };
            ker - im
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTable {
    pub degrees: RangeInclusive<usize>,
    pub rows: Vec<(HarmonicOp, Vec<usize>)>,
    pub betti: Vec<usize>,
}

impl HTable {
    pub fn row(&self, op: HarmonicOp) -> Option<&[usize]> {
        self.rows.iter().find(|(o, _)| *o == op).map(|(_, v)| v.as_slice())
    }
}

pub fn h_table(model: &InvariantModel, ops: &[HarmonicOp], degrees: RangeInclusive<usize>) -> Result<HTable> {
    if *degrees.end() > model.dim() {
        return Err(Error::DegreeOutOfRange(*degrees.end()));
    }
    let mut rows = Vec::new();
    for &op in ops {
        let mut v = Vec::new();
        for k in degrees.clone() {
            v.push(harmonic_space(model, op, k)?.h());
        }
        rows.push((op, v));
    }
    let b = betti(model);
    let betti = degrees.clone().map(|k| b[k]).collect();
    Ok(HTable { degrees, rows, betti })
}

/// `J` and `*` between the four Bott-Chern/Aeppli harmonic spaces in degree
/// `k`, as equalities of subspaces, plus the matrix identities behind them.
pub fn harmonic_isomorphism_check(model: &InvariantModel, k: usize) -> Result<Vec<Check>> {
    let n = model.dim();
    let star = model.star()?;
    let j = model.j();
    let h = |op, deg| harmonic_space(model, op, deg).map(|s| s.basis);
    let bc = h(HarmonicOp::DPlusDc, k)?;
    let bc2 = h(HarmonicOp::DcPlusD, k)?;
    let a = h(HarmonicOp::DDc, n - k)?;
    let a2 = h(HarmonicOp::DcD, n - k)?;
    let mut out = vec![
        Check::new(format!("J H^{k}_d+dc = H^{k}_dc+d"), bc.image_under(j.block(k))? == bc2),
        Check::new(format!("* H^{k}_d+dc = H^{}_ddc", n - k), bc.image_under(&star[k])? == a),
        Check::new(format!("* H^{k}_dc+d = H^{}_dcd", n - k), bc2.image_under(&star[k])? == a2),
        Check::new(format!("J H^{}_ddc = H^{}_dcd", n - k, n - k), a.image_under(j.block(n - k))? == a2),
    ];
    let lap = |op: HarmonicOp| op.laplacian(model);
    let (l_bc, l_bc2, l_a, l_a2) =
        (lap(HarmonicOp::DPlusDc)?, lap(HarmonicOp::DcPlusD)?, lap(HarmonicOp::DDc)?, lap(HarmonicOp::DcD)?);
    out.push(Check::new(
        format!("* Δ_d+dc = Δ_ddc * on degree {k}"),
        &star[k] * l_bc.block(k) == l_a.block(n - k) * &star[k],
    ));
    out.push(Check::new(
        format!("* Δ_dc+d = Δ_dcd * on degree {k}"),
        &star[k] * l_bc2.block(k) == l_a2.block(n - k) * &star[k],
    ));
    out.push(Check::new(
        format!("Δ_d+dc J = J Δ_dc+d on degree {k}"),
        l_bc.block(k) * j.block(k) == j.block(k) * l_bc2.block(k),
    ));
    out.push(Check::new(
        format!("Δ_ddc J = J Δ_dcd on degree {k}"),
        l_a.block(k) * j.block(k) == j.block(k) * l_a2.block(k),
    ));
    out.push(Check::new(format!("J * = * J on degree {k}"), j.block(n - k) * &star[k] == &star[k] * j.block(k)));
    let dims = [bc.dim(), bc2.dim(), a.dim(), a2.dim()];
    out.push(
        Check::new(
            format!("h^{k}_d+dc = h^{k}_dc+d = h^{}_ddc = h^{}_dcd", n - k, n - k),
            dims.iter().all(|&x| x == dims[0]),
        )
        .with_detail(format!("{dims:?}")),
    );
    Ok(out)
}

/// `h^k_{d+d^c}` for the same structure under several metrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricProbe {
    pub degree: usize,
    pub h: Vec<usize>,
    pub h1: Vec<usize>,
}

impl MetricProbe {
    pub fn h1_independent(&self) -> bool {
        self.h1.windows(2).all(|w| w[0] == w[1])
    }
}

/// Runs `h^1` and `h^k` of `d + d^c` for each model; all models must share
/// the algebra and `J`.
pub fn metric_independence_probe(models: &[InvariantModel], k: usize) -> Result<MetricProbe> {
    let Some(first) = models.first() else {
        return Ok(MetricProbe { degree: k, h: Vec::new(), h1: Vec::new() });
    };
    let mut h = Vec::new();
    let mut h1 = Vec::new();
    for m in models {
        if m.acs().j_frame() != first.acs().j_frame() || m.algebra() != first.algebra() {
            return Err(Error::Internal("metric probe needs a common algebra and J".into()));
        }
        h.push(harmonic_space(m, HarmonicOp::DPlusDc, k)?.h());
        h1.push(harmonic_space(m, HarmonicOp::DPlusDc, 1)?.h());
    }
    Ok(MetricProbe { degree: k, h, h1 })
}

/// The harmonic description of degree-2 and degree-3 forms on an almost
/// Kähler 4-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostKaehlerReport {
    /// Anti-self-dual `d`-harmonic 2-forms.
    pub b_minus: usize,
    /// `J`-anti-invariant `d`-harmonic 2-forms.
    pub h_minus_j: usize,
    pub h2: usize,
    pub h1_dlam: usize,
    pub h2_dlam: usize,
    pub checks: Vec<Check>,
}

pub fn almost_kaehler_checks(model: &InvariantModel) -> Result<AlmostKaehlerReport> {
    let n = model.dim();
    if n != 4 {
        return Err(Error::NotAlmostKaehler(format!("dimension {n}, expected 4")));
    }
    if !model.omega_closed()? {
        return Err(Error::NotAlmostKaehler("dω ≠ 0".into()));
    }
    let sympl = model.symplectic()?;
    let j = model.acs().j_frame();
    let expected = sympl.compatible_metric(j).map_err(|_| Error::NotAlmostKaehler("ω is not J-compatible".into()))?;
    if model.metric()?.gram() != expected.gram() {
        return Err(Error::NotAlmostKaehler("metric is not ω(·, J·)".into()));
    }
    let star2 = &model.star()?[2];
    let id = Matrix::identity(star2.rows());
    let hd = harmonic_space(model, HarmonicOp::D, 2)?.basis;
    let asd = (star2 + &id).kernel().intersect(&hd)?;
    let j2 = model.j().block(2).clone();
    let anti = (&j2 + &id).kernel().intersect(&hd)?;
    let omega = Subspace::span(6, vec![sympl.omega().to_vector()])?;
    let h2 = harmonic_space(model, HarmonicOp::DPlusDc, 2)?.basis;
    let sum = omega.sum(&asd)?.sum(&anti)?;
    let direct = sum.dim() == 1 + asd.dim() + anti.dim();
    let h3 = harmonic_space(model, HarmonicOp::DPlusDc, 3)?.basis;
    let h3l = harmonic_space(model, HarmonicOp::DPlusDLambda, 3)?.basis;
    let h2l = harmonic_space(model, HarmonicOp::DPlusDLambda, 2)?.basis;
    let h1l = harmonic_space(model, HarmonicOp::DPlusDLambda, 1)?.basis;
    let checks = vec![
        Check::new("H^2_d+dc = <ω> ⊕ H^-_g ⊕ H^(2,0)(0,2)_J", sum == h2 && direct),
        Check::new("h^2_d+dc = b^- + 1 + h^-_J", h2.dim() == asd.dim() + 1 + anti.dim()).with_detail(format!(
            "{} = {} + 1 + {}",
            h2.dim(),
            asd.dim(),
            anti.dim()
        )),
        Check::new("H^3_d+dc = H^3_d+dLam", h3 == h3l),
        Check::new("h^3_d+dc = h^3_d+dLam", h3.dim() == h3l.dim()).with_detail(format!(
            "{} vs {}",
            h3.dim(),
            h3l.dim()
        )),
        Check::new("H^2_d+dc ⊆ H^2_d+dLam", h2.is_subspace_of(&h2l)?).with_detail(format!(
            "{} <= {}",
            h2.dim(),
            h2l.dim()
        )),
        Check::new("*ω = ω", star2.apply(&sympl.omega().to_vector()) == sympl.omega().to_vector()),
    ];
    Ok(AlmostKaehlerReport {
        b_minus: asd.dim(),
        h_minus_j: anti.dim(),
        h2: h2.dim(),
        h1_dlam: h1l.dim(),
        h2_dlam: h2l.dim(),
        checks,
    })
}

/// `ℋ_d ∩ ℋ_{d^c} = ℋ_δ ∩ ℋ_{δ̄}` and the six inclusions between the
/// Bott-Chern/Aeppli and `δ`-harmonic spaces, in degree `k`.
pub fn delta_harmonic_relations(model: &InvariantModel, k: usize) -> Result<Vec<Check>> {
    let h = |op| harmonic_space(model, op, k).map(|s| s.basis);
    let (d, dc, de, db) = (h(HarmonicOp::D)?, h(HarmonicOp::Dc)?, h(HarmonicOp::Delta)?, h(HarmonicOp::DeltaBar)?);
    let (bc, bc2, dbc) = (h(HarmonicOp::DPlusDc)?, h(HarmonicOp::DcPlusD)?, h(HarmonicOp::DeltaPlusDeltaBar)?);
    let (a, a2, da) = (h(HarmonicOp::DDc)?, h(HarmonicOp::DcD)?, h(HarmonicOp::DeltaDeltaBar)?);
    let inc = |x: &Subspace, y: &Subspace, z: &Subspace| -> Result<bool> { Ok(x.intersect(y)?.is_subspace_of(z)?) };
    Ok(vec![
        Check::new(
            format!("H^{k}_d ∩ H^{k}_dc = H^{k}_delta ∩ H^{k}_deltabar"),
            d.intersect(&dc)? == de.intersect(&db)?,
        ),
        Check::new(format!("H^{k}_d+dc ∩ H^{k}_dc+d ⊆ H^{k}_delta+deltabar"), inc(&bc, &bc2, &dbc)?),
        Check::new(format!("H^{k}_d+dc ∩ H^{k}_delta+deltabar ⊆ H^{k}_dc+d"), inc(&bc, &dbc, &bc2)?),
        Check::new(format!("H^{k}_delta+deltabar ∩ H^{k}_dc+d ⊆ H^{k}_d+dc"), inc(&dbc, &bc2, &bc)?),
        Check::new(format!("H^{k}_ddc ∩ H^{k}_dcd ⊆ H^{k}_deltadeltabar"), inc(&a, &a2, &da)?),
        Check::new(format!("H^{k}_ddc ∩ H^{k}_deltadeltabar ⊆ H^{k}_dcd"), inc(&a, &da, &a2)?),
        Check::new(format!("H^{k}_deltadeltabar ∩ H^{k}_dcd ⊆ H^{k}_ddc"), inc(&da, &a2, &a)?),
    ])
}

/// `h^0 = h^{2m} = 1`, `h^1` even, and `h^1 = 0` when `μ̄` is injective on
/// `(1,0)`-forms in dimension at least 6.
pub fn h1_structure_checks(model: &InvariantModel) -> Result<Vec<Check>> {
    let n = model.dim();
    let h = |k| harmonic_space(model, HarmonicOp::DPlusDc, k).map(|s| s.h());
    let h1 = h(1)?;
    let rank = model.acs().nijenhuis(model.algebra(), model.d()).rank;
    let mut out = vec![
        Check::new("h^0_d+dc = 1", h(0)? == 1),
        Check::new(format!("h^{n}_d+dc = 1"), h(n)? == 1),
        Check::new("h^1_d+dc is even", h1 % 2 == 0).with_detail(format!("h^1 = {h1}")),
    ];
    if n >= 6 && rank == n / 2 {
        out.push(Check::new("maximal rank of μ̄ forces h^1_d+dc = 0", h1 == 0));
    }
    Ok(out)
}
