//! Cohomologies of the invariant complex.
//!
//! Every space is stored as a [`Quotient`] of subspaces of the ambient
//! `Λ^k`. Cohomologies of the quotient complex `C^• = Λ^• / im(dd^c + d^cd)`
//! are lifted: a class in `C^k` is represented by any preimage in `Λ^k`,
//! and the divisor always contains `im(dd^c + d^cd) ∩ Λ^k`. This gives the
//! same dimensions and canonical representatives as working in `C^k`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::almost_complex::Parity;
use crate::exterior::InvariantForm;
use crate::harmonic::{harmonic_space, HarmonicOp};
use crate::linalg::{Matrix, Quotient, Scalar, Subspace};
use crate::model::{Check, GradedOp, InvariantModel};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CohomologyTag {
    DeRham,
    Dc,
    BottChern,
    Aeppli,
    Delta,
    DeltaBar,
    DeltaPlusDeltaBar,
    DeltaDeltaBar,
    Even,
    Odd,
    BottChernEven,
    BottChernOdd,
    Bigraded(usize, usize),
}

impl CohomologyTag {
    /// Tags that are defined in every degree.
    pub const GRADED: [CohomologyTag; 12] = [
        CohomologyTag::DeRham,
        CohomologyTag::Dc,
        CohomologyTag::BottChern,
        CohomologyTag::Aeppli,
        CohomologyTag::Delta,
        CohomologyTag::DeltaBar,
        CohomologyTag::DeltaPlusDeltaBar,
        CohomologyTag::DeltaDeltaBar,
        CohomologyTag::Even,
        CohomologyTag::Odd,
        CohomologyTag::BottChernEven,
        CohomologyTag::BottChernOdd,
    ];

    pub fn complex(self) -> ComplexTag {
        use CohomologyTag::*;
        match self {
            DeRham | Dc | Even | Odd | Bigraded(..) => ComplexTag::Full,
            BottChern | Delta | DeltaBar | DeltaPlusDeltaBar | BottChernEven | BottChernOdd => ComplexTag::B,
            Aeppli | DeltaDeltaBar => ComplexTag::C,
        }
    }
}

impl fmt::Display for CohomologyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CohomologyTag::*;
        match self {
            DeRham => f.write_str("dR"),
            Dc => f.write_str("dc"),
            BottChern => f.write_str("d+dc"),
            Aeppli => f.write_str("ddc"),
            Delta => f.write_str("delta"),
            DeltaBar => f.write_str("deltabar"),
            DeltaPlusDeltaBar => f.write_str("delta+deltabar"),
            DeltaDeltaBar => f.write_str("deltadeltabar"),
            Even => f.write_str("ev"),
            Odd => f.write_str("od"),
            BottChernEven => f.write_str("d+dc:ev"),
            BottChernOdd => f.write_str("d+dc:od"),
            Bigraded(p, q) => write!(f, "d+dc:({p},{q})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexTag {
    Full,
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologySpace {
    pub tag: CohomologyTag,
    pub degree: usize,
    pub complex: ComplexTag,
    pub quotient: Quotient,
}

impl CohomologySpace {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn representatives(&self) -> &[Vec<Scalar>] {
        self.quotient.representatives().basis()
    }

    /// Class coordinates of `v`, or `None` if `v` is not closed.
    pub fn class_of(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        Ok(self.quotient.class_of(v)?)
    }
}

/// `B^k = ker(dd^c + d^cd) ∩ Λ^k`, with `d`, `d^c` restricted to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BComplex {
    spaces: Vec<Subspace>,
    d: Vec<Matrix>,
    dc: Vec<Matrix>,
}

impl BComplex {
    pub fn build(model: &InvariantModel) -> Result<Self> {
        let n = model.dim();
        let p = model.ddc_plus_dcd();
        let spaces: Vec<Subspace> = (0..=n).map(|k| p.block(k).kernel()).collect();
        let d = restrict_all(&spaces, model.d(), "d")?;
        let dc = restrict_all(&spaces, model.dc(), "dc")?;
        for k in 0..n.saturating_sub(1) {
            let ddc = &d[k + 1] * &dc[k];
            let dcd = &dc[k + 1] * &d[k];
            if ddc != -&dcd {
                return Err(Error::Internal(format!("dd^c ≠ -d^cd on B^{k}")));
            }
        }
        Ok(BComplex { spaces, d, dc })
    }

    pub fn space(&self, k: usize) -> &Subspace {
        &self.spaces[k]
    }

    /// `d: B^k → B^{k+1}` in the echelon bases of the two spaces.
    pub fn d(&self, k: usize) -> &Matrix {
        &self.d[k]
    }

    pub fn dc(&self, k: usize) -> &Matrix {
        &self.dc[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// Restriction of an arbitrary degree-raising operator to `B^•`, failing
    /// if it leaves the complex.
    pub fn restrict(&self, op: &GradedOp, name: &str) -> Result<Vec<Matrix>> {
        restrict_all(&self.spaces, op, name)
    }
}

fn restrict_all(spaces: &[Subspace], op: &GradedOp, name: &str) -> Result<Vec<Matrix>> {
    let n = spaces.len() - 1;
    (0..=n)
        .map(|k| {
            let t = k as isize + op.shift();
            if t < 0 || t as usize > n {
                return Ok(Matrix::zeros(0, spaces[k].dim()));
            }
            let dst = &spaces[t as usize];
            let cols = spaces[k]
                .basis()
                .iter()
                .map(|b| {
                    dst.coordinates(&op.block(k).apply(b))?
                        .ok_or_else(|| Error::Internal(format!("{name} does not preserve B in degree {k}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(dst.dim(), &cols)?)
        })
        .collect()
}

/// `C^k = Λ^k / D^k` with `D^k = im(dd^c + d^cd) ∩ Λ^k`, modelled by the
/// canonical echelon complement of `D^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CComplex {
    divisors: Vec<Subspace>,
    sections: Vec<Matrix>,
    projections: Vec<Matrix>,
    d: Vec<Matrix>,
    dc: Vec<Matrix>,
    ddc: Vec<Matrix>,
}

impl CComplex {
    pub fn build(model: &InvariantModel) -> Result<Self> {
        let n = model.dim();
        let p = model.ddc_plus_dcd();
        let divisors: Vec<Subspace> = (0..=n).map(|k| image_into(&p, k)).collect();
        let mut sections = Vec::with_capacity(n + 1);
        let mut projections = Vec::with_capacity(n + 1);
        for (k, div) in divisors.iter().enumerate() {
            let amb = div.ambient();
            let q = Quotient::new(Subspace::full(amb), div.clone())?;
            let sec = q.representatives().basis_matrix();
            let cols = (0..amb)
                .map(|i| {
                    let e = Matrix::identity(amb).column(i);
                    q.class_of(&e)?.ok_or_else(|| Error::Internal(format!("projection onto C^{k}")))
                })
                .collect::<Result<Vec<_>>>()?;
            projections.push(Matrix::from_columns(q.dim(), &cols)?);
            sections.push(sec);
        }
        let mut c = CComplex { divisors, sections, projections, d: Vec::new(), dc: Vec::new(), ddc: Vec::new() };
        c.d = c.descend(model.d(), "d")?;
        c.dc = c.descend(model.dc(), "dc")?;
        c.ddc = c.descend(&model.ddc(), "ddc")?;
        Ok(c)
    }

    /// Matrices of `op` on `C^•`, after checking that `op(D^k) ⊆ D^{k+s}`.
    pub fn descend(&self, op: &GradedOp, name: &str) -> Result<Vec<Matrix>> {
        let n = self.divisors.len() - 1;
        (0..=n)
            .map(|k| {
                let t = k as isize + op.shift();
                if t < 0 || t as usize > n {
                    return Ok(Matrix::zeros(0, self.sections[k].cols()));
                }
                let t = t as usize;
                let img = self.divisors[k].image_under(op.block(k))?;
                if !img.is_subspace_of(&self.divisors[t])? {
                    return Err(Error::Internal(format!("{name} does not descend to C in degree {k}")));
                }
                Ok(&(&self.projections[t] * op.block(k)) * &self.sections[k])
            })
            .collect()
    }

    pub fn divisor(&self, k: usize) -> &Subspace {
        &self.divisors[k]
    }

    /// `C^k → Λ^k`, columns are the canonical representatives.
    pub fn section(&self, k: usize) -> &Matrix {
        &self.sections[k]
    }

    /// `Λ^k → C^k`.
    pub fn projection(&self, k: usize) -> &Matrix {
        &self.projections[k]
    }

    pub fn d(&self, k: usize) -> &Matrix {
        &self.d[k]
    }

    pub fn dc(&self, k: usize) -> &Matrix {
        &self.dc[k]
    }

    pub fn ddc(&self, k: usize) -> &Matrix {
        &self.ddc[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.sections.iter().map(Matrix::cols).collect()
    }
}

/// `op(Λ^{k-s}) ⊆ Λ^k`, zero when the source degree is out of range.
fn image_into(op: &GradedOp, k: usize) -> Subspace {
    let n = op.dim();
    let src = k as isize - op.shift();
    if src < 0 || src as usize > n {
        return Subspace::zero(rank_of(n, k));
    }
    op.block(src as usize).image()
}

fn rank_of(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `op(S) ⊆ Λ^{k+s}` for a subspace `S ⊆ Λ^k`.
fn image_of(op: &GradedOp, k: isize, s: &Subspace) -> Result<Subspace> {
    let n = op.dim() as isize;
    let t = k + op.shift();
    if k < 0 || k > n || t < 0 || t > n {
        return Ok(Subspace::zero(rank_of(op.dim(), t.max(0) as usize)));
    }
    Ok(s.image_under(op.block(k as usize))?)
}

fn kernel(op: &GradedOp, k: usize) -> Subspace {
    op.block(k).kernel()
}

/// All cohomologies of one model, with `B^•` and `C^•` built once.
#[derive(Debug, Clone)]
pub struct CohomologyEngine<'a> {
    model: &'a InvariantModel,
    b: BComplex,
    c: CComplex,
    ddc: GradedOp,
    delta: GradedOp,
    deltabar: GradedOp,
    delta_deltabar: GradedOp,
    even: GradedOp,
    odd: GradedOp,
}

impl<'a> CohomologyEngine<'a> {
    pub fn new(model: &'a InvariantModel) -> Result<Self> {
        let b = BComplex::build(model)?;
        let c = CComplex::build(model)?;
        let delta = model.delta();
        let deltabar = model.deltabar();
        let delta_deltabar = delta.compose(&deltabar);
        Ok(CohomologyEngine {
            model,
            b,
            c,
            ddc: model.ddc(),
            delta,
            deltabar,
            delta_deltabar,
            even: model.parity(Parity::Even),
            odd: model.parity(Parity::Odd),
        })
    }

    pub fn model(&self) -> &InvariantModel {
        self.model
    }

    pub fn b_complex(&self) -> &BComplex {
        &self.b
    }

    pub fn c_complex(&self) -> &CComplex {
        &self.c
    }

    fn n(&self) -> usize {
        self.model.dim()
    }

    fn check_degree(&self, k: usize) -> Result<()> {
        if k > self.n() {
            return Err(Error::DegreeOutOfRange(k));
        }
        Ok(())
    }

    fn b_space(&self, k: isize) -> Subspace {
        if k < 0 || k as usize > self.n() {
            Subspace::zero(0)
        } else {
            self.b.space(k as usize).clone()
        }
    }

    fn space(&self, tag: CohomologyTag, k: usize, num: Subspace, div: Subspace) -> Result<CohomologySpace> {
        let quotient = Quotient::new(num, div)
            .map_err(|_| Error::Internal(format!("divisor not contained in numerator for H^{k}_{tag}")))?;
        Ok(CohomologySpace { tag, degree: k, complex: tag.complex(), quotient })
    }

    /// `ker op / im op` on the full complex.
    fn plain(&self, tag: CohomologyTag, op: &GradedOp, k: usize) -> Result<CohomologySpace> {
        self.space(tag, k, kernel(op, k), image_into(op, k))
    }

    /// `(ker a ∩ ker b ∩ B^k) / ab(B^{k-2})`.
    fn bott_chern_type(
        &self,
        tag: CohomologyTag,
        a: &GradedOp,
        b: &GradedOp,
        ab: &GradedOp,
        k: usize,
    ) -> Result<CohomologySpace> {
        let num = kernel(a, k).intersect(&kernel(b, k))?.intersect(self.b.space(k))?;
        let ki = k as isize;
        let div = image_of(ab, ki - 2, &self.b_space(ki - 2))?;
        self.space(tag, k, num, div)
    }

    /// Lift of `ker(ab on C^k) / (im a + im b)` to `Λ^k`.
    fn aeppli_type(
        &self,
        tag: CohomologyTag,
        a: &GradedOp,
        b: &GradedOp,
        ab: &GradedOp,
        k: usize,
    ) -> Result<CohomologySpace> {
        let n = self.n();
        let amb = rank_of(n, k);
        let num = if k + 2 <= n { self.c.divisor(k + 2).preimage_under(ab.block(k))? } else { Subspace::full(amb) };
        let div = image_into(a, k).sum(&image_into(b, k))?.sum(self.c.divisor(k))?;
        self.space(tag, k, num, div)
    }

    /// `ker op ∩ B^k / op(B^{k-1})`.
    fn on_b(&self, tag: CohomologyTag, op: &GradedOp, k: usize) -> Result<CohomologySpace> {
        let num = kernel(op, k).intersect(self.b.space(k))?;
        let ki = k as isize;
        let div = image_of(op, ki - 1, &self.b_space(ki - 1))?;
        self.space(tag, k, num, div)
    }

    pub fn de_rham(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.plain(CohomologyTag::DeRham, self.model.d(), k)
    }

    pub fn dc_cohomology(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.plain(CohomologyTag::Dc, self.model.dc(), k)
    }

    pub fn bott_chern(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.bott_chern_type(CohomologyTag::BottChern, self.model.d(), self.model.dc(), &self.ddc, k)
    }

    pub fn aeppli(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.aeppli_type(CohomologyTag::Aeppli, self.model.d(), self.model.dc(), &self.ddc, k)
    }

    pub fn delta(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.on_b(CohomologyTag::Delta, &self.delta, k)
    }

    pub fn deltabar(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.on_b(CohomologyTag::DeltaBar, &self.deltabar, k)
    }

    pub fn delta_plus_deltabar(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.bott_chern_type(CohomologyTag::DeltaPlusDeltaBar, &self.delta, &self.deltabar, &self.delta_deltabar, k)
    }

    pub fn delta_deltabar(&self, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        self.aeppli_type(CohomologyTag::DeltaDeltaBar, &self.delta, &self.deltabar, &self.delta_deltabar, k)
    }

    fn parity_space(&self, which: Parity, k: usize) -> Subspace {
        let p = if which == Parity::Even { &self.even } else { &self.odd };
        p.block(k).image()
    }

    /// de Rham classes with a representative of the given parity.
    fn parity_de_rham(&self, tag: CohomologyTag, which: Parity, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        let exact = image_into(self.model.d(), k);
        let num = kernel(self.model.d(), k).intersect(&self.parity_space(which, k))?.sum(&exact)?;
        self.space(tag, k, num, exact)
    }

    pub fn even(&self, k: usize) -> Result<CohomologySpace> {
        self.parity_de_rham(CohomologyTag::Even, Parity::Even, k)
    }

    pub fn odd(&self, k: usize) -> Result<CohomologySpace> {
        self.parity_de_rham(CohomologyTag::Odd, Parity::Odd, k)
    }

    /// Bott-Chern classes on forms of one parity, divided by `dd^c` of
    /// `B^{k-2}` forms of the other parity.
    fn parity_bott_chern(&self, tag: CohomologyTag, which: Parity, k: usize) -> Result<CohomologySpace> {
        self.check_degree(k)?;
        let num = kernel(self.model.d(), k)
            .intersect(&kernel(self.model.dc(), k))?
            .intersect(&self.parity_space(which, k))?;
        let div = if k >= 2 {
            let src = self.b.space(k - 2).intersect(&self.parity_space(which.flip(), k - 2))?;
            src.image_under(self.ddc.block(k - 2))?
        } else {
            Subspace::zero(num.ambient())
        };
        self.space(tag, k, num, div)
    }

    pub fn bott_chern_even(&self, k: usize) -> Result<CohomologySpace> {
        self.parity_bott_chern(CohomologyTag::BottChernEven, Parity::Even, k)
    }

    pub fn bott_chern_odd(&self, k: usize) -> Result<CohomologySpace> {
        self.parity_bott_chern(CohomologyTag::BottChernOdd, Parity::Odd, k)
    }

    /// `d`-closed `(p,q)`-forms for `(p,q) ∈ {(1,0),(0,1),(2,0),(0,2)}`,
    /// where they are also `d^c`-closed; for `(1,1)` the divisor is `dd^c`
    /// of invariant scalars, which vanishes.
    pub fn bigraded(&self, p: usize, q: usize) -> Result<CohomologySpace> {
        let k = p + q;
        let low = matches!((p, q), (1, 0) | (0, 1) | (2, 0) | (0, 2));
        if !(low || (p, q) == (1, 1)) || k > self.n() {
            return Err(Error::UnsupportedBidegree(p, q));
        }
        let pq = self.model.acs().projector(p, q).block(k).image();
        let num = kernel(self.model.d(), k).intersect(&pq)?;
        let tag = CohomologyTag::Bigraded(p, q);
        if low {
            let num_c = kernel(self.model.dc(), k).intersect(&pq)?;
            if num != num_c {
                return Err(Error::Internal(format!("d- and d^c-closed ({p},{q})-forms differ")));
            }
            return self.space(tag, k, num, Subspace::zero(pq.ambient()));
        }
        let scalars = self.b.space(0).intersect(&kernel(&self.model.ddc_plus_dcd(), 0))?;
        let div = scalars.image_under(self.ddc.block(0))?.intersect(&pq)?;
        self.space(tag, k, num, div)
    }

    pub fn compute(&self, tag: CohomologyTag, k: usize) -> Result<CohomologySpace> {
        use CohomologyTag::*;
        match tag {
            DeRham => self.de_rham(k),
            Dc => self.dc_cohomology(k),
            BottChern => self.bott_chern(k),
            Aeppli => self.aeppli(k),
            Delta => self.delta(k),
            DeltaBar => self.deltabar(k),
            DeltaPlusDeltaBar => self.delta_plus_deltabar(k),
            DeltaDeltaBar => self.delta_deltabar(k),
            Even => self.even(k),
            Odd => self.odd(k),
            BottChernEven => self.bott_chern_even(k),
            BottChernOdd => self.bott_chern_odd(k),
            Bigraded(p, q) => {
                if p + q != k {
                    return Err(Error::UnsupportedBidegree(p, q));
                }
                self.bigraded(p, q)
            }
        }
    }

    /// Dimensions in degrees `0..=n`.
    pub fn dims(&self, tag: CohomologyTag) -> Result<Vec<usize>> {
        (0..=self.n()).map(|k| self.compute(tag, k).map(|s| s.dim())).collect()
    }

    pub fn bc_splitting(&self, k: usize) -> Result<BcSplitting> {
        let bc = self.bott_chern(k)?;
        let even = self.bott_chern_even(k)?;
        let odd = self.bott_chern_odd(k)?;
        let num = even.quotient.numerator().sum(odd.quotient.numerator())?;
        let div = even.quotient.divisor().sum(odd.quotient.divisor())?;
        let mut checks = vec![
            Check::new(format!("h^{k}_d+dc = h^{k}_ev + h^{k}_od"), bc.dim() == even.dim() + odd.dim())
                .with_detail(format!("{} = {} + {}", bc.dim(), even.dim(), odd.dim())),
            Check::new(format!("closed forms of degree {k} split by parity"), &num == bc.quotient.numerator()),
            Check::new(format!("dd^c-exact forms of degree {k} split by parity"), &div == bc.quotient.divisor()),
        ];
        // conjugation sends (p,q) to (q,p), flipping the parity of p exactly in odd degree
        let conj_ev = even.quotient.numerator().conj();
        let partner = if k % 2 == 1 { odd.quotient.numerator() } else { even.quotient.numerator() };
        checks.push(Check::new(format!("conjugation acts on parity as expected in degree {k}"), &conj_ev == partner));
        if k == 1 {
            let h10 = self.bigraded(1, 0)?;
            let h01 = self.bigraded(0, 1)?;
            let sum = h10.quotient.numerator().sum(h01.quotient.numerator())?;
            checks.push(Check::new(
                "H^1_d+dc = H^(1,0) ⊕ H^(0,1)",
                &sum == bc.quotient.numerator() && h10.dim() + h01.dim() == bc.dim(),
            ));
        }
        Ok(BcSplitting { degree: k, even, odd, checks })
    }

    /// The five maps of the diagram relating Bott-Chern, de Rham, `d^c` and
    /// Aeppli cohomology in degree `k`, in representative coordinates.
    pub fn diagram_maps(&self, k: usize) -> Result<DiagramMaps> {
        let bc = self.bott_chern(k)?;
        let dr = self.de_rham(k)?;
        let dcc = self.dc_cohomology(k)?;
        let a = self.aeppli(k)?;
        let j_inv = self.model.acs().j_inv_op();
        let bc_to_dr = induced(&bc, &dr, None)?;
        let bc_to_dc = induced(&bc, &dcc, None)?;
        let dr_to_a = induced(&dr, &a, None)?;
        let dc_to_a = induced(&dcc, &a, None)?;
        let j = induced(&dr, &dcc, Some(j_inv.block(k)))?;
        let j_back = induced(&dcc, &dr, Some(self.model.acs().j_op().block(k)))?;
        let square = &dr_to_a * &bc_to_dr == &dc_to_a * &bc_to_dc;
        let j_iso = &j_back * &j == Matrix::identity(dr.dim()) && &j * &j_back == Matrix::identity(dcc.dim());
        let checks = vec![
            Check::new(format!("BC → dR → A = BC → dc → A in degree {k}"), square),
            Check::new(format!("J: H^{k}_dR ≅ H^{k}_dc"), j_iso),
        ];
        Ok(DiagramMaps { degree: k, bc_to_dr, bc_to_dc, dr_to_a, dc_to_a, j, checks })
    }

    /// `[α]_{d+d^c} · [γ]_{dd^c} = [α ∧ γ]_{dd^c}`, as coordinates in the
    /// Aeppli representatives of degree `deg α + deg γ`.
    pub fn module_pairing(&self, alpha: &InvariantForm, gamma: &InvariantForm) -> Result<Vec<Scalar>> {
        let (k, l) = (alpha.degree(), gamma.degree());
        if k + l > self.n() {
            return Ok(Vec::new());
        }
        let bc = self.bott_chern(k)?;
        if !bc.quotient.numerator().contains(&alpha.to_vector())? {
            return Err(Error::NotInSubspace(format!("{alpha} is not d- and d^c-closed")));
        }
        let a = self.aeppli(l)?;
        if !a.quotient.numerator().contains(&gamma.to_vector())? {
            return Err(Error::NotInSubspace(format!("{gamma} is not dd^c-closed in C")));
        }
        let target = self.aeppli(k + l)?;
        target
            .class_of(&alpha.wedge(gamma).to_vector())?
            .ok_or_else(|| Error::Internal(format!("{alpha} ∧ {gamma} is not dd^c-closed")))
    }
}

/// Matrix of the map induced by `op` (identity when `None`) between two
/// quotients, after checking it sends numerator to numerator and divisor to
/// divisor.
fn induced(src: &CohomologySpace, dst: &CohomologySpace, op: Option<&Matrix>) -> Result<Matrix> {
    let apply = |v: &Vec<Scalar>| op.map_or_else(|| v.clone(), |m| m.apply(v));
    let name = format!("H^{}_{} → H^{}_{}", src.degree, src.tag, dst.degree, dst.tag);
    for v in src.quotient.divisor().basis() {
        if !dst.quotient.divisor().contains(&apply(v))? {
            return Err(Error::Internal(format!("{name} is not well defined")));
        }
    }
    let cols = src
        .representatives()
        .iter()
        .map(|v| dst.class_of(&apply(v))?.ok_or_else(|| Error::Internal(format!("{name} leaves the closed forms"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(dst.dim(), &cols)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcSplitting {
    pub degree: usize,
    pub even: CohomologySpace,
    pub odd: CohomologySpace,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramMaps {
    pub degree: usize,
    pub bc_to_dr: Matrix,
    pub bc_to_dc: Matrix,
    pub dr_to_a: Matrix,
    pub dc_to_a: Matrix,
    /// `H_dR → H_{d^c}` induced by `J^{-1}`.
    pub j: Matrix,
    pub checks: Vec<Check>,
}

/// `H_δ+δ̄ = H_d+dc` and `H_δδ̄ = H_ddc` as equal quotients in every degree.
pub fn delta_equivalence_checks(engine: &CohomologyEngine<'_>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 0..=engine.n() {
        let bc = engine.bott_chern(k)?;
        let dbc = engine.delta_plus_deltabar(k)?;
        let a = engine.aeppli(k)?;
        let da = engine.delta_deltabar(k)?;
        out.push(Check::new(format!("H^{k}_delta+deltabar = H^{k}_d+dc"), bc.quotient == dbc.quotient));
        out.push(Check::new(format!("H^{k}_deltadeltabar = H^{k}_ddc"), a.quotient == da.quotient));
    }
    Ok(out)
}

/// Harmonic forms inject into Bott-Chern and Aeppli cohomology, bijectively
/// in the degrees where the cohomology is computed by harmonic forms, and
/// `h^1_{d+d^c} = h^{2m-1}_{dd^c}`.
pub fn harmonic_cohomology_checks(engine: &CohomologyEngine<'_>) -> Result<Vec<Check>> {
    let model = engine.model();
    let n = engine.n();
    let mut out = Vec::new();
    for k in 0..=n {
        let bc = engine.bott_chern(k)?;
        let a = engine.aeppli(k)?;
        for (op, target, iso) in [
            (HarmonicOp::DPlusDc, &bc, k <= 1),
            (HarmonicOp::DcPlusD, &bc, k <= 1),
            (HarmonicOp::DDc, &a, k == 0 || k + 1 >= n),
            (HarmonicOp::DcD, &a, k == 0 || k + 1 >= n),
        ] {
            let h = harmonic_space(model, op, k)?.basis;
            let cols: Option<Vec<Vec<Scalar>>> = h.basis().iter().map(|v| target.class_of(v).ok().flatten()).collect();
            let (closed, rank) = match cols {
                Some(c) => (true, Matrix::from_columns(target.dim(), &c)?.rank()),
                None => (false, 0),
            };
            out.push(
                Check::new(format!("H^{k}_{} ↪ H^{k}_{}", op.tag(), target.tag), closed && rank == h.dim())
                    .with_detail(format!("rank {rank} of {}", h.dim())),
            );
            if iso {
                out.push(Check::new(
                    format!("H^{k}_{} ≅ H^{k}_{}", op.tag(), target.tag),
                    closed && rank == target.dim(),
                ));
            }
        }
    }
    let h1 = engine.bott_chern(1)?.dim();
    let a = engine.aeppli(n - 1)?.dim();
    out.push(Check::new(format!("h^1_d+dc = h^{}_ddc", n - 1), h1 == a).with_detail(format!("{h1} vs {a}")));
    Ok(out)
}

pub fn betti_numbers(engine: &CohomologyEngine<'_>) -> Result<Vec<usize>> {
    engine.dims(CohomologyTag::DeRham)
}

impl fmt::Display for CohomologySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H^{}_{} (dim {})", self.degree, self.tag, self.dim())
    }
}
