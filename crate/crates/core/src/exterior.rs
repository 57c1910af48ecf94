//! Exterior algebra of the dual of a Lie algebra and its Chevalley–Eilenberg
//! differential.
//!
//! Basis covectors are `e^1, …, e^n` (0-based `0..n` in code). A basis
//! `k`-form `e^{i_1 … i_k}` with `i_1 < … < i_k` is an [`IndexWord`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};

use crate::linalg::{Matrix, Scalar};
use crate::{Error, Result};

/// Largest supported dimension of the Lie algebra.
pub const MAX_DIM: usize = 16;

/// Strictly increasing index word, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexWord(u32);

impl IndexWord {
    pub const EMPTY: IndexWord = IndexWord(0);

    pub fn from_mask(mask: u32) -> Self {
        IndexWord(mask)
    }

    pub fn single(i: usize) -> Self {
        IndexWord(1 << i)
    }

    /// From any list of distinct indices; `None` on repeats.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut m = 0u32;
        for &i in indices {
            if i >= MAX_DIM || m & (1 << i) != 0 {
                return None;
            }
            m |= 1 << i;
        }
        Some(IndexWord(m))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let m = self.0;
        (0..MAX_DIM).filter(move |&i| m & (1 << i) != 0)
    }

    pub fn is_disjoint(self, other: IndexWord) -> bool {
        self.0 & other.0 == 0
    }

    /// Position of `i` inside the word, if present.
    pub fn position(self, i: usize) -> Option<usize> {
        self.contains(i).then(|| (self.0 & ((1 << i) - 1)).count_ones() as usize)
    }

    pub fn without(self, i: usize) -> IndexWord {
        IndexWord(self.0 & !(1 << i))
    }

    /// Complement inside `{0, …, n-1}`.
    pub fn complement(self, n: usize) -> IndexWord {
        IndexWord(!self.0 & ((1u32 << n) - 1))
    }

    /// `e^I ∧ e^J = sign · e^{I ∪ J}`; `None` if the words overlap.
    pub fn wedge(self, other: IndexWord) -> Option<(i32, IndexWord)> {
        if !self.is_disjoint(other) {
            return None;
        }
        let mut inversions = 0u32;
        for j in other.indices() {
            inversions += (self.0 >> (j + 1)).count_ones();
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((sign, IndexWord(self.0 | other.0)))
    }
}

impl Ord for IndexWord {
    /// Degree first, then lexicographic on the index sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for IndexWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexWord {
    /// `e12`, or `e(1,10)` once an index exceeds 9; `1` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let idx: Vec<usize> = self.indices().map(|i| i + 1).collect();
        if idx.iter().all(|&i| i <= 9) {
            f.write_char('e')?;
            for i in idx {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            f.write_str("e(")?;
            for (k, i) in idx.iter().enumerate() {
                if k > 0 {
                    f.write_char(',')?;
                }
                write!(f, "{i}")?;
            }
            f.write_char(')')
        }
    }
}

impl fmt::Debug for IndexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The `C(n,k)` basis words of degree `k`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormBasis {
    dim: usize,
    degree: usize,
    words: Vec<IndexWord>,
}

impl FormBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        let mut words = Vec::new();
        if degree <= dim {
            let mut idx: Vec<usize> = (0..degree).collect();
            loop {
                words.push(IndexWord::from_indices(&idx).expect("distinct"));
                // next combination in lexicographic order
                let Some(p) = (0..degree).rev().find(|&p| idx[p] < dim - degree + p) else { break };
                idx[p] += 1;
                for q in p + 1..degree {
                    idx[q] = idx[q - 1] + 1;
                }
            }
        }
        FormBasis { dim, degree, words }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[IndexWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> IndexWord {
        self.words[i]
    }

    pub fn index_of(&self, w: IndexWord) -> Option<usize> {
        if w.degree() != self.degree {
            return None;
        }
        self.words.binary_search(&w).ok()
    }
}

/// All form bases `Λ^0, …, Λ^n` of one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exterior {
    dim: usize,
    bases: Vec<FormBasis>,
}

impl Exterior {
    pub fn new(dim: usize) -> Self {
        Exterior { dim, bases: (0..=dim).map(|k| FormBasis::new(dim, k)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self, k: usize) -> &FormBasis {
        &self.bases[k]
    }

    /// `dim Λ^k`, zero outside `0..=n`.
    pub fn rank(&self, k: isize) -> usize {
        if k < 0 || k as usize > self.dim {
            0
        } else {
            self.bases[k as usize].len()
        }
    }

    /// The matrix induced on `Λ^k` by a linear map `a` on 1-forms
    /// (acting on coefficient vectors): entry `[I, J] = det a[I, J]`.
    pub fn compound(&self, a: &Matrix, k: usize) -> Matrix {
        let b = &self.bases[k];
        let idx: Vec<Vec<usize>> = b.words().iter().map(|w| w.indices().collect()).collect();
        Matrix::from_fn(b.len(), b.len(), |r, c| a.select(&idx[r], &idx[c]).determinant().expect("square minor"))
    }

    /// Matrix of `α ↦ β ∧ α` from `Λ^k` to `Λ^{k+deg β}`.
    pub fn wedge_left_matrix(&self, beta: &InvariantForm, k: usize) -> Matrix {
        let t = k + beta.degree();
        if t > self.dim {
            return Matrix::zeros(0, self.rank(k as isize));
        }
        let src = &self.bases[k];
        let dst = &self.bases[t];
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (c, &w) in src.words().iter().enumerate() {
            for (bw, coef) in beta.terms() {
                if let Some((s, u)) = bw.wedge(w) {
                    let r = dst.index_of(u).expect("basis word");
                    let v = if s > 0 { coef.clone() } else { -coef };
                    *m.at_mut(r, c) += &v;
                }
            }
        }
        m
    }

    /// Matrix of the interior product `ι_{e_i}: Λ^k → Λ^{k-1}`, with
    /// `ι_{e_i} e^I = (-1)^r e^{I∖i}` where `i` sits at position `r`.
    pub fn interior_matrix(&self, i: usize, k: usize) -> Matrix {
        if k == 0 {
            return Matrix::zeros(0, 1);
        }
        let src = &self.bases[k];
        let dst = &self.bases[k - 1];
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (c, &w) in src.words().iter().enumerate() {
            if let Some(r) = w.position(i) {
                let row = dst.index_of(w.without(i)).expect("basis word");
                *m.at_mut(row, c) = Scalar::from(if r % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }
}

/// A form of fixed degree, stored sparsely; zero coefficients are never kept.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InvariantForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<IndexWord, Scalar>,
}

impl InvariantForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        InvariantForm { dim, degree, coeffs: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        let mut f = InvariantForm::zero(dim, 0);
        f.add_term(IndexWord::EMPTY, c);
        f
    }

    pub fn one(dim: usize) -> Self {
        InvariantForm::constant(dim, Scalar::one())
    }

    /// The basis covector `e^{i+1}`.
    pub fn covector(dim: usize, i: usize) -> Self {
        InvariantForm::word(dim, IndexWord::single(i))
    }

    pub fn word(dim: usize, w: IndexWord) -> Self {
        let mut f = InvariantForm::zero(dim, w.degree());
        f.add_term(w, Scalar::one());
        f
    }

    /// Builds a form from `(indices, coefficient)` pairs with indices in any
    /// order; reordering signs are applied and repeated indices give zero.
    pub fn from_terms(dim: usize, degree: usize, terms: &[(&[usize], Scalar)]) -> Result<Self> {
        let mut f = InvariantForm::zero(dim, degree);
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::DimensionMismatch { expected: degree, found: idx.len() });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= dim) {
                return Err(Error::DegreeOutOfRange(bad + 1));
            }
            let mut acc = (1, IndexWord::EMPTY);
            let mut zero = false;
            for &i in idx.iter() {
                match acc.1.wedge(IndexWord::single(i)) {
                    Some((s, w)) => acc = (acc.0 * s, w),
                    None => {
                        zero = true;
                        break;
                    }
                }
            }
            if !zero {
                let c = if acc.0 > 0 { c.clone() } else { -c };
                f.add_term(acc.1, c);
            }
        }
        Ok(f)
    }

    pub fn from_vector(dim: usize, degree: usize, v: &[Scalar]) -> Self {
        let basis = FormBasis::new(dim, degree);
        assert_eq!(v.len(), basis.len(), "coefficient vector length");
        let mut f = InvariantForm::zero(dim, degree);
        for (w, c) in basis.words().iter().zip(v) {
            f.add_term(*w, c.clone());
        }
        f
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        let basis = FormBasis::new(self.dim, self.degree);
        let mut v = vec![Scalar::zero(); basis.len()];
        for (w, c) in &self.coeffs {
            v[basis.index_of(*w).expect("basis word")] = c.clone();
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: IndexWord) -> Scalar {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexWord, &Scalar)> {
        self.coeffs.iter().map(|(w, c)| (*w, c))
    }

    pub fn add_term(&mut self, w: IndexWord, c: Scalar) {
        assert_eq!(w.degree(), self.degree, "word degree");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(w).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn add(&self, other: &InvariantForm) -> InvariantForm {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree), "form sum degree");
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &InvariantForm) -> InvariantForm {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> InvariantForm {
        let mut out = InvariantForm::zero(self.dim, self.degree);
        for (w, c) in self.terms() {
            out.add_term(w, c * s);
        }
        out
    }

    pub fn conj(&self) -> InvariantForm {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = c.conj();
        }
        out
    }

    /// `α ∧ β`; the zero form of degree `deg α + deg β` if that exceeds `n`.
    pub fn wedge(&self, other: &InvariantForm) -> InvariantForm {
        assert_eq!(self.dim, other.dim, "wedge dimension");
        let mut out = InvariantForm::zero(self.dim, self.degree + other.degree);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some((s, w)) = a.wedge(b) {
                    let p = x * y;
                    out.add_term(w, if s > 0 { p } else { -p });
                }
            }
        }
        out
    }
}

impl fmt::Display for InvariantForm {
    /// Terms in basis order, e.g. `e12+e34`, `-1/2*e13`, `(1+1i)*e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            let neg = c.is_negative_real();
            let abs = if neg { -c } else { c.clone() };
            if neg {
                f.write_char('-')?;
            } else if k > 0 {
                f.write_char('+')?;
            }
            if w == IndexWord::EMPTY {
                if abs.is_real() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
                continue;
            }
            if !abs.is_one() {
                if abs.is_real() {
                    write!(f, "{abs}*")?;
                } else {
                    write!(f, "({abs})*")?;
                }
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for InvariantForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree, self)
    }
}

/// A Lie algebra given by structure constants `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Scalar>,
}

impl LieAlgebra {
    fn check_dim(dim: usize) -> Result<()> {
        if dim == 0 || dim % 2 != 0 || dim > MAX_DIM {
            return Err(Error::OddDimension(dim));
        }
        Ok(())
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::check_dim(dim)?;
        Ok(LieAlgebra { dim, c: vec![Scalar::zero(); dim * dim * dim] })
    }

    /// From a list of brackets `[e_i, e_j] = Σ coef·e_k` given as
    /// `(i, j, k, coef)` with 0-based indices. Antisymmetry is filled in;
    /// the Jacobi identity is not checked here (see [`LieAlgebra::validate`]).
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut g = LieAlgebra::abelian(dim)?;
        for (i, j, k, v) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: i.max(j).max(k) + 1 });
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotAntisymmetric(i, j));
                }
                continue;
            }
            let ij = g.idx(i, j, k);
            let ji = g.idx(j, i, k);
            g.c[ij] += v;
            g.c[ji] -= v;
        }
        Ok(g)
    }

    /// From the differentials `de^k` of the dual basis, using
    /// `d e^k = -Σ_{i<j} c^k_{ij} e^{ij}`. Jacobi is not checked here.
    pub fn from_differentials(de: &[InvariantForm]) -> Result<Self> {
        let dim = de.len();
        let mut g = LieAlgebra::abelian(dim)?;
        for (k, f) in de.iter().enumerate() {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: f.dim() });
            }
            if f.degree() != 2 && !f.is_zero() {
                return Err(Error::DimensionMismatch { expected: 2, found: f.degree() });
            }
            for (w, v) in f.terms() {
                let ij: Vec<usize> = w.indices().collect();
                let (i, j) = (ij[0], ij[1]);
                let a = g.idx(i, j, k);
                let b = g.idx(j, i, k);
                g.c[a] = -v;
                g.c[b] = v.clone();
            }
        }
        Ok(g)
    }

    /// Checks Jacobi; the constructors only enforce antisymmetry.
    pub fn validate(self) -> Result<Self> {
        if let Some((i, j, k)) = self.jacobi_check() {
            return Err(Error::Jacobi(i, j, k));
        }
        Ok(self)
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c^k_{ij}`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// `[x, y]` for frame-coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate().take(n) {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate().take(n) {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.c[self.idx(i, j, k)];
                    if !c.is_zero() {
                        *o += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    /// First triple `i < j < k` (0-based) violating the Jacobi identity.
    pub fn jacobi_check(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let e: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&self.bracket(&e[i], &e[j]), &e[k]);
                    let b = self.bracket(&self.bracket(&e[j], &e[k]), &e[i]);
                    let c = self.bracket(&self.bracket(&e[k], &e[i]), &e[j]);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `tr ad(e_i) = Σ_k c^k_{ik}`.
    pub fn ad_trace(&self, i: usize) -> Scalar {
        (0..self.dim).map(|k| self.c[self.idx(i, k, k)].clone()).sum()
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| self.ad_trace(i).is_zero())
    }

    /// First basis index with nonzero `tr ad`.
    pub fn unimodular_check(&self) -> Result<()> {
        match (0..self.dim).find(|&i| !self.ad_trace(i).is_zero()) {
            Some(i) => Err(Error::NotUnimodular(i)),
            None => Ok(()),
        }
    }

    /// `d e^k`.
    pub fn de(&self, k: usize) -> InvariantForm {
        let n = self.dim;
        let mut f = InvariantForm::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                let c = &self.c[self.idx(i, j, k)];
                if !c.is_zero() {
                    f.add_term(IndexWord::from_indices(&[i, j]).expect("distinct"), -c);
                }
            }
        }
        f
    }

    /// `d(e^I) = Σ_r (-1)^r de^{i_r} ∧ e^{I ∖ i_r}`.
    pub fn d_word(&self, w: IndexWord) -> InvariantForm {
        let n = self.dim;
        let mut out = InvariantForm::zero(n, w.degree() + 1);
        for (r, i) in w.indices().enumerate() {
            let t = self.de(i).wedge(&InvariantForm::word(n, w.without(i)));
            out = out.add(&if r % 2 == 0 { t } else { t.scale(&-Scalar::one()) });
        }
        out
    }

    pub fn d(&self, alpha: &InvariantForm) -> InvariantForm {
        assert_eq!(alpha.dim(), self.dim, "form dimension");
        let mut out = InvariantForm::zero(self.dim, alpha.degree() + 1);
        if alpha.degree() >= self.dim {
            return out;
        }
        for (w, c) in alpha.terms() {
            out = out.add(&self.d_word(w).scale(c));
        }
        out
    }

    /// Matrix of `d: Λ^k → Λ^{k+1}` in the lexicographic bases.
    pub fn d_matrix(&self, k: usize) -> Matrix {
        let src = FormBasis::new(self.dim, k);
        if k >= self.dim {
            return Matrix::zeros(0, src.len());
        }
        let dst = FormBasis::new(self.dim, k + 1);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (c, &w) in src.words().iter().enumerate() {
            for (u, v) in self.d_word(w).terms() {
                *m.at_mut(dst.index_of(u).expect("basis word"), c) = v.clone();
            }
        }
        m
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LieAlgebra(")?;
        for k in 0..self.dim {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.de(k))?;
        }
        f.write_char(')')
    }
}

/// Renders `de^1, …, de^n` one per entry, e.g. `["0", "0", "0", "-e23"]`.
pub fn differentials_display(g: &LieAlgebra) -> Vec<String> {
    use alloc::string::ToString;
    (0..g.dim()).map(|k| g.de(k).to_string()).collect()
}
