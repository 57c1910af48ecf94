use alloc::vec::Vec;

use super::{LinalgError, Matrix, Scalar};

/// A linear subspace of `ℂ^n` held as the nonzero rows of its reduced row
/// echelon form. The form is unique, so `==` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(LinalgError::VectorLength { ambient, found: v.len() });
            }
        }
        let ech = Matrix::from_rows(ambient, vectors)?.rref();
        Ok(Subspace { ambient, basis: ech.rows, pivots: ech.pivots })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let id = Matrix::identity(ambient);
        Subspace { ambient, basis: id.to_rows(), pivots: (0..ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis (echelon rows).
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis).expect("basis vectors have ambient length")
    }

    fn check_vec(&self, v: &[Scalar]) -> Result<(), LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::VectorLength { ambient: self.ambient, found: v.len() });
        }
        Ok(())
    }

    fn check_same(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace: the unique representative of
    /// `v + S` vanishing at every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        self.check_vec(v)?;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &(&f * r);
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ S`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_same(other)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_same(other)?;
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, v)
    }

    /// Bilinear annihilator `{w : Σ_j w_j s_j = 0 for all s ∈ S}`.
    pub fn annihilator(&self) -> Subspace {
        Matrix::from_rows(self.ambient, self.basis.clone()).expect("rows have ambient length").kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_same(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let mut rows = self.annihilator().basis;
        rows.extend(other.annihilator().basis);
        Ok(Matrix::from_rows(self.ambient, rows)?.kernel())
    }

    /// `A(S)` for a matrix with `cols == ambient`.
    pub fn image_under(&self, a: &Matrix) -> Result<Subspace, LinalgError> {
        if a.cols() != self.ambient {
            return Err(LinalgError::Shape { expected: (a.rows(), self.ambient), found: a.shape() });
        }
        Subspace::span(a.rows(), self.basis.iter().map(|b| a.apply(b)).collect())
    }

    /// `{v : A v ∈ S}` for a matrix with `rows == ambient`.
    pub fn preimage_under(&self, a: &Matrix) -> Result<Subspace, LinalgError> {
        if a.rows() != self.ambient {
            return Err(LinalgError::Shape { expected: (self.ambient, a.cols()), found: a.shape() });
        }
        if self.is_full() {
            return Ok(Subspace::full(a.cols()));
        }
        let ann = Matrix::from_rows(self.ambient, self.annihilator().basis)?;
        Ok(ann.try_mul(a)?.kernel())
    }

    /// Orthogonal complement for the Hermitian product `⟨x, y⟩ = y^H G x`.
    pub fn orthogonal_complement(&self, gram: &Matrix) -> Result<Subspace, LinalgError> {
        if gram.shape() != (self.ambient, self.ambient) {
            return Err(LinalgError::Shape { expected: (self.ambient, self.ambient), found: gram.shape() });
        }
        let rows: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| {
                let conj: Vec<Scalar> = b.iter().map(Scalar::conj).collect();
                gram.transpose().apply(&conj)
            })
            .collect();
        Ok(Matrix::from_rows(self.ambient, rows)?.kernel())
    }

    /// Entrywise complex conjugate of the subspace.
    pub fn conj(&self) -> Subspace {
        let v = self.basis.iter().map(|b| b.iter().map(Scalar::conj).collect()).collect();
        Subspace::span(self.ambient, v).expect("same ambient")
    }
}

/// `numerator / divisor` with canonical coset representatives.
///
/// The representatives span the normal forms of the numerator modulo the
/// divisor, reduced to echelon form; they depend only on the two subspaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quotient {
    numerator: Subspace,
    divisor: Subspace,
    reps: Subspace,
}

impl Quotient {
    pub fn new(numerator: Subspace, divisor: Subspace) -> Result<Self, LinalgError> {
        if !divisor.is_subspace_of(&numerator)? {
            return Err(LinalgError::NotContained);
        }
        let reduced = numerator.basis.iter().map(|b| divisor.reduce(b)).collect::<Result<Vec<_>, _>>()?;
        let reps = Subspace::span(numerator.ambient, reduced)?;
        debug_assert_eq!(reps.dim() + divisor.dim(), numerator.dim());
        Ok(Quotient { numerator, divisor, reps })
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.numerator
    }

    pub fn divisor(&self) -> &Subspace {
        &self.divisor
    }

    /// Canonical representatives completing the divisor to the numerator.
    pub fn representatives(&self) -> &Subspace {
        &self.reps
    }

    /// Coordinates of the class of `v` against the representatives, or
    /// `None` if `v` is not in the numerator.
    pub fn class_of(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if !self.numerator.contains(v)? {
            return Ok(None);
        }
        let r = self.divisor.reduce(v)?;
        self.reps.coordinates(&r)
    }

    pub fn is_zero_class(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        self.divisor.contains(v)
    }
}
