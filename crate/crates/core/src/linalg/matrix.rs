use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{LinalgError, Scalar, Subspace};

/// Dense matrix over the Gaussian rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Nonzero rows of the reduced form, top to bottom.
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::Shape { expected: (n, cols), found: (n, row.len()) });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        for c in columns {
            if c.len() != rows {
                return Err(LinalgError::Shape { expected: (rows, columns.len()), found: (c.len(), columns.len()) });
            }
        }
        Ok(Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Checked entry access.
    pub fn get(&self, r: usize, c: usize) -> Result<&Scalar, LinalgError> {
        if r >= self.rows || c >= self.cols {
            return Err(LinalgError::OutOfBounds { index: (r, c), shape: self.shape() });
        }
        Ok(&self.data[r * self.cols + c])
    }

    /// Unchecked (panicking) entry access for internal loops.
    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) -> Result<(), LinalgError> {
        if r >= self.rows || c >= self.cols {
            return Err(LinalgError::OutOfBounds { index: (r, c), shape: self.shape() });
        }
        self.data[r * self.cols + c] = v;
        Ok(())
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn conj(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(Scalar::conj).collect() }
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r..self.cols).all(|c| *self.at(r, c) == self.at(c, r).conj()))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape { expected: (self.cols, rhs.cols), found: rhs.shape() });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if !b.is_zero() {
                        let p = a * b;
                        *out.at_mut(r, c) += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() {
                    continue;
                }
                for rr in 0..rhs.rows {
                    for cc in 0..rhs.cols {
                        let b = rhs.at(rr, cc);
                        if !b.is_zero() {
                            *out.at_mut(r * rhs.rows + rr, c * rhs.cols + cc) = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Result<Matrix, LinalgError> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::Shape { expected: (b.rows, cols), found: b.shape() });
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.at(rows[r], cols[c]).clone())
    }

    /// Reduced row echelon form.
    ///
    /// Pivot rows are chosen by fewest nonzeros to limit fill-in, and
    /// elimination only touches rows and columns with nonzero entries. The
    /// result is the unique RREF regardless of pivot order.
    pub fn rref(&self) -> Echelon {
        let mut rows: Vec<Vec<Scalar>> = self.to_rows();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..self.cols {
            if top == rows.len() {
                break;
            }
            let pick = (top..rows.len())
                .filter(|&r| !rows[r][c].is_zero())
                .min_by_key(|&r| rows[r][c..].iter().filter(|x| !x.is_zero()).count());
            let Some(p) = pick else { continue };
            rows.swap(top, p);
            let inv = rows[top][c].inv().expect("nonzero pivot");
            let support: Vec<usize> = (c..self.cols).filter(|&j| !rows[top][j].is_zero()).collect();
            for &j in &support {
                rows[top][j] = &rows[top][j] * &inv;
            }
            let pivot_row = core::mem::take(&mut rows[top]);
            for (r, row) in rows.iter_mut().enumerate() {
                if r == top || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for &j in &support {
                    let t = &f * &pivot_row[j];
                    row[j] -= &t;
                }
            }
            rows[top] = pivot_row;
            pivots.push(c);
            top += 1;
        }
        rows.truncate(top);
        Echelon { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Exact null space as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let ech = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = -&row[free];
            }
            basis.push(v);
        }
        Subspace::span(n, basis).expect("kernel vectors have ambient length")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.columns()).expect("columns have ambient length")
    }

    pub fn determinant(&self) -> Result<Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.shape()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= &a[c][c];
            let inv = a[c][c].inv().expect("nonzero pivot");
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] * &inv;
                let (top, bottom) = a.split_at_mut(r);
                for (x, p) in bottom[0][c..n].iter_mut().zip(&top[c][c..n]) {
                    *x -= &(&f * p);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.shape()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let ech = aug.rref();
        if n > 0 && ech.pivots.get(n - 1) != Some(&(n - 1)) {
            return Err(LinalgError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| ech.rows[r][n + c].clone()))
    }

    /// Some solution `x` of `self · x = b`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "solve: rhs length mismatch");
        let aug =
            Matrix::from_fn(
                self.rows,
                self.cols + 1,
                |r, c| {
                    if c < self.cols {
                        self.at(r, c).clone()
                    } else {
                        b[r].clone()
                    }
                },
            );
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }

    /// Exact test of Hermitian positive semi-definiteness (`strict` for
    /// definiteness) by symmetric elimination.
    pub fn is_hermitian_psd(&self, strict: bool) -> bool {
        if !self.is_hermitian() {
            return false;
        }
        let n = self.rows;
        let mut a = self.to_rows();
        for k in 0..n {
            let d = a[k][k].clone();
            if d.is_negative_real() {
                return false;
            }
            if d.is_zero() {
                if strict || (k + 1..n).any(|j| !a[k][j].is_zero()) {
                    return false;
                }
                continue;
            }
            let inv = d.inv().expect("nonzero");
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                let (top, bottom) = a.split_at_mut(i);
                for (x, p) in bottom[0][k..n].iter_mut().zip(&top[k][k..n]) {
                    *x -= &(&f * p);
                }
            }
        }
        true
    }
}

/// `A^† = G_src^{-1} · A^H · G_dst`, the adjoint of `op: src → dst` with
/// respect to the Hermitian products `⟨x, y⟩ = y^H G x` on both sides.
pub fn gram_adjoint(op: &Matrix, gram_src: &Matrix, gram_dst: &Matrix) -> Result<Matrix, LinalgError> {
    if gram_src.rows != op.cols || gram_dst.rows != op.rows {
        return Err(LinalgError::Shape { expected: (op.rows, op.cols), found: (gram_dst.rows, gram_src.rows) });
    }
    if !gram_src.is_hermitian() || !gram_dst.is_hermitian() {
        return Err(LinalgError::NotHermitian);
    }
    let inv = gram_src.inverse()?;
    inv.try_mul(&op.conj_transpose())?.try_mul(gram_dst)
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:>8} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_kernel_is_zero() {
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn zero_kernel_is_full() {
        let k = Matrix::zeros(2, 3).kernel();
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn out_of_bounds_is_error() {
        let a = Matrix::zeros(2, 2);
        assert!(matches!(a.get(2, 0), Err(LinalgError::OutOfBounds { .. })));
        assert!(a.get(1, 1).is_ok());
    }

    #[test]
    fn rank_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank() + a.kernel().dim(), 3);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant().unwrap(), Scalar::from(1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[Scalar::from(1), Scalar::from(2)]).is_none());
        let x = a.solve(&[Scalar::from(3), Scalar::from(3)]).unwrap();
        assert_eq!(a.apply(&x), vec![Scalar::from(3), Scalar::from(3)]);
    }

    #[test]
    fn psd_checks() {
        assert!(m(&[&[2, 1], &[1, 2]]).is_hermitian_psd(true));
        assert!(m(&[&[1, 1], &[1, 1]]).is_hermitian_psd(false));
        assert!(!m(&[&[1, 1], &[1, 1]]).is_hermitian_psd(true));
        assert!(!m(&[&[1, 2], &[2, 1]]).is_hermitian_psd(false));
        assert!(!m(&[&[0, 1], &[1, 0]]).is_hermitian_psd(false));
    }

    #[test]
    fn adjoint_identity_and_orthonormal() {
        let g = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(gram_adjoint(&Matrix::identity(2), &g, &g).unwrap(), Matrix::identity(2));
        let a = Matrix::from_fn(2, 3, |r, c| Scalar::from((r * 3 + c) as i64) + Scalar::i());
        let adj = gram_adjoint(&a, &Matrix::identity(3), &Matrix::identity(2)).unwrap();
        assert_eq!(adj, a.conj_transpose());
    }

    #[test]
    fn adjoint_rejects_non_hermitian() {
        let g = m(&[&[1, 2], &[0, 1]]);
        assert_eq!(gram_adjoint(&Matrix::identity(2), &g, &g), Err(LinalgError::NotHermitian));
    }
}
