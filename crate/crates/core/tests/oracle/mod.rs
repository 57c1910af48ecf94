//! Naive dense Gaussian elimination over `Q(i)`, kept apart from the library
//! so that kernels and ranks can be cross-checked.
#![allow(dead_code)]

use acx_core::{Matrix, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct C(pub BigRational, pub BigRational);

impl C {
    fn zero() -> C {
        C(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    fn mul(&self, o: &C) -> C {
        C(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }

    fn sub(&self, o: &C) -> C {
        C(&self.0 - &o.0, &self.1 - &o.1)
    }

    fn add(&self, o: &C) -> C {
        C(&self.0 + &o.0, &self.1 + &o.1)
    }

    fn inv(&self) -> C {
        let n = &self.0 * &self.0 + &self.1 * &self.1;
        C(&self.0 / &n, -&self.1 / &n)
    }
}

fn from_scalar(s: &Scalar) -> C {
    C(s.re().clone(), s.im().clone())
}

pub type Dense = Vec<Vec<C>>;

pub fn dense(m: &Matrix) -> Dense {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| from_scalar(m.at(r, c))).collect()).collect()
}

pub fn dense_columns(cols: &[Vec<Scalar>], rows: usize) -> Dense {
    (0..rows).map(|r| cols.iter().map(|c| from_scalar(&c[r])).collect()).collect()
}

/// Row-reduces in place; returns pivot columns.
fn eliminate(a: &mut Dense, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].inv();
        for x in a[row].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[row].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot).take(cols) {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(a: &Dense, cols: usize) -> usize {
    let mut a = a.clone();
    eliminate(&mut a, cols).len()
}

/// Kernel basis, one vector per free column.
pub fn kernel(a: &Dense, cols: usize) -> Vec<Vec<C>> {
    let mut a = a.clone();
    let pivots = eliminate(&mut a, cols);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![C::zero(); cols];
        v[free] = C(BigRational::one(), BigRational::zero());
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = C::zero().sub(&a[r][free]);
        }
        out.push(v);
    }
    out
}

pub fn mul(a: &Dense, b: &Dense, inner: usize, cols: usize) -> Dense {
    a.iter()
        .map(|row| (0..cols).map(|c| (0..inner).fold(C::zero(), |acc, k| acc.add(&row[k].mul(&b[k][c])))).collect())
        .collect()
}

pub fn apply(a: &Dense, v: &[C]) -> Vec<C> {
    a.iter().map(|row| row.iter().zip(v).fold(C::zero(), |acc, (x, y)| acc.add(&x.mul(y)))).collect()
}

pub fn vstack(blocks: &[Dense]) -> Dense {
    blocks.iter().flat_map(|b| b.iter().cloned()).collect()
}

pub fn hstack(blocks: &[Dense]) -> Dense {
    let rows = blocks.iter().map(|b| b.len()).max().unwrap_or(0);
    (0..rows).map(|r| blocks.iter().flat_map(|b| b[r].iter().cloned()).collect()).collect()
}

/// Checks the library's rank and kernel of `m` against elimination here: the
/// ranks agree, every library kernel vector is annihilated, and the library
/// basis is independent with the expected size.
pub fn agrees(m: &Matrix) -> Result<(), String> {
    let a = dense(m);
    let r = rank(&a, m.cols());
    if m.rank() != r {
        return Err(format!("rank {} vs oracle {r}", m.rank()));
    }
    let ker = m.kernel();
    if ker.dim() != m.cols() - r {
        return Err(format!("kernel dim {} vs oracle {}", ker.dim(), m.cols() - r));
    }
    for v in ker.basis() {
        let w: Vec<C> = v.iter().map(from_scalar).collect();
        if apply(&a, &w).iter().any(|x| !x.is_zero()) {
            return Err("library kernel vector is not annihilated".into());
        }
    }
    let kb = dense_columns(ker.basis(), m.cols());
    if rank(&kb, ker.dim()) != ker.dim() {
        return Err("library kernel basis is dependent".into());
    }
    Ok(())
}

/// `dim(ker d ∩ ker d^c ∩ ker(dd^c + d^cd)) − rank(dd^c on ker(dd^c + d^cd))`
/// in degree `k`, from raw operator blocks.
pub fn bott_chern_dim(d: &[Matrix], dc: &[Matrix], ddc: &[Matrix], p: &[Matrix], k: usize) -> usize {
    let cols = d[k].cols();
    let stack = vstack(&[dense(&d[k]), dense(&dc[k]), dense(&p[k])]);
    let numerator = cols - rank(&stack, cols);
    let divisor = if k < 2 {
        0
    } else {
        let src = d[k - 2].cols();
        let b = kernel(&dense(&p[k - 2]), src);
        if b.is_empty() {
            0
        } else {
            let bm: Dense = (0..src).map(|r| b.iter().map(|v| v[r].clone()).collect()).collect();
            let img = mul(&dense(&ddc[k - 2]), &bm, src, b.len());
            rank(&img, b.len())
        }
    };
    numerator - divisor
}

/// Aeppli dimension in degree `k`: `{x : dd^c x ∈ D^{k+2}}` modulo
/// `im d + im d^c + D^k`, where `D^j = im(dd^c + d^cd)` into degree `j`.
pub fn aeppli_dim(d: &[Matrix], dc: &[Matrix], ddc: &[Matrix], p: &[Matrix], k: usize) -> usize {
    let n = d.len() - 1;
    let cols = d[k].cols();
    let numerator = if k + 2 > n {
        cols
    } else {
        let m = dense(&p[k]);
        let neg: Dense = m.iter().map(|row| row.iter().map(|x| C::zero().sub(x)).collect()).collect();
        let joint = hstack(&[dense(&ddc[k]), neg]);
        let pc = p[k].cols();
        (cols + pc - rank(&joint, cols + pc)) - (pc - rank(&m, pc))
    };
    let mut blocks = Vec::new();
    if k >= 1 {
        blocks.push(dense(&d[k - 1]));
        blocks.push(dense(&dc[k - 1]));
    }
    if k >= 2 {
        blocks.push(dense(&p[k - 2]));
    }
    let divisor = if blocks.is_empty() {
        0
    } else {
        let h = hstack(&blocks);
        let w = h.first().map_or(0, |r| r.len());
        rank(&h, w)
    };
    numerator - divisor
}
