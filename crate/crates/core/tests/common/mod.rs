//! Example structures shared by the integration tests.
#![allow(dead_code)]

use acx_core::{AlmostComplex, InvariantForm, InvariantModel, LieAlgebra, Matrix, Metric, Scalar, Symplectic};

pub fn s(x: i64) -> Scalar {
    Scalar::from(x)
}

pub fn q(a: i64, b: i64) -> Scalar {
    Scalar::ratio(a, b)
}

pub fn i() -> Scalar {
    Scalar::i()
}

/// Form from `(1-based index list, coefficient)` pairs.
pub fn form(n: usize, terms: &[(&[usize], Scalar)]) -> InvariantForm {
    let deg = terms.first().map_or(0, |t| t.0.len());
    let zero_based: Vec<(Vec<usize>, Scalar)> =
        terms.iter().map(|(idx, c)| (idx.iter().map(|x| x - 1).collect(), c.clone())).collect();
    let refs: Vec<(&[usize], Scalar)> = zero_based.iter().map(|(v, c)| (v.as_slice(), c.clone())).collect();
    InvariantForm::from_terms(n, deg, &refs).unwrap()
}

pub fn algebra(n: usize, de: &[&[(&[usize], Scalar)]]) -> LieAlgebra {
    let forms: Vec<InvariantForm> =
        de.iter().map(|t| if t.is_empty() { InvariantForm::zero(n, 2) } else { form(n, t) }).collect();
    LieAlgebra::from_differentials(&forms).unwrap().validate().unwrap()
}

/// `J e_{2j-1} = e_{2j}` for every `j`.
pub fn standard_j(n: usize) -> Matrix {
    let mut j = Matrix::zeros(n, n);
    for b in 0..n / 2 {
        j.set(2 * b + 1, 2 * b, s(1)).unwrap();
        j.set(2 * b, 2 * b + 1, s(-1)).unwrap();
    }
    j
}

pub fn kt_algebra() -> LieAlgebra {
    algebra(4, &[&[], &[], &[], &[(&[2, 3], s(-1))]])
}

pub fn omega_std(n: usize) -> InvariantForm {
    let mut w = InvariantForm::zero(n, 2);
    for b in 0..n / 2 {
        w = w.add(&form(n, &[(&[2 * b + 1, 2 * b + 2], s(1))]));
    }
    w
}

pub fn kt_model() -> InvariantModel {
    let g = kt_algebra();
    let acs = AlmostComplex::from_frame(&g, standard_j(4)).unwrap();
    InvariantModel::new(g, acs)
        .unwrap()
        .with_metric(Metric::identity(4))
        .unwrap()
        .with_symplectic(Symplectic::new(omega_std(4)).unwrap())
        .unwrap()
}

pub fn kt_model_with(gram: Matrix) -> InvariantModel {
    let g = kt_algebra();
    let acs = AlmostComplex::from_frame(&g, standard_j(4)).unwrap();
    InvariantModel::new(g, acs).unwrap().with_metric(Metric::new(gram).unwrap()).unwrap()
}

pub fn torus_model(n: usize) -> InvariantModel {
    let g = LieAlgebra::abelian(n).unwrap();
    let acs = AlmostComplex::from_frame(&g, standard_j(n)).unwrap();
    InvariantModel::new(g, acs)
        .unwrap()
        .with_metric(Metric::identity(n))
        .unwrap()
        .with_symplectic(Symplectic::new(omega_std(n)).unwrap())
        .unwrap()
}

pub fn sol_algebra() -> LieAlgebra {
    algebra(4, &[&[], &[], &[(&[1, 3], s(-1))], &[(&[1, 4], s(1))]])
}

/// `φ^1_t, φ^2_t` of the Sol(3)×ℝ family.
pub fn sol_coframe(t: Scalar) -> Vec<Vec<Scalar>> {
    let one = s(1);
    let t2 = &t * &t;
    let den = &one - &t2;
    let a = &(&one + &t2) / &den;
    let b = &(&t * &s(2)) / &den;
    vec![vec![one.clone(), &i() * &a, s(0), -(&i() * &b)], vec![s(0), &i() * &b, one.clone(), &i() * &a]]
}

pub fn sol_acs(t: Scalar) -> (LieAlgebra, AlmostComplex) {
    let g = sol_algebra();
    let acs = AlmostComplex::from_coframe(&g, sol_coframe(t)).unwrap();
    (g, acs)
}

/// Sol(3)×ℝ with `J_t` and the averaged metric `1 + J_t^T J_t`. The form
/// `e12 + e34` is attached only at `t = 0`, where it is `J_0`-invariant.
pub fn sol_model(t: Scalar) -> InvariantModel {
    let zero = t.is_zero();
    let (g, acs) = sol_acs(t);
    let metric = Metric::averaged(&Matrix::identity(4), acs.j_frame()).unwrap();
    let m = InvariantModel::new(g, acs).unwrap().with_metric(metric).unwrap();
    if zero {
        m.with_symplectic(Symplectic::new(omega_std(4)).unwrap()).unwrap()
    } else {
        m
    }
}

/// The holomorphically parallelizable Nakamura algebra in the real frame
/// with `φ^j = e^{2j-1} + i e^{2j}`, and `J_1` from
/// `ω^1 = φ^1, ω^2 = φ^2 + φ̄^3, ω^3 = φ^3`.
pub fn nakamura_model() -> InvariantModel {
    let g = algebra(
        6,
        &[
            &[],
            &[],
            &[(&[1, 3], s(-1)), (&[2, 4], s(1))],
            &[(&[1, 4], s(-1)), (&[2, 3], s(-1))],
            &[(&[1, 5], s(1)), (&[2, 6], s(-1))],
            &[(&[1, 6], s(1)), (&[2, 5], s(1))],
        ],
    );
    let z = s(0);
    let o = s(1);
    let cf = vec![
        vec![o.clone(), i(), z.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), o.clone(), i(), o.clone(), -i()],
        vec![z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), i()],
    ];
    let acs = AlmostComplex::from_coframe(&g, cf).unwrap();
    let metric = Metric::averaged(&Matrix::identity(6), acs.j_frame()).unwrap();
    InvariantModel::new(g, acs).unwrap().with_metric(metric).unwrap()
}
