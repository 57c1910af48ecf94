mod common;
mod oracle;

use acx_core::linalg::gram_adjoint;
use acx_core::{Matrix, Quotient, Scalar, Subspace};
use common::{kt_model, s};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -2i64..=2, 1i64..=3)
        .prop_map(|(re, im, den)| &Scalar::ratio(re, den) + &(&Scalar::i() * &Scalar::ratio(im, den)))
}

/// Matrices biased towards low rank: about half the entries are zero.
fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![Just(Scalar::zero()), scalar()], r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

fn vectors(ambient: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(prop_oneof![Just(Scalar::zero()), scalar()], ambient), 0..=count)
}

fn diag_positive(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(1i64..=5, n)
        .prop_map(|d| Matrix::diagonal(&d.into_iter().map(Scalar::from).collect::<Vec<_>>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn rank_and_kernel_match_oracle(m in matrix(6, 7)) {
        prop_assert_eq!(oracle::agrees(&m), Ok(()));
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.image().dim(), m.rank());
    }

    #[test]
    fn canonical_form_is_basis_independent(vs in vectors(5, 4), t in scalar()) {
        let a = Subspace::span(5, vs.clone()).unwrap();
        let mut mixed = vs.clone();
        if mixed.len() >= 2 {
            let extra: Vec<Scalar> = mixed[0].iter().zip(&mixed[1]).map(|(x, y)| x + &(&t * y)).collect();
            mixed.push(extra);
            mixed.reverse();
        }
        prop_assert_eq!(Subspace::span(5, mixed).unwrap(), a);
    }

    #[test]
    fn intersection_dimension_formula(u in vectors(5, 4), v in vectors(5, 4)) {
        let a = Subspace::span(5, u).unwrap();
        let b = Subspace::span(5, v).unwrap();
        let cap = a.intersect(&b).unwrap();
        let cup = a.sum(&b).unwrap();
        prop_assert_eq!(cap.dim() + cup.dim(), a.dim() + b.dim());
        prop_assert!(cap.is_subspace_of(&a).unwrap() && cap.is_subspace_of(&b).unwrap());
        prop_assert!(a.is_subspace_of(&cup).unwrap() && b.is_subspace_of(&cup).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
    }

    #[test]
    fn quotient_representatives(u in vectors(5, 4), v in vectors(5, 2)) {
        let num = Subspace::span(5, u.iter().chain(&v).cloned().collect()).unwrap();
        let div = Subspace::span(5, v).unwrap();
        let q = Quotient::new(num.clone(), div.clone()).unwrap();
        prop_assert_eq!(q.dim(), num.dim() - div.dim());
        prop_assert_eq!(q.representatives().sum(&div).unwrap(), num);
        for b in div.basis() {
            prop_assert!(q.is_zero_class(b).unwrap());
        }
    }

    #[test]
    fn adjoint_is_an_involution(m in matrix(4, 4), gs in diag_positive(4), gd in diag_positive(4)) {
        let gs = Matrix::from_fn(m.cols(), m.cols(), |i, j| gs.at(i, j).clone());
        let gd = Matrix::from_fn(m.rows(), m.rows(), |i, j| gd.at(i, j).clone());
        let adj = gram_adjoint(&m, &gs, &gd).unwrap();
        prop_assert_eq!(gram_adjoint(&adj, &gd, &gs).unwrap(), m.clone());
        // ⟨Ax, y⟩ = ⟨x, A†y⟩ on unit vectors
        for x in 0..m.cols() {
            for y in 0..m.rows() {
                let lhs = gd.at(y, y) * m.at(y, x);
                let rhs = &adj.at(x, y).conj() * gs.at(x, x);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn inverse_and_solve(m in matrix(4, 4)) {
        if m.is_square() && m.rank() == m.rows() {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(&m * &inv, Matrix::identity(m.rows()));
            let b: Vec<Scalar> = (0..m.rows()).map(|i| Scalar::from(i as i64 + 1)).collect();
            let x = m.solve(&b).unwrap();
            prop_assert_eq!(m.apply(&x), b);
        }
    }
}

#[test]
fn kernel_examples() {
    assert!(Matrix::identity(3).kernel().is_zero());
    assert!(Matrix::zeros(2, 3).kernel().is_full());
    let m = kt_model();
    let ker = m.d().block(1).kernel();
    assert_eq!(ker.dim(), 3);
    let expected = Subspace::span(4, (0..3).map(|i| (0..4).map(|j| s((i == j) as i64)).collect()).collect()).unwrap();
    assert_eq!(ker, expected);
}

#[test]
fn intersection_examples() {
    let x = Subspace::span(3, vec![vec![s(1), s(0), s(0)]]).unwrap();
    let xy = Subspace::span(3, vec![vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)]]).unwrap();
    assert_eq!(x.intersect(&xy).unwrap(), x);
    let m = kt_model();
    let both = m.d().block(1).kernel().intersect(&m.dc().block(1).kernel()).unwrap();
    assert_eq!(both.dim(), 2);
}

#[test]
fn quotient_examples() {
    let full = Subspace::full(3);
    assert_eq!(Quotient::new(full.clone(), Subspace::zero(3)).unwrap().dim(), 3);
    assert_eq!(Quotient::new(full.clone(), full).unwrap().dim(), 0);
    let m = kt_model();
    let closed = m.d().block(2).kernel();
    let exact = m.d().block(1).image();
    assert_eq!(Quotient::new(closed, exact).unwrap().dim(), 4);
}

#[test]
fn adjoint_examples() {
    let g = Matrix::diagonal(&[s(2), s(3)]);
    assert_eq!(gram_adjoint(&Matrix::identity(2), &g, &g).unwrap(), Matrix::identity(2));
    let a = Matrix::from_rows(2, vec![vec![s(1), Scalar::i()], vec![s(0), s(2)]]).unwrap();
    let id = Matrix::identity(2);
    assert_eq!(gram_adjoint(&a, &id, &id).unwrap(), a.conj_transpose());
}

#[test]
fn adjoint_of_d_is_minus_star_d_star() {
    let m = kt_model();
    let n = m.dim();
    let star = m.star().unwrap();
    let adj = m.adjoint(m.d()).unwrap();
    for k in 1..=n {
        // d*: Λ^k → Λ^{k-1} is −* d *; * on Λ^k lands in Λ^{n-k}
        let d = m.d().block(n - k);
        let composed = -&(&star[n - k + 1] * &(d * &star[k]));
        assert_eq!(adj.block(k), &composed, "degree {k}");
    }
}

#[test]
fn operator_blocks_match_oracle() {
    for model in [kt_model(), common::sol_model(Scalar::ratio(1, 2)), common::nakamura_model()] {
        for op in [model.d().clone(), model.dc().clone(), model.ddc_plus_dcd(), model.delta()] {
            for (k, b) in op.blocks().iter().enumerate() {
                assert_eq!(oracle::agrees(b), Ok(()), "degree {k}");
            }
        }
    }
}
