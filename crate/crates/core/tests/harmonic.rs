mod common;

use acx_core::harmonic::{
    almost_kaehler_checks, betti, delta_harmonic_relations, h1_structure_checks, h_table, harmonic_space,
    metric_independence_probe,
};
use acx_core::{AdjointConvention, HarmonicOp, InvariantModel, Matrix, Metric, Scalar, Subspace};
use common::*;

/// Span of combinations of `φ`-words; indices `0, 1` are `φ^1, φ^2` and
/// `2, 3` their conjugates.
fn phi_span(m: &InvariantModel, k: usize, vectors: &[&[(&[usize], Scalar)]]) -> Subspace {
    let dim = m.exterior().rank(k as isize);
    let vs = vectors
        .iter()
        .map(|terms| {
            let mut v = vec![s(0); dim];
            for (w, c) in terms.iter() {
                let f = m.acs().theta_word(w).to_vector();
                for (x, y) in v.iter_mut().zip(&f) {
                    *x = &*x + &(c * y);
                }
            }
            v
        })
        .collect();
    Subspace::span(dim, vs).unwrap()
}

fn h(m: &InvariantModel, op: HarmonicOp, k: usize) -> Subspace {
    harmonic_space(m, op, k).unwrap().basis
}

#[test]
fn kodaira_thurston_bases() {
    let m = kt_model();
    let one = s(1);
    let t = h_table(&m, &[HarmonicOp::DPlusDc], 0..=4).unwrap();
    assert_eq!(t.row(HarmonicOp::DPlusDc).unwrap(), &[1, 2, 4, 3, 1]);
    assert_eq!(h(&m, HarmonicOp::DPlusDc, 0), Subspace::full(1));
    let b1 = phi_span(&m, 1, &[&[(&[0], one.clone())], &[(&[2], one.clone())]]);
    assert_eq!(h(&m, HarmonicOp::DPlusDc, 1), b1);
    let b2 = phi_span(
        &m,
        2,
        &[
            &[(&[0, 1], one.clone()), (&[2, 3], one.clone())],
            &[(&[0, 3], one.clone()), (&[1, 2], -&one)],
            &[(&[0, 2], one.clone())],
            &[(&[1, 3], one.clone())],
        ],
    );
    assert_eq!(h(&m, HarmonicOp::DPlusDc, 2), b2);
    // φ^{\bar 1 2} = -φ^{2 \bar 1}
    let b3 = phi_span(
        &m,
        3,
        &[
            &[(&[0, 1, 3], one.clone())],
            &[(&[1, 2, 3], one.clone())],
            &[(&[0, 1, 2], one.clone()), (&[0, 2, 3], -&one)],
        ],
    );
    assert_eq!(h(&m, HarmonicOp::DPlusDc, 3), b3);
    assert_eq!(h(&m, HarmonicOp::DPlusDc, 4), phi_span(&m, 4, &[&[(&[0, 1, 2, 3], one)]]));
}

#[test]
fn kodaira_thurston_tables() {
    let m = kt_model();
    let ops = [HarmonicOp::D, HarmonicOp::DPlusDc, HarmonicOp::DcPlusD, HarmonicOp::DDc, HarmonicOp::DPlusDLambda];
    let t = h_table(&m, &ops, 0..=4).unwrap();
    assert_eq!(t.betti, vec![1, 3, 4, 3, 1]);
    assert_eq!(t.row(HarmonicOp::D).unwrap(), &[1, 3, 4, 3, 1]);
    assert_eq!(t.row(HarmonicOp::DcPlusD).unwrap(), &[1, 2, 4, 3, 1]);
    assert_eq!(t.row(HarmonicOp::DDc).unwrap(), &[1, 3, 4, 2, 1]);
    assert_eq!(t.row(HarmonicOp::DPlusDLambda).unwrap(), &[1, 3, 5, 3, 1]);
    assert!(h_table(&m, &ops, 0..=5).is_err());
}

#[test]
fn delta_harmonic_forms_on_kodaira_thurston() {
    let m = kt_model();
    let one = s(1);
    let dbc = h(&m, HarmonicOp::DeltaPlusDeltaBar, 3);
    assert_eq!(dbc, phi_span(&m, 3, &[&[(&[0, 1, 3], one.clone())], &[(&[1, 2, 3], one)]]));
    let bc = h(&m, HarmonicOp::DPlusDc, 3);
    let bc2 = h(&m, HarmonicOp::DcPlusD, 3);
    let cap = dbc.intersect(&bc2).unwrap();
    assert!(cap.is_subspace_of(&bc).unwrap() && cap != bc);
    for k in 0..=4 {
        let checks = delta_harmonic_relations(&m, k).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{k}: {checks:?}");
    }
}

#[test]
fn every_space_agrees_with_its_laplacian() {
    for m in [kt_model(), torus_model(4), sol_model(s(0)), sol_model(q(1, 3)), nakamura_model()] {
        for conv in [AdjointConvention::Star, AdjointConvention::Gram] {
            let m = m.clone().with_adjoint_convention(conv);
            for op in HarmonicOp::ALL.into_iter().filter(|op| m.has_symplectic() || !op.needs_symplectic()) {
                for k in 0..=m.dim() {
                    harmonic_space(&m, op, k).unwrap();
                }
            }
        }
    }
}

#[test]
fn conventions_exchange_bott_chern_labels() {
    for m in [kt_model(), sol_model(q(1, 2)), nakamura_model()] {
        let g = m.clone().with_adjoint_convention(AdjointConvention::Gram);
        for k in 0..=m.dim() {
            assert_eq!(h(&g, HarmonicOp::DPlusDc, k), h(&m, HarmonicOp::DcPlusD, k));
            assert_eq!(h(&g, HarmonicOp::DcPlusD, k), h(&m, HarmonicOp::DPlusDc, k));
            assert_eq!(h(&g, HarmonicOp::DDc, k), h(&m, HarmonicOp::DDc, k));
        }
    }
    let m = kt_model();
    let g = m.clone().with_adjoint_convention(AdjointConvention::Gram);
    assert_ne!(h(&g, HarmonicOp::DPlusDc, 3), h(&m, HarmonicOp::DPlusDc, 3));
}

#[test]
fn almost_kaehler_report() {
    let r = almost_kaehler_checks(&kt_model()).unwrap();
    assert_eq!((r.b_minus, r.h_minus_j, r.h2), (2, 1, 4));
    assert_eq!((r.h1_dlam, r.h2_dlam), (3, 5));
    assert!(r.checks.iter().all(|c| c.passed), "{:?}", r.checks);
    assert!(almost_kaehler_checks(&nakamura_model()).is_err());
    assert!(almost_kaehler_checks(&kt_model_with(Matrix::diagonal(&[s(1), s(1), s(4), s(4)]))).is_err());
}

#[test]
fn h1_does_not_depend_on_the_metric() {
    let kt: Vec<_> = [[1, 1, 1, 1], [1, 1, 4, 4], [4, 4, 1, 1], [9, 9, 4, 4]]
        .iter()
        .map(|d| kt_model_with(Matrix::diagonal(&d.map(s))))
        .collect();
    for k in 0..=4 {
        let p = metric_independence_probe(&kt, k).unwrap();
        assert!(p.h1_independent());
        assert_eq!(p.h1, vec![2; 4]);
    }
    for t in [s(0), q(1, 4)] {
        let (g, acs) = sol_acs(t);
        let models: Vec<_> = [[1, 1, 1, 1], [1, 4, 1, 4], [4, 1, 9, 1]]
            .iter()
            .map(|d| {
                let metric = Metric::averaged(&Matrix::diagonal(&d.map(s)), acs.j_frame()).unwrap();
                InvariantModel::new(g.clone(), acs.clone()).unwrap().with_metric(metric).unwrap()
            })
            .collect();
        let grams: Vec<_> = models.iter().map(|m| m.metric().unwrap().gram().clone()).collect();
        assert!(grams[0] != grams[1] && grams[1] != grams[2] && grams[0] != grams[2]);
        let p = metric_independence_probe(&models, 2).unwrap();
        assert!(p.h1_independent(), "{p:?}");
    }
}

#[test]
fn h1_is_even_on_every_example() {
    let cases = [
        (kt_model(), 2),
        (torus_model(4), 4),
        (torus_model(6), 6),
        (sol_model(s(0)), 2),
        (sol_model(q(1, 10)), 0),
        (sol_model(q(1, 2)), 0),
        (nakamura_model(), 2),
    ];
    for (m, h1) in cases {
        assert_eq!(harmonic_space(&m, HarmonicOp::DPlusDc, 1).unwrap().h(), h1);
        let checks = h1_structure_checks(&m).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }
}

#[test]
fn de_rham_numbers() {
    assert_eq!(betti(&kt_model()), vec![1, 3, 4, 3, 1]);
    assert_eq!(betti(&torus_model(4)), vec![1, 4, 6, 4, 1]);
    assert_eq!(betti(&nakamura_model()), vec![1, 2, 3, 4, 3, 2, 1]);
}

#[test]
fn missing_data_is_an_error() {
    let (g, acs) = sol_acs(q(1, 2));
    let bare = InvariantModel::new(g, acs).unwrap();
    assert!(harmonic_space(&bare, HarmonicOp::D, 1).is_err());
    assert!(harmonic_space(&sol_model(q(1, 2)), HarmonicOp::DPlusDLambda, 1).is_err());
    assert!(harmonic_space(&kt_model(), HarmonicOp::D, 5).is_err());
}
