//! Acceptance criteria 1 through 9, one PASS/FAIL line each.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use acx::catalog::{self, NAMES};
use acx::MetricSpec;
use acx_core::coeff_ext::bc_growth_witness;
use acx_core::cohomology::{delta_equivalence_checks, harmonic_cohomology_checks};
use acx_core::harmonic::{almost_kaehler_checks, h_table, harmonic_space, laplacian_matrix, metric_independence_probe};
use acx_core::identities::operator_identity_checks;
use acx_core::{
    BidegreeComponent, Check, CohomologyEngine, CohomologyTag, HarmonicOp, InvariantModel, Matrix, Metric, Scalar,
    Subspace,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn model(name: &str) -> InvariantModel {
    catalog::lookup(name).unwrap().model().unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Outcome {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn all_pass(checks: &[Check], context: &str) -> Outcome {
    match checks.iter().find(|c| !c.passed) {
        None => Ok(()),
        Some(c) => Err(format!("{context}: {} failed ({})", c.name, c.detail)),
    }
}

fn h(m: &InvariantModel, op: HarmonicOp, k: usize) -> Subspace {
    harmonic_space(m, op, k).unwrap().basis
}

/// Span of sums of `φ`-words; `0, 1` are `φ^1, φ^2` and `2, 3` their conjugates.
fn phi_span(m: &InvariantModel, k: usize, vectors: &[&[(&[usize], i64)]]) -> Subspace {
    let dim = m.exterior().rank(k as isize);
    let vs = vectors
        .iter()
        .map(|terms| {
            let mut v = vec![Scalar::zero(); dim];
            for (w, c) in terms.iter() {
                let f = m.acs().theta_word(w).to_vector();
                for (x, y) in v.iter_mut().zip(&f) {
                    *x = &*x + &(&Scalar::from(*c) * y);
                }
            }
            v
        })
        .collect();
    Subspace::span(dim, vs).unwrap()
}

fn kt_table() -> Outcome {
    let start = Instant::now();
    let m = model("kt");
    let row = h_table(&m, &[HarmonicOp::DPlusDc], 0..=4).unwrap().row(HarmonicOp::DPlusDc).unwrap().to_vec();
    ensure(row == [1, 2, 4, 3, 1], || format!("h = {row:?}"))?;
    let bases = [
        Subspace::full(1),
        phi_span(&m, 1, &[&[(&[0], 1)], &[(&[2], 1)]]),
        phi_span(
            &m,
            2,
            &[&[(&[0, 1], 1), (&[2, 3], 1)], &[(&[0, 3], 1), (&[1, 2], -1)], &[(&[0, 2], 1)], &[(&[1, 3], 1)]],
        ),
        phi_span(&m, 3, &[&[(&[0, 1, 3], 1)], &[(&[1, 2, 3], 1)], &[(&[0, 1, 2], 1), (&[0, 2, 3], -1)]]),
        phi_span(&m, 4, &[&[(&[0, 1, 2, 3], 1)]]),
    ];
    for (k, b) in bases.iter().enumerate() {
        ensure(&h(&m, HarmonicOp::DPlusDc, k) == b, || format!("basis of H^{k} differs"))?;
    }
    within(Duration::from_secs(1), start, "kt table")
}

fn sol_family() -> Outcome {
    for (t, expected) in [("0", 2), ("1/10", 0), ("1/4", 0), ("1/2", 0)] {
        let start = Instant::now();
        let m = model(&format!("sol3_t@{t}"));
        let h1 = harmonic_space(&m, HarmonicOp::DPlusDc, 1).unwrap().h();
        ensure(h1 == expected, || format!("t = {t}: h1 = {h1}, expected {expected}"))?;
        within(Duration::from_secs(1), start, &format!("t = {t}"))?;
    }
    Ok(())
}

fn nakamura() -> Outcome {
    let m = model("nakamura_j1");
    let h1 = harmonic_space(&m, HarmonicOp::DPlusDc, 1).unwrap().h();
    let rank = m.acs().nijenhuis(m.algebra(), m.d()).rank;
    let mubar = m.component(BidegreeComponent::MuBar).block(1).rank();
    ensure(h1 == 2 && rank == 1 && mubar == 1, || format!("h1 = {h1}, rank mubar = {rank}, {mubar} on 1-forms"))
}

fn almost_kaehler_suite() -> Outcome {
    let m = model("kt");
    let r = almost_kaehler_checks(&m).map_err(|e| e.to_string())?;
    all_pass(&r.checks, "kt")?;
    let got = (r.b_minus, r.h_minus_j, r.h2, r.h1_dlam, r.h2_dlam);
    ensure(got == (2, 1, 4, 3, 5), || format!("(b-, h-_J, h2, h1_dLam, h2_dLam) = {got:?}"))?;
    let (h2, h2l) = (h(&m, HarmonicOp::DPlusDc, 2), h(&m, HarmonicOp::DPlusDLambda, 2));
    ensure(h2.is_subspace_of(&h2l).unwrap() && h2 != h2l, || "degree 2 inclusion is not strict".into())?;
    ensure(h(&m, HarmonicOp::DPlusDc, 3) == h(&m, HarmonicOp::DPlusDLambda, 3), || "degree 3 spaces differ".into())
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    for name in ["kt", "torus_4", "torus_6", "sol3_t@0", "sol3_t@1/2", "nakamura_j1"] {
        let checks = operator_identity_checks(&model(name)).map_err(|e| format!("{name}: {e}"))?;
        all_pass(&checks, name)?;
        ensure(checks.iter().any(|c| c.name.starts_with("J * = * J")), || format!("{name}: no metric identities"))?;
    }
    within(Duration::from_secs(10), start, "identity suite")
}

fn cohomology_suite() -> Outcome {
    for name in NAMES {
        let m = model(name);
        let e = CohomologyEngine::new(&m).map_err(|e| e.to_string())?;
        all_pass(&delta_equivalence_checks(&e).unwrap(), name)?;
        all_pass(&harmonic_cohomology_checks(&e).unwrap(), name)?;
        for k in 0..=m.dim() {
            all_pass(&e.bc_splitting(k).unwrap().checks, name)?;
        }
        let (h10, h01, bc1) =
            (e.bigraded(1, 0).unwrap().dim(), e.bigraded(0, 1).unwrap().dim(), e.bott_chern(1).unwrap().dim());
        ensure(h10 + h01 == bc1, || format!("{name}: {h10} + {h01} != {bc1}"))?;
    }
    let kt = model("kt");
    let e = CohomologyEngine::new(&kt).unwrap();
    let (h20, h02) = (e.bigraded(2, 0).unwrap().dim(), e.bigraded(0, 2).unwrap().dim());
    ensure(h20 == 0 && h02 == 0, || format!("kt: h20 = {h20}, h02 = {h02}"))
}

fn growth_witness() -> Outcome {
    let kt = model("kt");
    let mut dims = Vec::new();
    for n in 0..=5 {
        let start = Instant::now();
        dims.push(bc_growth_witness(&kt, n).map_err(|e| e.to_string())?);
        within(Duration::from_secs(5), start, &format!("N = {n}"))?;
    }
    ensure(dims[0] == 4 && dims[1..].windows(2).all(|w| w[0] < w[1]), || format!("{dims:?}"))
}

fn metric_independence() -> Outcome {
    let kt = catalog::kt();
    let models: Vec<InvariantModel> = [[1, 1, 1, 1], [1, 1, 4, 4], [4, 4, 1, 1]]
        .iter()
        .map(|d| kt.with_metric(MetricSpec::Gram(Matrix::diagonal(&d.map(Scalar::from)))).model().unwrap())
        .collect();
    let p = metric_independence_probe(&models, 2).map_err(|e| e.to_string())?;
    ensure(p.h1_independent() && p.h1[0] == 2, || format!("kt: {p:?}"))?;
    for t in ["0", "1/4"] {
        let base = catalog::lookup(&format!("sol3_t@{t}")).unwrap();
        let j = base.model().unwrap().acs().j_frame().clone();
        let models: Vec<InvariantModel> = [[1, 1, 1, 1], [1, 4, 1, 4], [4, 1, 9, 1]]
            .iter()
            .map(|d| {
                let g = Metric::averaged(&Matrix::diagonal(&d.map(Scalar::from)), &j).unwrap();
                base.with_metric(MetricSpec::Gram(g.gram().clone())).model().unwrap()
            })
            .collect();
        let grams: Vec<&Matrix> = models.iter().map(|m| m.metric().unwrap().gram()).collect();
        ensure(grams[0] != grams[1] && grams[1] != grams[2] && grams[0] != grams[2], || {
            format!("sol3_t@{t}: metrics coincide")
        })?;
        let p = metric_independence_probe(&models, 2).map_err(|e| e.to_string())?;
        ensure(p.h1_independent(), || format!("sol3_t@{t}: {p:?}"))?;
    }
    for name in NAMES {
        let h1 = harmonic_space(&model(name), HarmonicOp::DPlusDc, 1).unwrap().h();
        ensure(h1 % 2 == 0, || format!("{name}: h1 = {h1}"))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for name in NAMES {
        let m = model(name);
        let n = m.dim();
        let ctx = |what: String| move |e: String| format!("{name}: {what}: {e}");
        for (label, op) in [
            ("d", m.d().clone()),
            ("dc", m.dc().clone()),
            ("ddc", m.ddc()),
            ("ddc+dcd", m.ddc_plus_dcd()),
            ("delta", m.delta()),
            ("deltabar", m.deltabar()),
        ] {
            for (k, b) in op.blocks().iter().enumerate() {
                oracle::agrees(b).map_err(ctx(format!("{label} in degree {k}")))?;
            }
        }
        for op in HarmonicOp::ALL.into_iter().filter(|op| !op.needs_symplectic() || m.has_symplectic()) {
            for k in 0..=n {
                let lap = laplacian_matrix(&m, op, k).map_err(|e| e.to_string())?;
                oracle::agrees(&lap).map_err(ctx(format!("Laplacian of {} in degree {k}", op.tag())))?;
                let got = harmonic_space(&m, op, k).unwrap().h();
                let want = lap.cols() - oracle::rank(&oracle::dense(&lap), lap.cols());
                ensure(got == want, || format!("{name}: h^{k}_{} = {got}, oracle {want}", op.tag()))?;
            }
        }
        let e = CohomologyEngine::new(&m).unwrap();
        let (d, dc, ddc, p) = (m.d().blocks(), m.dc().blocks(), m.ddc(), m.ddc_plus_dcd());
        let bc = e.dims(CohomologyTag::BottChern).unwrap();
        let a = e.dims(CohomologyTag::Aeppli).unwrap();
        let dr = e.dims(CohomologyTag::DeRham).unwrap();
        for k in 0..=n {
            let bo = oracle::bott_chern_dim(d, dc, ddc.blocks(), p.blocks(), k);
            let ao = oracle::aeppli_dim(d, dc, ddc.blocks(), p.blocks(), k);
            let rank = |j: usize| oracle::rank(&oracle::dense(&d[j]), d[j].cols());
            let bo_dr = d[k].cols() - rank(k) - if k > 0 { rank(k - 1) } else { 0 };
            ensure((bc[k], a[k], dr[k]) == (bo, ao, bo_dr), || {
                format!("{name}, degree {k}: (BC, A, dR) = {:?}, oracle {:?}", (bc[k], a[k], dr[k]), (bo, ao, bo_dr))
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Kodaira-Thurston harmonic table", kt_table),
        ("Sol(3) family h1", sol_family),
        ("Nakamura J1", nakamura),
        ("almost Kahler suite on KT", almost_kaehler_suite),
        ("operator identities", identity_suite),
        ("cohomology suite", cohomology_suite),
        ("growth witness", growth_witness),
        ("metric independence", metric_independence),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = Vec::new();
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match &outcome {
            Ok(()) => println!("criterion {}: PASS {label} ({ms} ms)", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {label} ({ms} ms): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
