//! The standard operator identities of an almost complex structure, checked
//! as exact matrix equalities on the invariant complex.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::almost_complex::{BidegreeComponent, Parity};
use crate::cohomology::BComplex;
use crate::harmonic::harmonic_isomorphism_check;
use crate::linalg::Scalar;
use crate::model::{Check, GradedOp, InvariantModel};
use crate::Result;

/// Whether the attached metric and form make the structure almost Kähler:
/// `dω = 0` and `g = ω(·, J·)`.
pub fn is_almost_kaehler(model: &InvariantModel) -> Result<bool> {
    if !model.has_metric() || !model.has_symplectic() || !model.omega_closed()? {
        return Ok(false);
    }
    let sympl = model.symplectic()?;
    Ok(match sympl.compatible_metric(model.acs().j_frame()) {
        Ok(g) => g.gram() == model.metric()?.gram(),
        Err(_) => false,
    })
}

fn bidegree_relations(model: &InvariantModel) -> Vec<Check> {
    let mu = model.component(BidegreeComponent::Mu);
    let del = model.component(BidegreeComponent::Partial);
    let delbar = model.component(BidegreeComponent::PartialBar);
    let mubar = model.component(BidegreeComponent::MuBar);
    let sq = |a: &GradedOp| a.compose(a);
    let sum = mu.add(del).add(delbar).add(mubar);
    vec![
        Check::new("d = mu + partial + partialbar + mubar", &sum == model.d()),
        Check::new("mubar^2 = 0", sq(mubar).is_zero()),
        Check::new("mubar partialbar + partialbar mubar = 0", mubar.anticommutator(delbar).is_zero()),
        Check::new(
            "partialbar^2 + mubar partial + partial mubar = 0",
            sq(delbar).add(&mubar.anticommutator(del)).is_zero(),
        ),
        Check::new(
            "partial partialbar + partialbar partial + mu mubar + mubar mu = 0",
            del.anticommutator(delbar).add(&mu.anticommutator(mubar)).is_zero(),
        ),
        Check::new("mu^2 = 0", sq(mu).is_zero()),
        Check::new("mu partial + partial mu = 0", mu.anticommutator(del).is_zero()),
        Check::new("partial^2 + mu partialbar + partialbar mu = 0", sq(del).add(&mu.anticommutator(delbar)).is_zero()),
    ]
}

fn delta_relations(model: &InvariantModel) -> Vec<Check> {
    let (d, dc) = (model.d(), model.dc());
    let i = Scalar::i();
    let half = Scalar::ratio(1, 2);
    let quarter_i = &i * &Scalar::ratio(1, 4);
    let delta = model.delta();
    let deltabar = model.deltabar();
    let del = model.component(BidegreeComponent::Partial);
    let delbar = model.component(BidegreeComponent::PartialBar);
    let mu = model.component(BidegreeComponent::Mu);
    let mubar = model.component(BidegreeComponent::MuBar);
    let ddc = model.ddc();
    let dcd = model.dcd();
    let d2 = delta.compose(&delta);
    vec![
        Check::new("delta = (d + i dc)/2", delta == d.add(&dc.scale(&i)).scale(&half)),
        Check::new("deltabar = (d - i dc)/2", deltabar == d.sub(&dc.scale(&i)).scale(&half)),
        Check::new("delta = partial + mubar", delta == del.add(mubar)),
        Check::new("deltabar = partialbar + mu", deltabar == delbar.add(mu)),
        Check::new("d = delta + deltabar", &delta.add(&deltabar) == d),
        Check::new("dc = i(deltabar - delta)", &deltabar.sub(&delta).scale(&i) == dc),
        Check::new("delta^2 = (i/4)(ddc + dcd)", d2 == ddc.add(&dcd).scale(&quarter_i)),
        Check::new("delta^2 = -deltabar^2", d2 == deltabar.compose(&deltabar).neg()),
        Check::new("delta^2 = partial^2 - partialbar^2", d2 == del.compose(del).sub(&delbar.compose(delbar))),
        Check::new(
            "delta deltabar = -(i/4)(ddc - dcd)",
            delta.compose(&deltabar) == ddc.sub(&dcd).scale(&quarter_i).neg(),
        ),
        Check::new("delta deltabar + deltabar delta = 0", delta.anticommutator(&deltabar).is_zero()),
    ]
}

fn parity_table(model: &InvariantModel, b: &BComplex) -> Result<Vec<Check>> {
    let acs = model.acs();
    let ddc = model.ddc();
    let dcd = model.dcd();
    let ev = model.parity(Parity::Even);
    let od = model.parity(Parity::Odd);
    let mut b_odd = true;
    for k in 0..=model.dim() {
        if k + 2 > model.dim() {
            continue;
        }
        for v in b.space(k).basis() {
            for (part, target) in [(&ev, &ev), (&od, &od)] {
                let piece = part.block(k).apply(v);
                let image = ddc.block(k).apply(&piece);
                // ddc of the even part must be odd, and vice versa
                b_odd &= b.space(k).contains(&piece)? && target.block(k + 2).apply(&image).iter().all(|x| x.is_zero());
            }
        }
    }
    Ok(vec![
        Check::new("delta is odd", acs.has_parity(&model.delta(), false)),
        Check::new("deltabar is even", acs.has_parity(&model.deltabar(), true)),
        Check::new("ddc - dcd is odd", acs.has_parity(&ddc.sub(&dcd), false)),
        Check::new("ddc + dcd is even", acs.has_parity(&ddc.add(&dcd), true)),
        Check::new("ddc restricted to B is odd", b_odd),
        Check::new("ev + od = id", ev.add(&od) == GradedOp::identity(model.dim())),
    ])
}

/// Every identity that makes sense for the data attached to `model`. Metric
/// identities need a metric; `d^Λ = (d^c)^*` needs an almost Kähler triple.
pub fn operator_identity_checks(model: &InvariantModel) -> Result<Vec<Check>> {
    let n = model.dim();
    let (d, dc) = (model.d(), model.dc());
    let rank = model.acs().nijenhuis(model.algebra(), d).rank;
    let anti = model.ddc_plus_dcd().is_zero();
    let mut out = vec![
        Check::new("d^2 = 0", d.compose(d).is_zero()),
        Check::new("dc^2 = 0", dc.compose(dc).is_zero()),
        Check::new("rank mubar = 0 implies ddc + dcd = 0", rank != 0 || anti).with_detail(format!("rank {rank}")),
        Check::new("J^2 = (-1)^k", model.j().compose(&model.j()) == GradedOp::degree_sign(n)),
    ];
    out.extend(bidegree_relations(model));
    out.extend(delta_relations(model));
    // construction verifies d(B) ⊆ B, dc(B) ⊆ B and ddc = -dcd on B
    let b = BComplex::build(model);
    out.push(Check::new("d and dc preserve B, ddc = -dcd on B", b.is_ok()));
    if let Ok(b) = &b {
        out.extend(parity_table(model, b)?);
    }
    if model.has_metric() {
        let star = model.star()?;
        let j = model.j();
        out.push(Check::new("J * = * J", (0..=n).all(|k| j.block(n - k) * &star[k] == &star[k] * j.block(k))));
        let adj = model.adjoint(d)?;
        let minus_star_d_star = (1..=n).all(|k| adj.block(k) == &-&(&star[n - k + 1] * &(d.block(n - k) * &star[k])));
        out.push(Check::new("d* = -*d*", minus_star_d_star));
        for k in 0..=n {
            out.extend(harmonic_isomorphism_check(model, k)?);
        }
    }
    if is_almost_kaehler(model)? {
        let dl = model.d_lambda()?;
        out.push(Check::new("dLam = (dc)*", dl == model.adjoint(dc)?));
        out.push(Check::new("Lam = L*", model.lambda()? == &model.adjoint(model.lefschetz()?)?));
    }
    Ok(out)
}
