//! Built-in manifests.
//!
//! * `kt`: the Kodaira-Thurston nilmanifold, standard `J`, identity metric
//!   and `ω = e12 + e34`.
//! * `sol3_t@<t>`: Sol(3)×ℝ with the deformation `J_t` for rational `t`,
//!   `|t| ≤ 1/2`, and the metric obtained by averaging the identity over
//!   `J_t`. The form `e12 + e34` is attached only at `t = 0`.
//! * `nakamura_j1`: the holomorphically parallelizable Nakamura algebra with
//!   the non-integrable `J_1`, averaged metric.
//! * `torus_<2m>`: the flat torus, `2 ≤ 2m ≤ 8`.

use std::collections::BTreeMap;

use acx_core::{InvariantForm, Matrix, Metric, Scalar};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::AcxError;
use crate::manifest::{Manifest, MetricSpec, Structure};
use crate::syntax::parse_salamon;

/// Catalog names without parameters, plus representative parametrized ones.
pub const NAMES: [&str; 8] =
    ["kt", "sol3_t@0", "sol3_t@1/10", "sol3_t@1/4", "sol3_t@1/2", "nakamura_j1", "torus_4", "torus_6"];

fn salamon(dim: usize, d: &[&str]) -> Vec<InvariantForm> {
    d.iter().map(|s| parse_salamon(s, dim).expect("catalog equation")).collect()
}

fn standard_j(n: usize) -> Matrix {
    let mut j = Matrix::zeros(n, n);
    for b in 0..n / 2 {
        *j.at_mut(2 * b + 1, 2 * b) = Scalar::one();
        *j.at_mut(2 * b, 2 * b + 1) = -Scalar::one();
    }
    j
}

fn omega_std(n: usize) -> InvariantForm {
    let terms: Vec<String> = (0..n / 2).map(|b| format!("({},{})", 2 * b + 1, 2 * b + 2)).collect();
    parse_salamon(&terms.join("+"), n).expect("standard form")
}

fn flags(pairs: &[(&str, bool)]) -> BTreeMap<String, bool> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

pub fn kt() -> Manifest {
    Manifest {
        name: "kt".into(),
        dim: 4,
        d: salamon(4, &["0", "0", "0", "-23"]),
        structure: Structure::Frame(standard_j(4)),
        metric: MetricSpec::Identity,
        omega: Some(omega_std(4)),
        flags: flags(&[("almost_kahler", true), ("integrable", false)]),
    }
}

pub fn torus(n: usize) -> Manifest {
    Manifest {
        name: format!("torus_{n}"),
        dim: n,
        d: salamon(n, &vec!["0"; n]),
        structure: Structure::Frame(standard_j(n)),
        metric: MetricSpec::Identity,
        omega: Some(omega_std(n)),
        flags: flags(&[("almost_kahler", true), ("integrable", true)]),
    }
}

/// `φ^1_t, φ^2_t` in the frame `e1..e4`: with `a = (1+t²)/(1-t²)` and
/// `b = 2t/(1-t²)`, `φ^1 = e1 + i a e2 - i b e4`, `φ^2 = i b e2 + e3 + i a e4`.
pub fn sol_coframe(t: &BigRational) -> Vec<Vec<Scalar>> {
    let one = BigRational::one();
    let t2 = t * t;
    let den = &one - &t2;
    let a = Scalar::imag(&(&one + &t2) / &den);
    let b = Scalar::imag(&(t * BigRational::from_integer(2.into())) / &den);
    let (z, o) = (Scalar::zero(), Scalar::one());
    vec![vec![o.clone(), a.clone(), z.clone(), -&b], vec![z, b, o, a]]
}

fn averaged_metric(m: &Manifest) -> MetricSpec {
    let g = m.algebra().expect("catalog algebra");
    let acs = match &m.structure {
        Structure::Frame(j) => acx_core::AlmostComplex::from_frame(&g, j.clone()),
        Structure::Coframe(c) => acx_core::AlmostComplex::from_coframe(&g, c.clone()),
    }
    .expect("catalog structure");
    // `averaged` returns S + J^T S J; halving keeps the identity fixed when J is orthogonal
    let metric = Metric::averaged(&Matrix::identity(m.dim), acs.j_frame()).expect("averaged metric");
    MetricSpec::Gram(metric.gram().scale(&Scalar::ratio(1, 2)))
}

pub fn sol3(t: &BigRational) -> Result<Manifest, AcxError> {
    let half = BigRational::new(1.into(), 2.into());
    if t.abs() > half {
        return Err(AcxError::Parse {
            location: "catalog parameter".into(),
            message: format!("sol3_t needs |t| <= 1/2, got {t}"),
        });
    }
    let zero = t.numer().sign() == num_bigint::Sign::NoSign;
    let mut m = Manifest {
        name: format!("sol3_t@{t}"),
        dim: 4,
        d: salamon(4, &["0", "0", "-13", "14"]),
        structure: Structure::Coframe(sol_coframe(t)),
        metric: MetricSpec::Identity,
        omega: zero.then(|| omega_std(4)),
        flags: flags(&[("integrable", false)]),
    };
    m.metric = averaged_metric(&m);
    if zero {
        m.flags.insert("almost_kahler".into(), true);
    }
    Ok(m)
}

pub fn nakamura_j1() -> Manifest {
    let cf = ["e1+i*e2", "e3+i*e4+e5-i*e6", "e5+i*e6"];
    let mut m = Manifest {
        name: "nakamura_j1".into(),
        dim: 6,
        d: salamon(6, &["0", "0", "-13+24", "-14-23", "15-26", "16+25"]),
        structure: Structure::Coframe(
            cf.iter().map(|s| crate::syntax::parse_covector(s, 6).expect("catalog covector")).collect(),
        ),
        metric: MetricSpec::Identity,
        omega: None,
        flags: flags(&[("integrable", false)]),
    };
    m.metric = averaged_metric(&m);
    m
}

/// Looks up a catalog entry by name.
pub fn lookup(name: &str) -> Result<Manifest, AcxError> {
    if name == "kt" {
        return Ok(kt());
    }
    if name == "nakamura_j1" {
        return Ok(nakamura_j1());
    }
    if let Some(t) = name.strip_prefix("sol3_t@") {
        let s: Scalar = t.parse().map_err(|_| AcxError::Parse {
            location: "catalog parameter".into(),
            message: format!("`{t}` is not a rational number"),
        })?;
        if !s.is_real() {
            return Err(AcxError::Parse { location: "catalog parameter".into(), message: "t must be real".into() });
        }
        return sol3(s.re());
    }
    if let Some(n) = name.strip_prefix("torus_").and_then(|n| n.parse::<usize>().ok()) {
        if (2..=8).contains(&n) && n % 2 == 0 {
            return Ok(torus(n));
        }
    }
    Err(AcxError::UnknownInput(name.to_string()))
}

/// The rational `c_t` with `μ̄(f φ^1 + g φ^2) = 0` exactly when `g = c_t f`.
pub fn sol_c(t: &BigRational) -> BigRational {
    let one = BigRational::one();
    let t2 = t * t;
    let four = BigRational::from_integer(4.into());
    t * (&one + &t2) / (&one + &four * &t2 + &t2 * &t2)
}
