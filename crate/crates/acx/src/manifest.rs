//! Manifest files: TOML descriptions of a Lie algebra with an almost complex
//! structure, a metric and an optional 2-form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use acx_core::identities::is_almost_kaehler;
use acx_core::{AlmostComplex, InvariantForm, InvariantModel, LieAlgebra, Matrix, Metric, Scalar, Symplectic};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::AcxError;
use crate::syntax::{parse_covector, parse_matrix, parse_salamon, print_covector, print_matrix, print_salamon};

/// Flags a manifest may assert about its own data.
pub const KNOWN_FLAGS: [&str; 2] = ["almost_kahler", "integrable"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// Rows of `J` acting on the frame.
    Frame(Matrix),
    /// Components of the `(1,0)`-covectors.
    Coframe(Vec<Vec<Scalar>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricSpec {
    Identity,
    Gram(Matrix),
}

impl MetricSpec {
    pub fn gram(&self, dim: usize) -> Matrix {
        match self {
            MetricSpec::Identity => Matrix::identity(dim),
            MetricSpec::Gram(g) => g.clone(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            MetricSpec::Identity => "metric = \"identity\"\n".into(),
            MetricSpec::Gram(g) => format!("metric = {}\n", toml_rows(&print_matrix(g))),
        }
    }

    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.render().as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub name: String,
    pub dim: usize,
    pub d: Vec<InvariantForm>,
    pub structure: Structure,
    pub metric: MetricSpec,
    pub omega: Option<InvariantForm>,
    pub flags: BTreeMap<String, bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    name: String,
    dim: usize,
    d: Vec<String>,
    #[serde(rename = "J")]
    j: Option<Vec<Vec<String>>>,
    coframe10: Option<Vec<String>>,
    metric: RawMetric,
    omega: Option<String>,
    #[serde(default)]
    flags: BTreeMap<String, bool>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawMetric {
    Named(String),
    Rows(Vec<Vec<String>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMetricFile {
    metric: RawMetric,
}

fn toml_err(e: toml::de::Error, text: &str) -> AcxError {
    let (line, column) = e.span().map_or((0, 0), |s| line_col(text, s.start));
    AcxError::Parse { location: format!("line {line}, column {column}"), message: e.message().to_string() }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, column)
}

fn field_err(field: &str, offset: usize, message: impl Into<String>) -> AcxError {
    AcxError::Parse { location: format!("{field}, offset {offset}"), message: message.into() }
}

fn parse_metric(raw: RawMetric, dim: usize) -> Result<MetricSpec, AcxError> {
    match raw {
        RawMetric::Named(s) if s == "identity" => Ok(MetricSpec::Identity),
        RawMetric::Named(s) => {
            Err(field_err("metric", 0, format!("unknown metric `{s}`, expected \"identity\" or rows")))
        }
        RawMetric::Rows(rows) => parse_matrix(&rows, dim)
            .map(MetricSpec::Gram)
            .map_err(|(r, c, m)| field_err(&format!("metric[{r}][{c}]"), 0, m)),
    }
}

/// Parses a standalone metric file holding a single `metric = …` entry.
pub fn parse_metric_file(text: &str, dim: usize) -> Result<MetricSpec, AcxError> {
    let raw: RawMetricFile = toml::from_str(text).map_err(|e| toml_err(e, text))?;
    parse_metric(raw.metric, dim)
}

fn toml_rows(rows: &[Vec<String>]) -> String {
    let mut out = String::from("[\n");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:?}")).collect();
        let _ = writeln!(out, "    [{}],", cells.join(", "));
    }
    out.push(']');
    out
}

fn toml_list(items: &[String]) -> String {
    let cells: Vec<String> = items.iter().map(|c| format!("{c:?}")).collect();
    format!("[{}]", cells.join(", "))
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, AcxError> {
        let raw: RawManifest = toml::from_str(text).map_err(|e| toml_err(e, text))?;
        let dim = raw.dim;
        if dim == 0 || dim % 2 == 1 || dim > 30 {
            return Err(field_err("dim", 0, format!("dimension must be even and in 2..=30, got {dim}")));
        }
        if raw.d.len() != dim {
            return Err(field_err("d", 0, format!("expected {dim} structure equations, got {}", raw.d.len())));
        }
        let d = raw
            .d
            .iter()
            .enumerate()
            .map(|(k, s)| parse_salamon(s, dim).map_err(|e| field_err(&format!("d[{k}]"), e.offset, e.message)))
            .collect::<Result<Vec<_>, _>>()?;
        let structure = match (raw.j, raw.coframe10) {
            (Some(rows), None) => Structure::Frame(
                parse_matrix(&rows, dim).map_err(|(r, c, m)| field_err(&format!("J[{r}][{c}]"), 0, m))?,
            ),
            (None, Some(covs)) => {
                if covs.len() != dim / 2 {
                    return Err(field_err("coframe10", 0, format!("expected {} covectors", dim / 2)));
                }
                Structure::Coframe(
                    covs.iter()
                        .enumerate()
                        .map(|(k, s)| {
                            parse_covector(s, dim)
                                .map_err(|e| field_err(&format!("coframe10[{k}]"), e.offset, e.message))
                        })
                        .collect::<Result<_, _>>()?,
                )
            }
            _ => return Err(field_err("J", 0, "exactly one of `J` and `coframe10` must be given")),
        };
        let metric = parse_metric(raw.metric, dim)?;
        let omega = raw
            .omega
            .map(|s| parse_salamon(&s, dim).map_err(|e| field_err("omega", e.offset, e.message)))
            .transpose()?;
        if let Some(f) = raw.flags.keys().find(|f| !KNOWN_FLAGS.contains(&f.as_str())) {
            return Err(field_err("flags", 0, format!("unknown flag `{f}`")));
        }
        Ok(Manifest { name: raw.name, dim, d, structure, metric, omega, flags: raw.flags })
    }

    /// Canonical text; `parse(print(m)) == m`.
    pub fn print(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name = {:?}", self.name);
        let _ = writeln!(out, "dim = {}", self.dim);
        let d: Vec<String> = self.d.iter().map(|f| print_salamon(f).expect("real 2-form")).collect();
        let _ = writeln!(out, "d = {}", toml_list(&d));
        match &self.structure {
            Structure::Frame(j) => {
                let _ = writeln!(out, "J = {}", toml_rows(&print_matrix(j)));
            }
            Structure::Coframe(c) => {
                let covs: Vec<String> = c.iter().map(|v| print_covector(v)).collect();
                let _ = writeln!(out, "coframe10 = {}", toml_list(&covs));
            }
        }
        out.push_str(&self.metric.render());
        if let Some(w) = &self.omega {
            let _ = writeln!(out, "omega = {:?}", print_salamon(w).expect("real 2-form"));
        }
        if !self.flags.is_empty() {
            out.push_str("\n[flags]\n");
            for (k, v) in &self.flags {
                let _ = writeln!(out, "{k} = {v}");
            }
        }
        out
    }

    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.print().as_bytes()))
    }

    pub fn algebra(&self) -> Result<LieAlgebra, AcxError> {
        Ok(LieAlgebra::from_differentials(&self.d)?.validate()?)
    }

    /// Builds the exact model and checks every claim the manifest makes.
    pub fn model(&self) -> Result<InvariantModel, AcxError> {
        let g = self.algebra()?;
        let acs = match &self.structure {
            Structure::Frame(j) => AlmostComplex::from_frame(&g, j.clone())?,
            Structure::Coframe(c) => AlmostComplex::from_coframe(&g, c.clone())?,
        };
        let metric = Metric::new(self.metric.gram(self.dim))?;
        let mut model = InvariantModel::new(g, acs)?.with_metric(metric)?;
        if let Some(w) = &self.omega {
            model = model.with_symplectic(Symplectic::new(w.clone())?)?;
            if !model.omega_closed()? {
                return Err(acx_core::Error::NotClosed.into());
            }
        }
        for (flag, expected) in &self.flags {
            let actual = match flag.as_str() {
                "almost_kahler" => is_almost_kaehler(&model)?,
                "integrable" => model.acs().nijenhuis(model.algebra(), model.d()).is_integrable(),
                _ => unreachable!("flags are checked when parsing"),
            };
            if actual != *expected {
                return Err(AcxError::Flag { flag: flag.clone(), expected: *expected });
            }
        }
        Ok(model)
    }

    /// Replaces the metric. The `almost_kahler` flag was a claim about the
    /// old metric and is dropped.
    pub fn with_metric(&self, metric: MetricSpec) -> Manifest {
        let mut flags = self.flags.clone();
        flags.remove("almost_kahler");
        Manifest { metric, flags, ..self.clone() }
    }
}
