//! Reports: every dimension the engine computes for one manifest, with check
//! outcomes and a provenance flag per value.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use acx_core::cohomology::{delta_equivalence_checks, harmonic_cohomology_checks};
use acx_core::harmonic::{almost_kaehler_checks, betti, delta_harmonic_relations, h1_structure_checks, h_table};
use acx_core::identities::{is_almost_kaehler, operator_identity_checks};
use acx_core::{Check, CohomologyEngine, CohomologyTag, Error, HarmonicOp, InvariantModel};
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::AcxError;
use crate::manifest::Manifest;

pub const INVARIANT_MODEL: &str = "invariant-model";
pub const PAPER_CERTIFIED: &str = "paper-certified";

/// Field order is alphabetical so that the JSON keys come out sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub betti: Vec<usize>,
    pub checks: BTreeMap<String, bool>,
    pub cohomology: BTreeMap<String, Vec<usize>>,
    pub h: BTreeMap<String, Vec<usize>>,
    pub hash: String,
    pub name: String,
    pub provenance: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(format!("unknown format `{s}`, expected json or md")),
        }
    }
}

impl Format {
    pub fn tag(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Markdown => "md",
        }
    }
}

/// Published values for the catalog entries, keyed like the provenance map.
/// They only apply to a manifest identical to the catalog entry.
pub fn published_values(manifest: &Manifest) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    let Ok(entry) = catalog::lookup(&manifest.name) else { return out };
    if entry != *manifest {
        return out;
    }
    let mut put = |k: &str, v: usize| {
        out.insert(k.to_string(), v);
    };
    match manifest.name.as_str() {
        "kt" => {
            for (k, v) in [1, 2, 4, 3, 1].into_iter().enumerate() {
                put(&format!("h.d+dc.{k}"), v);
            }
            put("h.d+dLam.1", 3);
            put("h.d+dLam.2", 5);
            put("h.delta+deltabar.3", 2);
            put("betti.2", 4);
            put("cohomology.d+dc.0", 1);
            put("cohomology.d+dc.1", 2);
            put("cohomology.d+dc.4", 1);
            put("cohomology.d+dc:(2,0).2", 0);
            put("cohomology.d+dc:(0,2).2", 0);
        }
        "nakamura_j1" => put("h.d+dc.1", 2),
        name if name.starts_with("sol3_t@") => {
            let h1 = if manifest.omega.is_some() { 2 } else { 0 };
            put("h.d+dc.1", h1);
        }
        _ => {}
    }
    out
}

fn merge(checks: &mut BTreeMap<String, bool>, list: Vec<Check>) {
    for c in list {
        let entry = checks.entry(c.name).or_insert(true);
        *entry &= c.passed;
    }
}

/// `(p, q, dim)` for the bidegrees with `p + q <= 2` the engine supports.
fn bigraded(engine: &CohomologyEngine<'_>, n: usize) -> Result<Vec<(usize, usize, usize)>, Error> {
    let mut out = Vec::new();
    for k in 1..=2.min(n) {
        for p in 0..=k {
            match engine.bigraded(p, k - p) {
                Ok(s) => out.push((p, k - p, s.dim())),
                Err(Error::UnsupportedBidegree(..)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

pub fn applicable_ops(model: &InvariantModel) -> Vec<HarmonicOp> {
    HarmonicOp::ALL.into_iter().filter(|op| model.has_symplectic() || !op.needs_symplectic()).collect()
}

/// Computes the full report for a validated manifest.
pub fn build(manifest: &Manifest, model: &InvariantModel) -> Result<Report, AcxError> {
    let n = model.dim();
    let ops = applicable_ops(model);
    let table = h_table(model, &ops, 0..=n)?;
    let mut h = BTreeMap::new();
    for op in &ops {
        h.insert(op.tag().to_string(), table.row(*op).expect("computed row").to_vec());
    }
    let engine = CohomologyEngine::new(model)?;
    let mut cohomology = BTreeMap::new();
    for tag in CohomologyTag::GRADED {
        cohomology.insert(tag.to_string(), engine.dims(tag)?);
    }
    for (p, q, dim) in bigraded(&engine, n)? {
        let mut row = vec![0; n + 1];
        row[p + q] = dim;
        cohomology.insert(CohomologyTag::Bigraded(p, q).to_string(), row);
    }

    let mut checks = BTreeMap::new();
    merge(&mut checks, operator_identity_checks(model)?);
    merge(&mut checks, h1_structure_checks(model)?);
    merge(&mut checks, delta_equivalence_checks(&engine)?);
    merge(&mut checks, harmonic_cohomology_checks(&engine)?);
    for k in 0..=n {
        merge(&mut checks, delta_harmonic_relations(model, k)?);
        merge(&mut checks, engine.bc_splitting(k)?.checks);
        merge(&mut checks, engine.diagram_maps(k)?.checks);
    }
    if n == 4 && is_almost_kaehler(model)? {
        merge(&mut checks, almost_kaehler_checks(model)?.checks);
    }

    let betti = betti(model);
    let mut values: Vec<(String, usize)> = Vec::new();
    values.extend(betti.iter().enumerate().map(|(k, v)| (format!("betti.{k}"), *v)));
    for (tag, row) in &h {
        values.extend(row.iter().enumerate().map(|(k, v)| (format!("h.{tag}.{k}"), *v)));
    }
    for (tag, row) in &cohomology {
        values.extend(row.iter().enumerate().map(|(k, v)| (format!("cohomology.{tag}.{k}"), *v)));
    }
    let published = published_values(manifest);
    let mut provenance = BTreeMap::new();
    for (key, value) in values {
        let flag = match published.get(&key) {
            Some(&p) if p == value => PAPER_CERTIFIED,
            _ => INVARIANT_MODEL,
        };
        provenance.insert(key, flag.to_string());
    }
    for (key, expected) in &published {
        let found = provenance.get(key).map(|f| f == PAPER_CERTIFIED).unwrap_or(false);
        checks.insert(format!("published value {key} = {expected}"), found);
    }
    Ok(Report { betti, checks, cohomology, h, hash: manifest.hash(), name: manifest.name.clone(), provenance })
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|&b| b)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    fn marked(&self, key: &str, v: usize) -> String {
        if self.provenance.get(key).is_some_and(|f| f == PAPER_CERTIFIED) {
            format!("{v}*")
        } else {
            v.to_string()
        }
    }

    /// Degrees as columns; each row carries the provenance key prefix of its
    /// values.
    fn table(&self, out: &mut String, rows: &[(&str, String, &[usize])]) {
        let n = rows.first().map_or(0, |r| r.2.len());
        out.push_str("| |");
        for k in 0..n {
            let _ = write!(out, " {k} |");
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(n));
        out.push('\n');
        for (label, prefix, row) in rows {
            let _ = write!(out, "| {label} |");
            for (k, v) in row.iter().enumerate() {
                let _ = write!(out, " {} |", self.marked(&format!("{prefix}.{k}"), *v));
            }
            out.push('\n');
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# {}\n\nmanifest hash `{}`\n\n## Harmonic numbers\n\n", self.name, self.hash);
        let mut rows = vec![("b", "betti".to_string(), self.betti.as_slice())];
        rows.extend(self.h.iter().map(|(k, v)| (k.as_str(), format!("h.{k}"), v.as_slice())));
        self.table(&mut out, &rows);
        out.push_str("\n## Cohomology dimensions\n\n");
        let rows: Vec<_> =
            self.cohomology.iter().map(|(k, v)| (k.as_str(), format!("cohomology.{k}"), v.as_slice())).collect();
        self.table(&mut out, &rows);
        out.push_str("\n## Checks\n\n");
        for (name, ok) in &self.checks {
            let _ = writeln!(out, "- {} {}", if *ok { "PASS" } else { "FAIL" }, name);
        }
        out.push_str("\nValues marked * reproduce published values.\n");
        out
    }
}
