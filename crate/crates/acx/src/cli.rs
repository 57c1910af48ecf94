//! Command-line entry point. Output goes to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 validation failure, 2 parse failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use acx_core::coeff_ext::bc_growth_witness;
use acx_core::harmonic::{h1_structure_checks, h_table, harmonic_space};
use acx_core::identities::{is_almost_kaehler, operator_identity_checks};
use acx_core::{AdjointConvention, CohomologyEngine, CohomologyTag, HarmonicOp, InvariantModel};
use clap::{Parser, Subcommand, ValueEnum};

use crate::cache::{self, Cache, Lookup};
use crate::catalog;
use crate::error::AcxError;
use crate::manifest::{parse_metric_file, Manifest};
use crate::report::{self, Format};

#[derive(Parser, Debug)]
#[command(name = "acx", version, about = "Exact invariant cohomology and harmonic forms of almost complex structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a manifest and run the operator identities.
    Check { input: String },
    /// Print the canonical form of a manifest.
    Manifest { input: String },
    /// Dimensions of harmonic spaces, degrees as columns.
    Invariants {
        input: String,
        /// Comma-separated operators, e.g. `d+dc,ddc`; all applicable ones by default.
        #[arg(long)]
        ops: Option<String>,
        /// Inclusive degree range `A..B`, or a single degree.
        #[arg(long)]
        degrees: Option<String>,
        /// TOML file with a `metric = …` entry replacing the manifest metric.
        #[arg(long)]
        metric: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Adjoint::Star)]
        adjoint: Adjoint,
    },
    /// Dimensions of every cohomology the engine knows.
    Cohomology { input: String },
    /// One harmonic space.
    Harmonic {
        input: String,
        #[arg(long)]
        op: String,
        #[arg(long)]
        degree: usize,
        /// Print a basis in canonical echelon form.
        #[arg(long)]
        basis: bool,
        #[arg(long, value_enum, default_value_t = Adjoint::Star)]
        adjoint: Adjoint,
    },
    /// Dimension of the trigonometric Bott-Chern witness on the Kodaira-Thurston manifold.
    WitnessKt {
        #[arg(long)]
        max_frequency: usize,
    },
    /// Full report as JSON or markdown.
    Report {
        input: String,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Cache directory; the ACX_CACHE environment variable takes precedence.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Adjoint {
    Star,
    Gram,
}

impl From<Adjoint> for AdjointConvention {
    fn from(a: Adjoint) -> Self {
        match a {
            Adjoint::Star => AdjointConvention::Star,
            Adjoint::Gram => AdjointConvention::Gram,
        }
    }
}

/// A path if it exists, otherwise a catalog name.
pub fn load_input(input: &str) -> Result<Manifest, AcxError> {
    let path = Path::new(input);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|source| AcxError::Read { path: input.to_string(), source })?;
        return Manifest::parse(&text);
    }
    catalog::lookup(input)
}

fn parse_err(location: &str, message: impl Into<String>) -> AcxError {
    AcxError::Parse { location: location.to_string(), message: message.into() }
}

fn parse_degrees(spec: Option<&str>, dim: usize) -> Result<(usize, usize), AcxError> {
    let Some(spec) = spec else { return Ok((0, dim)) };
    let bad = || parse_err("--degrees", format!("expected `A..B` or `k`, got `{spec}`"));
    let (a, b) = match spec.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k: usize = spec.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if a > b || b > dim {
        return Err(parse_err("--degrees", format!("range {a}..{b} is not inside 0..{dim}")));
    }
    Ok((a, b))
}

fn parse_ops(spec: Option<&str>, model: &InvariantModel) -> Result<Vec<HarmonicOp>, AcxError> {
    match spec {
        None => Ok(report::applicable_ops(model)),
        Some(list) => {
            list.split(',').map(|s| s.parse::<HarmonicOp>().map_err(|e| parse_err("--ops", e.to_string()))).collect()
        }
    }
}

fn row(out: &mut dyn Write, label: &str, values: &[usize]) -> std::io::Result<()> {
    let cells: Vec<String> = values.iter().map(|v| format!("{v:>3}")).collect();
    writeln!(out, "{label:<16}{}", cells.join(""))
}

fn header(out: &mut dyn Write, from: usize, to: usize) -> std::io::Result<()> {
    let degrees: Vec<usize> = (from..=to).collect();
    row(out, "k", &degrees)
}

fn check(manifest: &Manifest, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, AcxError> {
    let model = manifest.model()?;
    let mut checks = operator_identity_checks(&model)?;
    checks.extend(h1_structure_checks(&model)?);
    let rank = model.acs().nijenhuis(model.algebra(), model.d()).rank;
    writeln!(out, "name            {}", manifest.name)?;
    writeln!(out, "hash            {}", manifest.hash())?;
    writeln!(out, "dim             {}", model.dim())?;
    writeln!(out, "rank mubar      {rank}")?;
    writeln!(out, "almost kahler   {}", is_almost_kaehler(&model)?)?;
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    writeln!(out, "checks          {}/{} passed", checks.len() - failed.len(), checks.len())?;
    for c in &failed {
        writeln!(err, "check failed: {} {}", c.name, c.detail)?;
    }
    Ok(if failed.is_empty() { 0 } else { 1 })
}

fn invariants(
    manifest: &Manifest,
    ops: Option<&str>,
    degrees: Option<&str>,
    adjoint: Adjoint,
    out: &mut dyn Write,
) -> Result<u8, AcxError> {
    let model = manifest.model()?.with_adjoint_convention(adjoint.into());
    let (a, b) = parse_degrees(degrees, model.dim())?;
    let ops = parse_ops(ops, &model)?;
    if let Some(op) = ops.iter().find(|op| op.needs_symplectic() && !model.has_symplectic()) {
        return Err(parse_err("--ops", format!("`{op}` needs a symplectic form and the manifest has none")));
    }
    let table = h_table(&model, &ops, a..=b)?;
    header(out, a, b)?;
    for op in &ops {
        row(out, op.tag(), table.row(*op).expect("computed row"))?;
    }
    Ok(0)
}

fn cohomology(manifest: &Manifest, out: &mut dyn Write) -> Result<u8, AcxError> {
    let model = manifest.model()?;
    let engine = CohomologyEngine::new(&model)?;
    header(out, 0, model.dim())?;
    for tag in CohomologyTag::GRADED {
        row(out, &tag.to_string(), &engine.dims(tag)?)?;
    }
    for (p, q) in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
        if let Ok(s) = engine.bigraded(p, q) {
            writeln!(out, "{:<16}{:>3}", CohomologyTag::Bigraded(p, q).to_string(), s.dim())?;
        }
    }
    Ok(0)
}

fn harmonic(
    manifest: &Manifest,
    op: &str,
    degree: usize,
    basis: bool,
    adjoint: Adjoint,
    out: &mut dyn Write,
) -> Result<u8, AcxError> {
    let model = manifest.model()?.with_adjoint_convention(adjoint.into());
    let op: HarmonicOp = op.parse().map_err(|e: acx_core::Error| parse_err("--op", e.to_string()))?;
    if degree > model.dim() {
        return Err(parse_err("--degree", format!("{degree} exceeds the dimension {}", model.dim())));
    }
    if op.needs_symplectic() && !model.has_symplectic() {
        return Err(parse_err("--op", format!("`{op}` needs a symplectic form and the manifest has none")));
    }
    let space = harmonic_space(&model, op, degree)?;
    writeln!(out, "h^{degree}_{op} = {}", space.h())?;
    if basis {
        for v in space.basis.basis() {
            writeln!(out, "{}", acx_core::InvariantForm::from_vector(model.dim(), degree, v))?;
        }
    }
    Ok(0)
}

fn witness(max_frequency: usize, out: &mut dyn Write) -> Result<u8, AcxError> {
    let model = catalog::kt().model()?;
    writeln!(out, "{:<16}{:>6}", "N", "dim")?;
    for n in 0..=max_frequency {
        writeln!(out, "{n:<16}{:>6}", bc_growth_witness(&model, n)?)?;
    }
    Ok(0)
}

/// Renders a report, going through the cache when one is configured.
pub fn render_report(
    manifest: &Manifest,
    format: Format,
    cache: Option<&Cache>,
    err: &mut dyn Write,
) -> Result<(String, bool), AcxError> {
    let command = format!("report --format {}", format.tag());
    let key = cache::key(&manifest.hash(), &manifest.metric.hash(), &command);
    if let Some(c) = cache {
        match c.load(&key) {
            Lookup::Hit(body) => {
                let passed = !has_failure(&body, format);
                return Ok((body, passed));
            }
            Lookup::Corrupt(why) => writeln!(err, "warning: corrupt cache entry {why}; recomputing")?,
            Lookup::Miss => {}
        }
    }
    let model = manifest.model()?;
    let r = report::build(manifest, &model)?;
    let body = match format {
        Format::Json => r.to_json(),
        Format::Markdown => r.to_markdown(),
    };
    if let Some(c) = cache {
        if let Err(e) = c.store(&key, &body) {
            writeln!(err, "warning: cannot write cache entry in {}: {e}", c.dir().display())?;
        }
    }
    Ok((body, r.all_passed()))
}

fn has_failure(body: &str, format: Format) -> bool {
    match format {
        Format::Json => serde_json::from_str::<report::Report>(body).map_or(true, |r| !r.all_passed()),
        Format::Markdown => body.lines().any(|l| l.starts_with("- FAIL ")),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, AcxError> {
    match cli.command {
        Command::Check { input } => check(&load_input(&input)?, out, err),
        Command::Manifest { input } => {
            let m = load_input(&input)?;
            out.write_all(m.print().as_bytes())?;
            Ok(0)
        }
        Command::Invariants { input, ops, degrees, metric, adjoint } => {
            let mut m = load_input(&input)?;
            if let Some(path) = metric {
                let text = std::fs::read_to_string(&path)
                    .map_err(|source| AcxError::Read { path: path.display().to_string(), source })?;
                m = m.with_metric(parse_metric_file(&text, m.dim)?);
            }
            invariants(&m, ops.as_deref(), degrees.as_deref(), adjoint, out)
        }
        Command::Cohomology { input } => cohomology(&load_input(&input)?, out),
        Command::Harmonic { input, op, degree, basis, adjoint } => {
            harmonic(&load_input(&input)?, &op, degree, basis, adjoint, out)
        }
        Command::WitnessKt { max_frequency } => witness(max_frequency, out),
        Command::Report { input, format, cache } => {
            let m = load_input(&input)?;
            let cache = Cache::from_env_or(cache.as_deref());
            let (body, passed) = render_report(&m, format, cache.as_ref(), err)?;
            out.write_all(body.as_bytes())?;
            if !passed {
                writeln!(err, "report contains failing checks")?;
            }
            Ok(if passed { 0 } else { 1 })
        }
    }
}

/// Runs one command line (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
                return 0;
            }
            let _ = err.write_all(text.as_bytes());
            return 2;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
