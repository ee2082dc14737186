//! Batch command line: spectrum sweeps, point eigensolutions and randomized
//! verification runs.
//!
//! Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

use std::f64::consts::TAU;
use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{EigenSolution, ModelParams};
use crate::oracle::{cross_check_with_tol, CrossCheck, MATCH_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rotor-eigen",
    version,
    about = "Rotor-equation eigensolvers with matrix cross-checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy bands over a range of |k| (or of Gamma for the atoms model).
    Spectrum(SpectrumArgs),
    /// Eigenvalues and eigenspinors at one parameter point, as JSON.
    Eigens(EigensArgs),
    /// Random cross-checks of the rotor method against the matrix oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Monolayer,
    Qw,
    Atoms,
    Bilayer,
}

impl ModelKind {
    pub const ALL: [ModelKind; 4] = [
        ModelKind::Monolayer,
        ModelKind::Qw,
        ModelKind::Atoms,
        ModelKind::Bilayer,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// Rashba constant (qw).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Level splitting (atoms).
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    /// Dipole coupling (atoms, eigens only).
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    /// Interlayer coupling (bilayer).
    #[arg(long, allow_hyphen_values = true)]
    pub gamma1: Option<f64>,
    /// Half the interlayer bias (bilayer).
    #[arg(long = "bias-u", allow_hyphen_values = true)]
    pub bias_u: Option<f64>,
    /// Valley index, +1 or -1 (bilayer).
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub eta: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub model: ModelKind,
    /// Start of the sweep (|k|, or Gamma for atoms).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub kmin: f64,
    /// End of the sweep.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub kmax: f64,
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    #[command(flatten)]
    pub params: ModelArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EigensArgs {
    #[arg(long, value_enum)]
    pub model: ModelKind,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub kx: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub ky: f64,
    #[command(flatten)]
    pub params: ModelArgs,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Random draws per model.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = MATCH_TOL)]
    pub tol: f64,
    /// Restrict to one model.
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

fn need(value: Option<f64>, flag: &str, model: ModelKind) -> Result<f64> {
    value.ok_or_else(|| {
        usage(format!(
            "--{flag} is required for --model {}",
            model_name(model)
        ))
    })
}

fn model_name(m: ModelKind) -> &'static str {
    match m {
        ModelKind::Monolayer => "monolayer",
        ModelKind::Qw => "qw",
        ModelKind::Atoms => "atoms",
        ModelKind::Bilayer => "bilayer",
    }
}

/// Sweep definition behind `spectrum`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: ModelKind,
    pub xmin: f64,
    pub xmax: f64,
    pub samples: usize,
    pub alpha: f64,
    pub omega: f64,
    pub gamma1: f64,
    pub u: f64,
    pub eta: f64,
}

impl SweepConfig {
    pub fn from_args(a: &SpectrumArgs) -> Result<Self> {
        if a.samples < 2 {
            return Err(usage("--samples must be at least 2"));
        }
        if a.kmin.is_nan() || a.kmax.is_nan() || a.kmin > a.kmax {
            return Err(usage("--kmin must not exceed --kmax"));
        }
        let p = &a.params;
        let mut cfg = SweepConfig {
            model: a.model,
            xmin: a.kmin,
            xmax: a.kmax,
            samples: a.samples,
            alpha: 0.0,
            omega: 0.0,
            gamma1: 0.0,
            u: 0.0,
            eta: p.eta,
        };
        match a.model {
            ModelKind::Monolayer => {}
            ModelKind::Qw => cfg.alpha = need(p.alpha, "alpha", a.model)?,
            ModelKind::Atoms => cfg.omega = need(p.omega, "omega", a.model)?,
            ModelKind::Bilayer => {
                cfg.gamma1 = need(p.gamma1, "gamma1", a.model)?;
                cfg.u = need(p.bias_u, "bias-u", a.model)?;
            }
        }
        cfg.point(cfg.xmin).validate()?;
        cfg.point(cfg.xmax).validate()?;
        Ok(cfg)
    }

    /// Sweep variable at sample `i`; the last sample is exactly `xmax`.
    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.samples {
            self.xmax
        } else {
            self.xmin + (self.xmax - self.xmin) * i as f64 / (self.samples - 1) as f64
        }
    }

    /// Parameters at sweep value `x`; the wave vector points along e1.
    pub fn point(&self, x: f64) -> ModelParams {
        match self.model {
            ModelKind::Monolayer => ModelParams::Monolayer { kx: x, ky: 0.0 },
            ModelKind::Qw => ModelParams::Qw {
                kx: x,
                ky: 0.0,
                alpha: self.alpha,
            },
            ModelKind::Atoms => ModelParams::Atoms {
                omega: self.omega,
                gamma: x,
            },
            ModelKind::Bilayer => ModelParams::Bilayer {
                kx: x,
                ky: 0.0,
                u: self.u,
                gamma1: self.gamma1,
                eta: self.eta,
            },
        }
    }

    pub fn variable(&self) -> &'static str {
        if self.model == ModelKind::Atoms {
            "Gamma"
        } else {
            "k"
        }
    }
}

/// One sample of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub x: f64,
    pub energies: Vec<f64>,
    pub degenerate: bool,
}

/// Energies with a flag for points where some rotor is undefined.
pub fn solve_point(params: &ModelParams) -> Result<(Vec<f64>, bool)> {
    match params.solve() {
        Ok(sols) => Ok((
            sols.iter().map(|s| s.energy).collect(),
            sols.iter().any(|s| s.degenerate),
        )),
        Err(Error::Degenerate { energies, .. }) => Ok((energies, true)),
        Err(e) => Err(e),
    }
}

/// All sweep samples, in index order.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let x = cfg.x(i);
            let (energies, degenerate) = solve_point(&cfg.point(x))?;
            Ok(SweepRow {
                x,
                energies,
                degenerate,
            })
        })
        .collect()
}

/// Shortest round-trip decimal; `-0` prints as `0`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

pub fn render_csv(cfg: &SweepConfig, rows: &[SweepRow]) -> String {
    let n = rows.first().map_or(0, |r| r.energies.len());
    let mut out = String::from(cfg.variable());
    for i in 1..=n {
        out.push_str(&format!(",E{i}"));
    }
    out.push('\n');
    for r in rows {
        out.push_str(&fmt_num(r.x));
        for e in &r.energies {
            out.push(',');
            out.push_str(&fmt_num(*e));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct SweepJson<'a> {
    model: ModelKind,
    variable: &'a str,
    rows: &'a [SweepRow],
}

pub fn render_sweep_json(cfg: &SweepConfig, rows: &[SweepRow]) -> Result<String> {
    let doc = SweepJson {
        model: cfg.model,
        variable: cfg.variable(),
        rows,
    };
    serde_json::to_string_pretty(&doc)
        .map(|s| s + "\n")
        .map_err(|e| Error::Parse(e.to_string()))
}

/// Parameters for `eigens`.
pub fn point_params(a: &EigensArgs) -> Result<ModelParams> {
    let p = &a.params;
    let m = a.model;
    let params = match m {
        ModelKind::Monolayer => ModelParams::Monolayer { kx: a.kx, ky: a.ky },
        ModelKind::Qw => ModelParams::Qw {
            kx: a.kx,
            ky: a.ky,
            alpha: need(p.alpha, "alpha", m)?,
        },
        ModelKind::Atoms => ModelParams::Atoms {
            omega: need(p.omega, "omega", m)?,
            gamma: need(p.gamma, "gamma", m)?,
        },
        ModelKind::Bilayer => ModelParams::Bilayer {
            kx: a.kx,
            ky: a.ky,
            u: need(p.bias_u, "bias-u", m)?,
            gamma1: need(p.gamma1, "gamma1", m)?,
            eta: p.eta,
        },
    };
    params.validate()?;
    Ok(params)
}

/// Solutions at a point; degenerate points give flagged records.
pub fn eigens(params: &ModelParams) -> Result<Vec<EigenSolution>> {
    match params.solve() {
        Ok(s) => Ok(s),
        Err(Error::Degenerate { energies, .. }) => {
            Ok(energies.into_iter().map(EigenSolution::flagged).collect())
        }
        Err(e) => Err(e),
    }
}

/// Random parameter draw for `verify`.
///
/// `|k|` is log-uniform on `[0.01, 5]` with a uniform angle; `alpha`, `omega`,
/// `Gamma`, `gamma1` and `U` are uniform on `[0.01, 2]`; `eta` is `+-1`.
pub fn draw(model: ModelKind, rng: &mut ChaCha8Rng) -> ModelParams {
    let mut k = || {
        let mag = rng.random_range(0.01f64.ln()..5f64.ln()).exp();
        let phi = rng.random_range(0.0..TAU);
        (mag * phi.cos(), mag * phi.sin())
    };
    match model {
        ModelKind::Monolayer => {
            let (kx, ky) = k();
            ModelParams::Monolayer { kx, ky }
        }
        ModelKind::Qw => {
            let (kx, ky) = k();
            ModelParams::Qw {
                kx,
                ky,
                alpha: rng.random_range(0.01..2.0),
            }
        }
        ModelKind::Atoms => ModelParams::Atoms {
            omega: rng.random_range(0.01..2.0),
            gamma: rng.random_range(0.01..2.0),
        },
        ModelKind::Bilayer => {
            let (kx, ky) = k();
            let u = rng.random_range(0.01..2.0);
            let gamma1 = rng.random_range(0.01..2.0);
            let eta = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            ModelParams::Bilayer {
                kx,
                ky,
                u,
                gamma1,
                eta,
            }
        }
    }
}

/// Per-model outcome of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelSummary {
    pub model: ModelKind,
    pub trials: usize,
    pub passed: usize,
    pub max_delta: f64,
    pub max_residual: f64,
    /// First failing report, if any.
    pub first_failure: Option<CrossCheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub tol: f64,
    pub models: Vec<ModelSummary>,
    pub pass: bool,
}

/// Draws are generated sequentially from one seeded stream (all of one
/// model, then the next), then checked in parallel.
pub fn verify(trials: usize, seed: u64, tol: f64, models: &[ModelKind]) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(ModelKind, ModelParams)> = models
        .iter()
        .flat_map(|&m| (0..trials).map(move |_| m))
        .map(|m| (m, draw(m, &mut rng)))
        .collect();
    let reports: Vec<CrossCheck> = draws
        .par_iter()
        .map(|(_, p)| cross_check_with_tol(p, tol))
        .collect::<Result<_>>()?;
    let summaries = models
        .iter()
        .enumerate()
        .map(|(i, &model)| {
            let chunk = &reports[i * trials..(i + 1) * trials];
            ModelSummary {
                model,
                trials,
                passed: chunk.iter().filter(|r| r.pass).count(),
                max_delta: chunk.iter().map(|r| r.max_delta).fold(0.0, f64::max),
                max_residual: chunk
                    .iter()
                    .flat_map(|r| r.residuals.iter().flatten())
                    .fold(0.0, |a: f64, b| a.max(*b)),
                first_failure: chunk.iter().find(|r| !r.pass).cloned(),
            }
        })
        .collect::<Vec<_>>();
    let pass = summaries.iter().all(|s| s.passed == s.trials);
    Ok(VerifyReport {
        seed,
        tol,
        models: summaries,
        pass,
    })
}

pub fn render_verify(report: &VerifyReport) -> Result<String> {
    let mut out = String::new();
    for s in &report.models {
        out.push_str(&format!(
            "{}: {}/{} passed, max_delta={}, max_residual={}\n",
            model_name(s.model),
            s.passed,
            s.trials,
            fmt_num(s.max_delta),
            fmt_num(s.max_residual)
        ));
    }
    if let Some(fail) = report.models.iter().find_map(|s| s.first_failure.as_ref()) {
        out.push_str("first failure: ");
        out.push_str(&serde_json::to_string(fail).map_err(|e| Error::Parse(e.to_string()))?);
        out.push('\n');
    }
    out.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
    Ok(out)
}

fn emit(text: &str, path: Option<&std::path::Path>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

enum Outcome {
    Done(String),
    Failed(String),
}

fn execute(cli: Cli) -> Result<(Outcome, Option<std::path::PathBuf>)> {
    match cli.command {
        Command::Spectrum(a) => {
            let cfg = SweepConfig::from_args(&a)?;
            let rows = sweep(&cfg)?;
            let text = match a.format {
                Format::Csv => render_csv(&cfg, &rows),
                Format::Json => render_sweep_json(&cfg, &rows)?,
            };
            Ok((Outcome::Done(text), a.out))
        }
        Command::Eigens(a) => {
            let params = point_params(&a)?;
            let sols = eigens(&params)?;
            let text = serde_json::to_string_pretty(&sols)
                .map_err(|e| Error::Parse(e.to_string()))?
                + "\n";
            Ok((Outcome::Done(text), a.out))
        }
        Command::Verify(a) => {
            if a.trials == 0 {
                return Err(usage("--trials must be at least 1"));
            }
            if a.tol.is_nan() || a.tol < 0.0 {
                return Err(usage("--tol must be non-negative"));
            }
            let models: Vec<ModelKind> = match a.model {
                Some(m) => vec![m],
                None => ModelKind::ALL.to_vec(),
            };
            let report = verify(a.trials, a.seed, a.tol, &models)?;
            let text = render_verify(&report)?;
            let outcome = if report.pass {
                Outcome::Done(text)
            } else {
                Outcome::Failed(text)
            };
            Ok((outcome, a.out))
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli) {
        Ok((outcome, path)) => {
            let (text, code) = match outcome {
                Outcome::Done(t) => (t, EXIT_OK),
                Outcome::Failed(t) => (t, EXIT_FAIL),
            };
            if let Err(e) = emit(&text, path.as_deref(), stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_FAIL;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::InvalidParams(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            }
        }
    }
}
