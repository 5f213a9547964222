//! The `aous` command line.
//!
//! Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or input
//! error, 3 numerical failure.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::format::{parse_matrices, to_json, MatrixDoc};
use crate::harness::{run_suite, search_counterexample, status_word, CaseStatus, SuiteConfig, DEFAULT_TRIALS};
use crate::matrix::HermitianMatrix;
use crate::models::{generate, SampleRecipe};
use crate::order::{
    abs_value, is_abs_infty_orthogonal, is_abs_orthogonal, is_absolutely_compatible, is_p_orthogonal, join, meet,
    pos_neg_parts, InftyMode, ModelContext, ModelKind, OrthoVerdict, PNorm, DEFAULT_COEFFICIENTS,
};
use crate::projections::{cover, is_order_projection, p_decompose, range_projection, OrderProjection};
use crate::spectral::{e_alpha, spectral_decompose, spectral_family, DecompositionReport};
use crate::tolerance::ToleranceProfile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "aous",
    version,
    about = "Absolute order unit space calculus on matrix models"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Absolute tolerance (default 1e-9, or $AOUS_TOL).
    #[arg(long, global = true)]
    pub atol: Option<f64>,
    #[arg(long, global = true)]
    pub rtol: Option<f64>,
    #[arg(long, global = true)]
    pub eig_tol: Option<f64>,
    #[arg(long, global = true)]
    pub psd_slack: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Model for the computation commands; the dimension comes from the input.
    #[arg(long, global = true, value_enum, default_value_t = Model::MatrixInfty)]
    pub model: Model,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    MatrixInfty,
    MatrixTrace1,
    DiagonalLattice,
}

impl From<Model> for ModelKind {
    fn from(m: Model) -> Self {
        match m {
            Model::MatrixInfty => ModelKind::MatrixInfty,
            Model::MatrixTrace1 => ModelKind::MatrixTrace1,
            Model::DiagonalLattice => ModelKind::DiagonalLattice,
        }
    }
}

/// Matrix inputs: files holding one matrix document or an array of them,
/// followed by recipe-generated samples.
#[derive(Debug, Args)]
pub struct Inputs {
    pub files: Vec<PathBuf>,
    /// `kind:dim:seed[:rank]`, e.g. `random-hermitian:4:7`. Repeatable.
    #[arg(long = "recipe")]
    pub recipes: Vec<SampleRecipe>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrthKind {
    Abs,
    P1,
    Pinf,
    AbsInf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// |a|
    Abs(Inputs),
    /// ½(u + v − |u − v|)
    Meet(Inputs),
    /// ½(u + v + |u − v|)
    Join(Inputs),
    /// Positive and negative parts.
    Parts(Inputs),
    /// Orthogonality of a pair.
    CheckOrth {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = OrthKind::Abs)]
        kind: OrthKind,
        /// For `abs-inf`: sample this many sub-element pairs instead of the product oracle.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Absolute compatibility of a pair.
    CheckCompat(Inputs),
    /// Order projection membership.
    OpCheck(Inputs),
    /// Least order projection whose corner holds the element.
    Cover(Inputs),
    /// Range projection.
    RangeProj(Inputs),
    /// Split `v` along an order projection `p`; inputs are `v` then `p`.
    DecomposeP(Inputs),
    /// Spectral family, or `e_α` when `--alpha` is given.
    SpectralFamily {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
    },
    /// Step-function approximation from the spectral family.
    SpectralDecompose {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        epsilon: f64,
    },
    /// Run registered verification cases (`all` by default).
    Verify {
        #[arg(default_value = "all")]
        case: String,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 picks automatically.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// `kind:dim`; repeatable. Defaults to the standard context set.
        #[arg(long = "context")]
        contexts: Vec<ModelContext>,
    },
    /// Search for a counterexample: triangle-inequality, join-associativity or noncommuting-compat.
    SearchCx {
        property: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "context", default_value = "matrix-infty:2")]
        context: ModelContext,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Abs(_) => "abs",
            Command::Meet(_) => "meet",
            Command::Join(_) => "join",
            Command::Parts(_) => "parts",
            Command::CheckOrth { .. } => "check-orth",
            Command::CheckCompat(_) => "check-compat",
            Command::OpCheck(_) => "op-check",
            Command::Cover(_) => "cover",
            Command::RangeProj(_) => "range-proj",
            Command::DecomposeP(_) => "decompose-p",
            Command::SpectralFamily { .. } => "spectral-family",
            Command::SpectralDecompose { .. } => "spectral-decompose",
            Command::Verify { .. } => "verify",
            Command::SearchCx { .. } => "search-cx",
        }
    }
}

/// Shared structured envelope.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub inputs_digest: String,
    pub verdict: Option<bool>,
    pub residuals: BTreeMap<String, f64>,
    pub timings: BTreeMap<String, f64>,
    pub result: Value,
}

struct Outcome {
    verdict: Option<bool>,
    residuals: BTreeMap<String, f64>,
    result: Value,
    text: String,
}

impl Outcome {
    fn matrix(h: &HermitianMatrix) -> Self {
        Self {
            verdict: None,
            residuals: BTreeMap::new(),
            result: json!({ "matrix": MatrixDoc::from_matrix(h) }),
            text: to_json(h),
        }
    }

    fn verdict(v: &OrthoVerdict) -> Self {
        let mut residuals = BTreeMap::new();
        residuals.insert("residual".to_string(), v.residual);
        residuals.insert("threshold".to_string(), v.threshold);
        let mut text = format!(
            "holds={} residual={:.6e} threshold={:.3e}",
            v.holds, v.residual, v.threshold
        );
        if let Some(a) = &v.anomaly {
            text.push_str(&format!("\nanomaly: {a}"));
        }
        for w in &v.witness {
            text.push_str(&format!("\nwitness: {}", to_json(w)));
        }
        Self {
            verdict: Some(v.holds),
            residuals,
            result: serde_json::to_value(v).expect("verdict serializes"),
            text,
        }
    }
}

pub fn tolerance(global: &Global) -> Result<ToleranceProfile> {
    let mut t = ToleranceProfile::from_env()?;
    if let Some(x) = global.atol {
        t.atol = x;
    }
    if let Some(x) = global.rtol {
        t.rtol = x;
    }
    if let Some(x) = global.eig_tol {
        t.eig_tol = x;
    }
    if let Some(x) = global.psd_slack {
        t.psd_slack = x;
    }
    t.validate()?;
    Ok(t)
}

fn load(inputs: &Inputs) -> Result<Vec<HermitianMatrix>> {
    let mut out = Vec::new();
    for path in &inputs.files {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
        let ms = parse_matrices(&text).map_err(|e| match e {
            Error::Format(m) => Error::Format(format!("{}: {m}", path.display())),
            other => other,
        })?;
        out.extend(ms);
    }
    for recipe in &inputs.recipes {
        out.extend(generate(recipe)?.matrices().into_iter().cloned());
    }
    Ok(out)
}

fn expect_n(ms: &[HermitianMatrix], n: usize, command: &str) -> Result<()> {
    if ms.len() != n {
        return Err(Error::Precondition(format!(
            "{command} takes {n} matri{}, got {}",
            if n == 1 { "x" } else { "ces" },
            ms.len()
        )));
    }
    if n == 2 {
        ms[0].check_same_dim(&ms[1])?;
    }
    Ok(())
}

fn digest(ms: &[HermitianMatrix], extra: &str) -> String {
    let mut h = Sha256::new();
    for m in ms {
        h.update(to_json(m).as_bytes());
        h.update(b"\n");
    }
    h.update(extra.as_bytes());
    hex::encode(h.finalize())
}

fn context(global: &Global, ms: &[HermitianMatrix]) -> Result<ModelContext> {
    let dim = ms.first().map_or(1, |m| m.dim());
    ModelContext::new(global.model.into(), dim)
}

fn compute(cli: &Cli, tol: &ToleranceProfile) -> Result<(String, Outcome)> {
    let global = &cli.global;
    let name = cli.command.name();
    let inputs = match &cli.command {
        Command::Abs(i)
        | Command::Meet(i)
        | Command::Join(i)
        | Command::Parts(i)
        | Command::CheckCompat(i)
        | Command::OpCheck(i)
        | Command::Cover(i)
        | Command::RangeProj(i)
        | Command::DecomposeP(i) => Some(i),
        Command::CheckOrth { inputs, .. }
        | Command::SpectralFamily { inputs, .. }
        | Command::SpectralDecompose { inputs, .. } => Some(inputs),
        Command::Verify { .. } | Command::SearchCx { .. } => None,
    };
    let ms = match inputs {
        Some(i) => load(i)?,
        None => Vec::new(),
    };
    let ctx = context(global, &ms)?;
    for m in &ms {
        ctx.check_dim(m)?;
    }

    let outcome = match &cli.command {
        Command::Abs(_) => {
            expect_n(&ms, 1, name)?;
            Outcome::matrix(&abs_value(&ms[0], tol)?)
        }
        Command::Meet(_) => {
            expect_n(&ms, 2, name)?;
            Outcome::matrix(&meet(&ms[0], &ms[1], tol)?)
        }
        Command::Join(_) => {
            expect_n(&ms, 2, name)?;
            Outcome::matrix(&join(&ms[0], &ms[1], tol)?)
        }
        Command::Parts(_) => {
            expect_n(&ms, 1, name)?;
            let (plus, minus) = pos_neg_parts(&ms[0], tol)?;
            Outcome {
                verdict: None,
                residuals: BTreeMap::new(),
                result: json!({ "plus": MatrixDoc::from_matrix(&plus), "minus": MatrixDoc::from_matrix(&minus) }),
                text: format!("{}\n{}", to_json(&plus), to_json(&minus)),
            }
        }
        Command::CheckOrth {
            kind, samples, seed, ..
        } => {
            expect_n(&ms, 2, name)?;
            let (u, v) = (&ms[0], &ms[1]);
            let verdict = match kind {
                OrthKind::Abs => is_abs_orthogonal(u, v, tol)?,
                OrthKind::P1 => is_p_orthogonal(u, v, PNorm::One, &DEFAULT_COEFFICIENTS, tol)?,
                OrthKind::Pinf => is_p_orthogonal(u, v, PNorm::Infinity, &DEFAULT_COEFFICIENTS, tol)?,
                OrthKind::AbsInf => {
                    let mode = match samples {
                        Some(samples) => InftyMode::Sampled {
                            samples: *samples,
                            seed: *seed,
                        },
                        None => InftyMode::Oracle,
                    };
                    is_abs_infty_orthogonal(u, v, mode, tol)?
                }
            };
            Outcome::verdict(&verdict)
        }
        Command::CheckCompat(_) => {
            expect_n(&ms, 2, name)?;
            Outcome::verdict(&is_absolutely_compatible(&ms[0], &ms[1], &ctx, tol)?)
        }
        Command::OpCheck(_) => {
            expect_n(&ms, 1, name)?;
            let (holds, _) = is_order_projection(&ms[0], &ctx, tol)?;
            let m = OrderProjection::measure(&ms[0], &ctx, tol)?;
            let mut residuals = BTreeMap::new();
            residuals.insert("op_residual".to_string(), m.op_residual);
            residuals.insert("idempotency_residual".to_string(), m.idempotency_residual);
            Outcome {
                verdict: Some(holds),
                result: json!({ "holds": holds, "op_residual": m.op_residual, "idempotency_residual": m.idempotency_residual }),
                text: format!(
                    "holds={holds} op_residual={:.6e} idempotency_residual={:.6e}",
                    m.op_residual, m.idempotency_residual
                ),
                residuals,
            }
        }
        Command::Cover(_) => {
            expect_n(&ms, 1, name)?;
            Outcome::matrix(&cover(&ms[0], tol)?.matrix)
        }
        Command::RangeProj(_) => {
            expect_n(&ms, 1, name)?;
            Outcome::matrix(&range_projection(&ms[0], tol)?.matrix)
        }
        Command::DecomposeP(_) => {
            expect_n(&ms, 2, name)?;
            let p = OrderProjection::new(&ms[1], &ctx, tol)?;
            let d = p_decompose(&ms[0], &p, tol)?;
            let in_ac = d.in_ac(tol);
            let mut residuals = BTreeMap::new();
            residuals.insert("membership_residual".to_string(), d.membership_residual);
            residuals.insert("threshold".to_string(), d.threshold(tol));
            Outcome {
                verdict: Some(in_ac),
                result: json!({
                    "in_ac": in_ac,
                    "c_p": MatrixDoc::from_matrix(&d.c_p),
                    "c_p_prime": MatrixDoc::from_matrix(&d.c_p_prime),
                    "membership_residual": d.membership_residual,
                }),
                text: format!(
                    "in_ac={in_ac} membership_residual={:.6e}\n{}\n{}",
                    d.membership_residual,
                    to_json(&d.c_p),
                    to_json(&d.c_p_prime)
                ),
                residuals,
            }
        }
        Command::SpectralFamily { alpha, .. } => {
            expect_n(&ms, 1, name)?;
            match alpha {
                Some(a) => Outcome::matrix(&e_alpha(&ms[0], *a, &ctx, tol)?.matrix),
                None => {
                    let f = spectral_family(&ms[0], &ctx, tol)?;
                    let entries: Vec<Value> = f
                        .breakpoints
                        .iter()
                        .zip(&f.projections)
                        .map(|(b, p)| json!({ "alpha": b, "projection": MatrixDoc::from_matrix(&p.matrix) }))
                        .collect();
                    let text = f
                        .breakpoints
                        .iter()
                        .zip(&f.projections)
                        .map(|(b, p)| format!("{b:.12e} {}", to_json(&p.matrix)))
                        .collect::<Vec<_>>()
                        .join("\n");
                    Outcome {
                        verdict: None,
                        residuals: BTreeMap::new(),
                        result: json!({ "breakpoints": f.breakpoints, "family": entries }),
                        text,
                    }
                }
            }
        }
        Command::SpectralDecompose { epsilon, .. } => {
            expect_n(&ms, 1, name)?;
            let d = spectral_decompose(&ms[0], *epsilon, &ctx, tol)?;
            let report = DecompositionReport::new(&ms[0], &d);
            let holds = d.error < *epsilon;
            let mut residuals = BTreeMap::new();
            residuals.insert("error".to_string(), d.error);
            residuals.insert("max_gap".to_string(), report.max_gap);
            residuals.insert("partition_residual".to_string(), d.partition_residual);
            let mut result = serde_json::to_value(&report).expect("report serializes");
            result["approximation"] = serde_json::to_value(MatrixDoc::from_matrix(&d.approximation)).expect("doc");
            Outcome {
                verdict: Some(holds),
                text: format!(
                    "error={:.6e} epsilon={} max_gap={:.6e} increments={}\n{}",
                    d.error,
                    epsilon,
                    report.max_gap,
                    d.increments.len(),
                    to_json(&d.approximation)
                ),
                result,
                residuals,
            }
        }
        Command::Verify {
            case,
            trials,
            seed,
            jobs,
            contexts,
        } => {
            let config = SuiteConfig {
                contexts: if contexts.is_empty() {
                    SuiteConfig::default().contexts
                } else {
                    contexts.clone()
                },
                seed: *seed,
                trials: *trials,
                jobs: *jobs,
                cases: (case != "all").then(|| vec![case.clone()]),
            };
            let report = run_suite(&config, tol)?;
            let mut residuals = BTreeMap::new();
            residuals.insert("theorem_failures".to_string(), report.theorem_failures as f64);
            residuals.insert("tolerance_failures".to_string(), report.tolerance_failures as f64);
            Outcome {
                verdict: Some(report.passed),
                text: report.render_text().trim_end().to_string(),
                result: serde_json::to_value(&report).expect("report serializes"),
                residuals,
            }
        }
        Command::SearchCx {
            property,
            trials,
            seed,
            context,
        } => {
            let report = search_counterexample(property, *trials, *seed, context, tol)?;
            let found = report.status == CaseStatus::Found;
            let mut residuals = BTreeMap::new();
            residuals.insert("worst_residual".to_string(), report.worst_residual);
            if let Some(r) = report.fixed_witness_residual {
                residuals.insert("fixed_witness_residual".to_string(), r);
            }
            let mut text = format!(
                "{} {} in {}: {} witnesses in {} trials, worst residual {:.6e}",
                status_word(report.status),
                property,
                report.context,
                report.theorem_failures,
                report.trials,
                report.worst_residual
            );
            for w in &report.witnesses {
                text.push_str(&format!(
                    "\nwitness trial={:?} seed={} claim={} residual={:.6e}",
                    w.trial, w.seed, w.claim, w.residual
                ));
            }
            Outcome {
                verdict: Some(found),
                text,
                result: serde_json::to_value(&report).expect("report serializes"),
                residuals,
            }
        }
    };
    let extra = match &cli.command {
        Command::Verify {
            case,
            trials,
            seed,
            contexts,
            ..
        } => format!("verify {case} {trials} {seed} {contexts:?}"),
        Command::SearchCx {
            property,
            trials,
            seed,
            context,
        } => format!("search-cx {property} {trials} {seed} {context}"),
        _ => String::new(),
    };
    Ok((digest(&ms, &extra), outcome))
}

fn exit_code_for(e: &Error) -> i32 {
    if e.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_USAGE
    }
}

/// Runs a parsed invocation, writing output and diagnostics; returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let start = Instant::now();
    let tol = match tolerance(&cli.global) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let (inputs_digest, outcome) = match compute(cli, &tol) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let mut timings = BTreeMap::new();
    timings.insert("wall_ms".to_string(), start.elapsed().as_secs_f64() * 1e3);
    let body = match cli.global.format {
        Format::Text => outcome.text.clone(),
        Format::Structured => {
            let env = Envelope {
                command: cli.command.name().to_string(),
                inputs_digest,
                verdict: outcome.verdict,
                residuals: outcome.residuals.clone(),
                timings,
                result: outcome.result.clone(),
            };
            serde_json::to_string_pretty(&env).expect("envelope serializes")
        }
    };
    match &cli.global.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{body}\n")) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            use std::io::Write;
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{body}");
        }
    }
    match outcome.verdict {
        Some(false) => EXIT_FALSE,
        _ => EXIT_OK,
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}
