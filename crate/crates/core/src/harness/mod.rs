//! Randomized verification of the structural identities, one registered case
//! per statement, plus searches for the counterexamples that separate the
//! matrix models from the lattice model.
//!
//! A case draws an [`Instance`] from a seeded generator and evaluates a list
//! of [`Claim`]s on it. Failed claims are classified: a residual more than
//! 100 thresholds out is a `theorem` failure, anything closer is a
//! `tolerance` failure attributed to floating point.

mod cases;
mod coverage;
mod search;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::MatrixDoc;
use crate::matrix::HermitianMatrix;
use crate::models::{derive_seed, rng_from_seed, seed_for_label, Rng};
use crate::order::{ModelContext, ModelKind, OrthoVerdict};
use crate::tolerance::ToleranceProfile;

pub use cases::registry;
pub use coverage::{coverage_audit, CoverageAudit, StatementEntry, STATEMENTS};
pub use search::{search_counterexample, SEARCH_PROPERTIES};

/// Default number of trials per case and context.
pub const DEFAULT_TRIALS: usize = 100;

/// Witnesses kept per report.
pub const MAX_WITNESSES: usize = 5;

/// Matrices and scalars a case's claims are evaluated on.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub matrices: Vec<HermitianMatrix>,
    pub scalars: Vec<f64>,
}

impl Instance {
    pub fn new(matrices: Vec<HermitianMatrix>, scalars: Vec<f64>) -> Self {
        Self { matrices, scalars }
    }

    pub fn m(&self, k: usize) -> &HermitianMatrix {
        &self.matrices[k]
    }

    pub fn s(&self, k: usize) -> f64 {
        self.scalars[k]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureClass {
    Theorem,
    Tolerance,
}

/// One evaluated assertion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub label: String,
    pub holds: bool,
    pub residual: f64,
    pub threshold: f64,
    pub class: Option<FailureClass>,
    /// Whether the residual enters the case's residual quantiles.
    #[serde(skip)]
    pub tracked: bool,
}

impl Claim {
    /// `residual ≤ threshold`.
    pub fn bound(label: impl Into<String>, residual: f64, threshold: f64) -> Self {
        let holds = residual <= threshold;
        let class = (!holds).then(|| {
            if residual > 100.0 * threshold || residual.is_nan() {
                FailureClass::Theorem
            } else {
                FailureClass::Tolerance
            }
        });
        Self {
            label: label.into(),
            holds,
            residual,
            threshold,
            class,
            tracked: true,
        }
    }

    /// `residual > threshold`: the predicate is expected to fail.
    pub fn refute(label: impl Into<String>, residual: f64, threshold: f64) -> Self {
        let holds = residual > threshold;
        let class = (!holds).then(|| {
            if residual < threshold / 100.0 {
                FailureClass::Theorem
            } else {
                FailureClass::Tolerance
            }
        });
        Self {
            label: label.into(),
            holds,
            residual,
            threshold,
            class,
            tracked: false,
        }
    }

    pub fn verdict(label: impl Into<String>, v: &OrthoVerdict) -> Self {
        Self::bound(label, v.residual, v.threshold)
    }

    pub fn refuted(label: impl Into<String>, v: &OrthoVerdict) -> Self {
        Self::refute(label, v.residual, v.threshold)
    }

    /// Verdicts `(holds, residual, threshold)` that must coincide. A
    /// disagreement is tolerance-class when some residual sits within a
    /// factor 100 of its threshold.
    pub fn agree(label: impl Into<String>, verdicts: &[(bool, f64, f64)]) -> Self {
        let first = verdicts.first().is_none_or(|v| v.0);
        let holds = verdicts.iter().all(|v| v.0 == first);
        let gray = verdicts.iter().any(|&(_, r, t)| r >= t / 100.0 && r <= 100.0 * t);
        let class = (!holds).then_some(if gray {
            FailureClass::Tolerance
        } else {
            FailureClass::Theorem
        });
        let disagreement = if holds {
            0.0
        } else {
            verdicts.iter().fold(0.0_f64, |m, v| m.max(v.1))
        };
        Self {
            label: label.into(),
            holds,
            residual: disagreement,
            threshold: 0.0,
            class,
            tracked: false,
        }
    }

    /// `premise ⇒ conclusion`; vacuous when the premise fails.
    pub fn implies(label: impl Into<String>, premise: bool, residual: f64, threshold: f64) -> Self {
        if premise {
            Self::bound(label, residual, threshold)
        } else {
            Self::bound(label, 0.0, threshold)
        }
    }

    /// A verdict whose two computation routes must not disagree.
    pub fn no_anomaly(label: impl Into<String>, v: &OrthoVerdict) -> Self {
        let mut c = Self::bound(label, 0.0, 0.0);
        if v.anomaly.is_some() {
            c.holds = false;
            c.residual = v.residual;
            c.class = Some(FailureClass::Theorem);
        }
        c.tracked = false;
        c
    }
}

/// Shorthand for agreement entries.
pub fn entry(v: &OrthoVerdict) -> (bool, f64, f64) {
    (v.holds, v.residual, v.threshold)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// Every claim should hold on every trial.
    Holds,
    /// The search should find at least one theorem-class witness.
    Counterexample,
}

type Generate = fn(&mut Rng, &ModelContext) -> Result<Instance>;
type Check = fn(&Instance, &ModelContext, &ToleranceProfile) -> Result<Vec<Claim>>;

/// A registered randomized check.
pub struct TheoremCase {
    pub id: &'static str,
    pub summary: &'static str,
    pub kinds: &'static [ModelKind],
    pub min_dim: usize,
    pub generate: Generate,
    pub check: Check,
    pub expectation: fn(&ModelContext) -> Expectation,
    /// A hand-built instance evaluated before the random trials.
    pub fixed: Option<fn(&ModelContext) -> Option<Instance>>,
}

impl TheoremCase {
    pub fn supports(&self, ctx: &ModelContext) -> bool {
        self.kinds.contains(&ctx.kind) && ctx.dim >= self.min_dim
    }
}

pub fn find_case(id: &str) -> Result<&'static TheoremCase> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quantiles {
    pub p50: f64,
    pub p90: f64,
    pub p99: f64,
    pub max: f64,
}

impl Quantiles {
    pub fn of(mut values: Vec<f64>) -> Self {
        if values.is_empty() {
            return Self {
                p50: 0.0,
                p90: 0.0,
                p99: 0.0,
                max: 0.0,
            };
        }
        values.sort_by(f64::total_cmp);
        let at = |q: f64| values[((values.len() - 1) as f64 * q).round() as usize];
        Self {
            p50: at(0.5),
            p90: at(0.9),
            p99: at(0.99),
            max: *values.last().expect("nonempty"),
        }
    }
}

/// A failing trial, replayable from its matrices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// `None` for the fixed instance.
    pub trial: Option<usize>,
    pub seed: u64,
    pub claim: String,
    pub residual: f64,
    pub class: FailureClass,
    pub matrices: Vec<MatrixDoc>,
    pub scalars: Vec<f64>,
}

impl Witness {
    pub fn instance(&self) -> Result<Instance> {
        let matrices = self
            .matrices
            .iter()
            .map(MatrixDoc::to_matrix)
            .collect::<Result<Vec<_>>>()?;
        Ok(Instance::new(matrices, self.scalars.clone()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Pass,
    Fail,
    Found,
    Exhausted,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    pub case: String,
    pub context: String,
    pub expectation: Expectation,
    pub status: CaseStatus,
    pub trials: usize,
    pub failures: usize,
    pub theorem_failures: usize,
    pub tolerance_failures: usize,
    pub errors: usize,
    pub error_messages: Vec<String>,
    pub worst_residual: f64,
    pub residual_quantiles: Quantiles,
    /// Worst failing residual of the fixed instance, if the case has one.
    pub fixed_witness_residual: Option<f64>,
    pub witnesses: Vec<Witness>,
    pub wall_time_ms: f64,
}

impl TrialReport {
    /// Failed with theorem-class failures, errors, or an exhausted search.
    pub fn unexpected(&self) -> bool {
        matches!(self.status, CaseStatus::Fail | CaseStatus::Exhausted)
    }
}

struct TrialOutcome {
    worst_tracked: f64,
    failed: Option<(FailureClass, Claim)>,
}

fn evaluate(claims: &[Claim]) -> TrialOutcome {
    let worst_tracked = claims
        .iter()
        .filter(|c| c.tracked)
        .fold(0.0_f64, |m, c| m.max(c.residual));
    let mut failed: Option<(FailureClass, Claim)> = None;
    for c in claims.iter().filter(|c| !c.holds) {
        let class = c.class.unwrap_or(FailureClass::Theorem);
        let better = match &failed {
            None => true,
            Some((FailureClass::Tolerance, _)) => class == FailureClass::Theorem,
            Some((FailureClass::Theorem, _)) => false,
        };
        if better {
            failed = Some((class, c.clone()));
        }
    }
    TrialOutcome { worst_tracked, failed }
}

fn witness_of(trial: Option<usize>, seed: u64, instance: &Instance, class: FailureClass, claim: &Claim) -> Witness {
    Witness {
        trial,
        seed,
        claim: claim.label.clone(),
        residual: claim.residual,
        class,
        matrices: instance.matrices.iter().map(MatrixDoc::from_matrix).collect(),
        scalars: instance.scalars.clone(),
    }
}

/// Seed of trial `trial` of case `id` in `ctx`.
pub fn trial_seed(seed: u64, id: &str, ctx: &ModelContext, trial: usize) -> u64 {
    derive_seed(seed_for_label(seed, &format!("{id}@{}", ctx.label())), trial as u64)
}

/// Runs `trials` seeded trials of case `id` in `ctx`.
pub fn run_case(id: &str, trials: usize, seed: u64, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<TrialReport> {
    let case = find_case(id)?;
    if !case.supports(ctx) {
        return Err(Error::Precondition(format!("case {id} does not support context {ctx}")));
    }
    let start = Instant::now();
    let expectation = (case.expectation)(ctx);
    let mut residuals = Vec::with_capacity(trials);
    let mut witnesses = Vec::new();
    let (mut failures, mut theorem, mut tolerance, mut errors) = (0, 0, 0, 0);
    let mut error_messages = Vec::new();
    let mut fixed_witness_residual = None;

    let mut record =
        |trial: Option<usize>, seed: u64, instance: &Instance, outcome: TrialOutcome, residuals: &mut Vec<f64>| {
            residuals.push(outcome.worst_tracked);
            if let Some((class, claim)) = outcome.failed {
                failures += 1;
                match class {
                    FailureClass::Theorem => theorem += 1,
                    FailureClass::Tolerance => tolerance += 1,
                }
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(witness_of(trial, seed, instance, class, &claim));
                }
                if trial.is_none() {
                    fixed_witness_residual = Some(claim.residual);
                }
            }
        };

    if let Some(fixed) = case.fixed.and_then(|f| f(ctx)) {
        let claims = (case.check)(&fixed, ctx, tol)?;
        record(None, seed, &fixed, evaluate(&claims), &mut residuals);
    }
    for trial in 0..trials {
        let s = trial_seed(seed, id, ctx, trial);
        let mut rng = rng_from_seed(s);
        let result = (case.generate)(&mut rng, ctx).and_then(|inst| {
            let claims = (case.check)(&inst, ctx, tol)?;
            Ok((inst, claims))
        });
        match result {
            Ok((inst, claims)) => record(Some(trial), s, &inst, evaluate(&claims), &mut residuals),
            Err(e) => {
                errors += 1;
                if error_messages.len() < 3 {
                    error_messages.push(format!("trial {trial}: {e}"));
                }
            }
        }
    }

    let status = match expectation {
        Expectation::Holds if theorem == 0 && errors == 0 => CaseStatus::Pass,
        Expectation::Holds => CaseStatus::Fail,
        Expectation::Counterexample if theorem > 0 => CaseStatus::Found,
        Expectation::Counterexample => CaseStatus::Exhausted,
    };
    let quantiles = Quantiles::of(residuals);
    Ok(TrialReport {
        case: id.to_string(),
        context: ctx.label(),
        expectation,
        status,
        trials,
        failures,
        theorem_failures: theorem,
        tolerance_failures: tolerance,
        errors,
        error_messages,
        worst_residual: quantiles.max,
        residual_quantiles: quantiles,
        fixed_witness_residual,
        witnesses,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Re-evaluates a witness; returns the residual of its failing claim.
pub fn replay(case_id: &str, witness: &Witness, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<f64> {
    let case = find_case(case_id)?;
    let instance = witness.instance()?;
    let claims = (case.check)(&instance, ctx, tol)?;
    claims
        .into_iter()
        .find(|c| c.label == witness.claim)
        .map(|c| c.residual)
        .ok_or_else(|| Error::Precondition(format!("claim {:?} not produced on replay", witness.claim)))
}

/// Contexts of the default suite.
pub fn default_contexts() -> Vec<ModelContext> {
    vec![
        ModelContext::matrix_infty(2),
        ModelContext::matrix_infty(3),
        ModelContext::matrix_infty(4),
        ModelContext::diagonal_lattice(4),
        ModelContext::matrix_trace1(3),
    ]
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub contexts: Vec<ModelContext>,
    pub seed: u64,
    pub trials: usize,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
    /// Restricts the suite to these case ids.
    pub cases: Option<Vec<String>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            contexts: default_contexts(),
            seed: 0,
            trials: DEFAULT_TRIALS,
            jobs: 0,
            cases: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub tolerance: ToleranceProfile,
    pub contexts: Vec<String>,
    pub reports: Vec<TrialReport>,
    pub theorem_failures: usize,
    pub tolerance_failures: usize,
    pub errors: usize,
    pub unexpected: Vec<String>,
    pub passed: bool,
    pub coverage: CoverageAudit,
    pub wall_time_ms: f64,
}

impl SuiteReport {
    /// The report as JSON with every wall time zeroed, for determinism checks.
    pub fn fingerprint(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_ms = 0.0;
        for r in &mut copy.reports {
            r.wall_time_ms = 0.0;
        }
        serde_json::to_string(&copy).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&format!(
                "{:<10} {:<24} {:<20} trials={:<4} failures={:<3} theorem={:<3} tolerance={:<3} p50={:.2e} p99={:.2e} max={:.2e} {:.1}ms\n",
                status_word(r.status),
                r.case,
                r.context,
                r.trials,
                r.failures,
                r.theorem_failures,
                r.tolerance_failures,
                r.residual_quantiles.p50,
                r.residual_quantiles.p99,
                r.residual_quantiles.max,
                r.wall_time_ms
            ));
        }
        out.push_str(&format!(
            "cases={} theorem_failures={} tolerance_failures={} errors={} coverage={}/{} ({} skipped) passed={} wall={:.0}ms\n",
            self.reports.len(),
            self.theorem_failures,
            self.tolerance_failures,
            self.errors,
            self.coverage.covered,
            self.coverage.statements,
            self.coverage.skipped,
            self.passed,
            self.wall_time_ms
        ));
        for u in &self.unexpected {
            out.push_str(&format!("unexpected: {u}\n"));
        }
        out
    }
}

pub fn status_word(s: CaseStatus) -> &'static str {
    match s {
        CaseStatus::Pass => "pass",
        CaseStatus::Fail => "FAIL",
        CaseStatus::Found => "found",
        CaseStatus::Exhausted => "EXHAUSTED",
    }
}

/// Runs every registered case in every supporting context.
pub fn run_suite(config: &SuiteConfig, tol: &ToleranceProfile) -> Result<SuiteReport> {
    if let Some(ids) = &config.cases {
        for id in ids {
            find_case(id)?;
        }
    }
    let start = Instant::now();
    let mut jobs: Vec<(&'static TheoremCase, &ModelContext)> = Vec::new();
    for case in registry() {
        if let Some(ids) = &config.cases {
            if !ids.iter().any(|i| i == case.id) {
                continue;
            }
        }
        for ctx in &config.contexts {
            if case.supports(ctx) {
                jobs.push((case, ctx));
            }
        }
    }
    let run = || -> Result<Vec<TrialReport>> {
        jobs.par_iter()
            .map(|(case, ctx)| run_case(case.id, config.trials, config.seed, ctx, tol))
            .collect()
    };
    let reports = if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run)?
    } else {
        run()?
    };
    let unexpected: Vec<String> = reports
        .iter()
        .filter(|r| r.unexpected())
        .map(|r| format!("{} in {} ({})", r.case, r.context, status_word(r.status)))
        .collect();
    let coverage = coverage_audit();
    Ok(SuiteReport {
        seed: config.seed,
        trials: config.trials,
        tolerance: *tol,
        contexts: config.contexts.iter().map(|c| c.label()).collect(),
        theorem_failures: reports
            .iter()
            .filter(|r| r.expectation == Expectation::Holds)
            .map(|r| r.theorem_failures)
            .sum(),
        tolerance_failures: reports.iter().map(|r| r.tolerance_failures).sum(),
        errors: reports.iter().map(|r| r.errors).sum(),
        passed: unexpected.is_empty() && coverage.complete(),
        unexpected,
        reports,
        coverage,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
