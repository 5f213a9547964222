//! Counterexample searches for properties that fail in the matrix models.

use super::{run_case, CaseStatus, TrialReport};
use crate::error::{Error, Result};
use crate::order::ModelContext;
use crate::tolerance::ToleranceProfile;

/// Searchable properties and the case each runs.
pub const SEARCH_PROPERTIES: &[(&str, &str)] = &[
    ("triangle-inequality", "cx-triangle"),
    ("join-associativity", "cx-join-assoc"),
    ("noncommuting-compat", "cx-noncommuting-compat"),
];

/// Tests the fixed witness, then `trials` random instances. The status is
/// `Found` when any theorem-class violation turned up, else `Exhausted`.
pub fn search_counterexample(
    property: &str,
    trials: usize,
    seed: u64,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<TrialReport> {
    let case = SEARCH_PROPERTIES
        .iter()
        .find(|(p, _)| *p == property)
        .map(|(_, c)| *c)
        .ok_or_else(|| Error::UnknownProperty(property.to_string()))?;
    if ctx.dim < 2 {
        return Err(Error::Precondition(format!(
            "search needs dimension ≥ 2, got {}",
            ctx.dim
        )));
    }
    let mut report = run_case(case, trials, seed, ctx, tol)?;
    report.status = if report.theorem_failures > 0 {
        CaseStatus::Found
    } else {
        CaseStatus::Exhausted
    };
    Ok(report)
}
