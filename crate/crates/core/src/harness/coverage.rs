//! Statement inventory: every implementable statement maps to registered
//! cases or to an explicit reason it is not run.

use serde::Serialize;

use super::registry;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct StatementEntry {
    pub statement: &'static str,
    pub cases: &'static [&'static str],
    pub skip: Option<&'static str>,
}

const fn by(statement: &'static str, cases: &'static [&'static str]) -> StatementEntry {
    StatementEntry {
        statement,
        cases,
        skip: None,
    }
}

const fn skip(statement: &'static str, reason: &'static str) -> StatementEntry {
    StatementEntry {
        statement,
        cases: &[],
        skip: Some(reason),
    }
}

pub static STATEMENTS: &[StatementEntry] = &[
    by("thm-001", &["thm-001"]),
    skip(
        "thm-001.weak-star",
        "bidual and weak* lower semicontinuity arguments are vacuous in finite dimensions",
    ),
    by("prop-8", &["prop-8"]),
    by("thm-1", &["thm-1"]),
    by("def-2", &["def-2"]),
    by("thm-3", &["thm-3-diagonal", "cx-triangle", "cx-join-assoc"]),
    by("rem-4", &["rem-4"]),
    skip(
        "rem-4.5",
        "an open question rather than a statement; probed empirically by the join and triangle searches",
    ),
    by("def-p-orth", &["def-p-orth"]),
    by("prop-6", &["prop-6"]),
    by("rem-7", &["rem-7"]),
    by("prop-11", &["prop-11"]),
    by("cor-11", &["cor-11"]),
    by("prop-12", &["prop-12"]),
    by("cor-12", &["cor-12"]),
    by("prop-13", &["prop-13"]),
    by("prop-14", &["prop-14"]),
    by("prop-15", &["prop-15"]),
    by("prop-16", &["prop-16"]),
    by("prop-17", &["prop-17"]),
    by("rem-17a", &["rem-17a", "cx-noncommuting-compat"]),
    by("thm-18", &["thm-18"]),
    skip(
        "thm-18.2",
        "extreme points of [0, e] are tested through the idempotency oracle",
    ),
    skip("prop-18a", "extreme-point direction replaced by the idempotency oracle"),
    by("prop-19", &["prop-19"]),
    skip(
        "rem-20",
        "automatic in the matrix models: every order projection is a projection",
    ),
    by("prop-21", &["prop-21"]),
    by("prop-22", &["prop-22"]),
    by("thm-23", &["thm-23"]),
    by("cor-24", &["cor-24"]),
    by("thm-25", &["thm-25"]),
    by("prop-26", &["prop-26"]),
    by("prop-27", &["prop-27"]),
    by("cor-28", &["cor-28"]),
    by("prop-29", &["prop-29"]),
    by("thm-30", &["thm-30"]),
    by("thm-31", &["thm-31"]),
    by("rem-32", &["rem-32"]),
    by("prop-33", &["prop-33"]),
    by("thm-34", &["thm-34"]),
    by("cor-35", &["cor-35"]),
    by("s-set", &["s-set"]),
    by("def-cp", &["def-cp"]),
    by("prop-43", &["prop-43"]),
    by("cor-45", &["cor-45"]),
    by("thm-46", &["thm-46"]),
    by("rem-47", &["rem-47"]),
    by("cover-def", &["cover-def"]),
    by("lattice-op", &["lattice-op"]),
    by("rem-48", &["rem-48"]),
    by("prop-49", &["prop-49"]),
    by("thm-50", &["thm-50"]),
    by("prop-51", &["prop-51"]),
    by("prop-52", &["prop-52"]),
    by("thm-53", &["thm-53", "spectral-oracle"]),
    by("thm-54", &["thm-54"]),
];

#[derive(Debug, Clone, Serialize)]
pub struct CoverageAudit {
    pub statements: usize,
    pub covered: usize,
    pub skipped: usize,
    /// Statements with neither a known case nor a skip reason.
    pub missing: Vec<String>,
    /// Registered cases no statement refers to.
    pub unreferenced: Vec<String>,
}

impl CoverageAudit {
    pub fn complete(&self) -> bool {
        self.missing.is_empty()
    }
}

pub fn coverage_audit() -> CoverageAudit {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let mut covered = 0;
    let mut skipped = 0;
    let mut missing = Vec::new();
    for s in STATEMENTS {
        if s.skip.is_some() && s.cases.is_empty() {
            skipped += 1;
        } else if !s.cases.is_empty() && s.cases.iter().all(|c| ids.contains(c)) {
            covered += 1;
        } else {
            missing.push(s.statement.to_string());
        }
    }
    let unreferenced = ids
        .iter()
        .filter(|id| !STATEMENTS.iter().any(|s| s.cases.contains(id)))
        .map(|id| id.to_string())
        .collect();
    CoverageAudit {
        statements: STATEMENTS.len(),
        covered,
        skipped,
        missing,
        unreferenced,
    }
}
