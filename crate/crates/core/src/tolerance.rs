//! Tolerances shared by every approximate predicate in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable that overrides the default absolute tolerance.
pub const TOL_ENV_VAR: &str = "AOUS_TOL";

/// Absolute and relative tolerances used by the floating-point predicates.
///
/// Every verdict in the crate is of the form `residual <= threshold`, where
/// the threshold is derived from this profile and the magnitude of the
/// inputs (see [`ToleranceProfile::threshold`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceProfile {
    pub atol: f64,
    pub rtol: f64,
    /// Reconstruction/unitarity bound for the eigensolver.
    pub eig_tol: f64,
    /// Slack for cone membership. Looser than `atol` since `|.|` chains
    /// two eigendecompositions.
    pub psd_slack: f64,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self {
            atol: 1e-9,
            rtol: 1e-9,
            eig_tol: 1e-11,
            psd_slack: 1e-8,
        }
    }
}

impl ToleranceProfile {
    pub fn new(atol: f64, rtol: f64, eig_tol: f64, psd_slack: f64) -> Result<Self> {
        let profile = Self {
            atol,
            rtol,
            eig_tol,
            psd_slack,
        };
        profile.validate()?;
        Ok(profile)
    }

    /// Default profile with `atol` taken from `AOUS_TOL` when it is set.
    pub fn from_env() -> Result<Self> {
        let mut profile = Self::default();
        if let Ok(raw) = std::env::var(TOL_ENV_VAR) {
            let atol: f64 = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidTolerance(format!("{TOL_ENV_VAR}={raw:?} is not a number")))?;
            profile.atol = atol;
            if profile.psd_slack < atol {
                profile.psd_slack = atol;
            }
        }
        profile.validate()?;
        Ok(profile)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.atol, self.rtol, self.eig_tol, self.psd_slack];
        if all.iter().any(|t| !t.is_finite() || *t <= 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "tolerances must be finite and strictly positive: {self:?}"
            )));
        }
        if self.atol > self.psd_slack {
            return Err(Error::InvalidTolerance(format!(
                "atol ({}) must not exceed psd_slack ({})",
                self.atol, self.psd_slack
            )));
        }
        Ok(())
    }

    /// Verdict threshold for quantities of magnitude `scale`.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.atol.max(self.rtol * scale.abs())
    }

    /// Cone-membership threshold for a matrix of operator norm `scale`.
    pub fn psd_threshold(&self, scale: f64) -> f64 {
        self.psd_slack * scale.abs().max(1.0)
    }

    /// Eigenvalue cliff used by range and cover projections.
    pub fn rank_threshold(&self, lambda_max: f64) -> f64 {
        self.atol.max(self.rtol * lambda_max.abs())
    }

    /// Same profile with every tolerance multiplied by `factor`.
    pub fn scaled_by(&self, factor: f64) -> Self {
        Self {
            atol: self.atol * factor,
            rtol: self.rtol * factor,
            eig_tol: self.eig_tol * factor,
            psd_slack: self.psd_slack * factor,
        }
    }
}
