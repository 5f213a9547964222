//! Functional calculus, norms and the cone order on Hermitian matrices.

use serde::{Deserialize, Serialize};

use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::tolerance::ToleranceProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormKind {
    /// Largest absolute eigenvalue; the order unit norm for `e = I`.
    Operator,
    /// Sum of absolute eigenvalues.
    Trace,
    Frobenius,
}

/// `f(H) = U diag(f(λ)) U*`.
///
/// Fails with [`Error::Domain`] when `f` returns a non-finite value at some
/// eigenvalue.
pub fn apply_function(h: &HermitianMatrix, f: impl Fn(f64) -> f64, tol: &ToleranceProfile) -> Result<HermitianMatrix> {
    let eig = eigh(h, tol)?;
    let mut mapped = Vec::with_capacity(eig.dim());
    for &lambda in &eig.eigenvalues {
        let y = f(lambda);
        if !y.is_finite() {
            return Err(Error::Domain { eigenvalue: lambda });
        }
        mapped.push(y);
    }
    Ok(eig.reconstruct_with(&mapped))
}

pub fn norm(h: &HermitianMatrix, kind: NormKind, tol: &ToleranceProfile) -> Result<f64> {
    match kind {
        NormKind::Frobenius => Ok(h.frobenius_norm()),
        NormKind::Operator | NormKind::Trace => {
            if h.is_diagonal() {
                let d = h.diagonal();
                return Ok(match kind {
                    NormKind::Operator => d.iter().fold(0.0, |m, x| m.max(x.abs())),
                    _ => d.iter().map(|x| x.abs()).sum(),
                });
            }
            let eig = eigh(h, tol)?;
            Ok(match kind {
                NormKind::Operator => eig.eigenvalues.iter().fold(0.0, |m, x| m.max(x.abs())),
                _ => eig.eigenvalues.iter().map(|x| x.abs()).sum(),
            })
        }
    }
}

/// Operator norm under `tol`.
pub fn op_norm(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<f64> {
    norm(h, NormKind::Operator, tol)
}

pub fn min_eigenvalue(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<f64> {
    if h.is_diagonal() {
        return Ok(h.diagonal().into_iter().fold(f64::INFINITY, f64::min));
    }
    Ok(eigh(h, tol)?.eigenvalues[0])
}

/// Cone membership with the size of the violation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsdVerdict {
    pub holds: bool,
    /// `max(0, −λ_min)`.
    pub residual: f64,
}

pub fn is_psd(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<PsdVerdict> {
    let (lo, hi) = if h.is_diagonal() {
        let d = h.diagonal();
        (
            d.iter().copied().fold(f64::INFINITY, f64::min),
            d.iter().fold(0.0_f64, |m, x| m.max(x.abs())),
        )
    } else {
        let eig = eigh(h, tol)?;
        let lo = eig.eigenvalues[0];
        let hi = eig.eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        (lo, hi)
    };
    let residual = (-lo).max(0.0);
    Ok(PsdVerdict {
        holds: residual <= tol.psd_threshold(hi),
        residual,
    })
}

/// `a ≤ b` in the cone order, i.e. `b − a` is PSD.
pub fn leq(a: &HermitianMatrix, b: &HermitianMatrix, tol: &ToleranceProfile) -> Result<PsdVerdict> {
    is_psd(&b.try_sub(a)?, tol)
}

/// Positive square root of a PSD matrix; tiny negative eigenvalues within
/// the cone slack are clamped to zero.
pub fn sqrt_psd(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<HermitianMatrix> {
    let eig = eigh(h, tol)?;
    let hi = eig.eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let slack = tol.psd_threshold(hi);
    // eigenvalues at rounding level are zero; their roots would not be
    let floor = tol.eig_tol * hi;
    let mut roots = Vec::with_capacity(eig.dim());
    for &lambda in &eig.eigenvalues {
        if lambda < -slack {
            return Err(Error::Domain { eigenvalue: lambda });
        }
        roots.push(if lambda <= floor { 0.0 } else { lambda.sqrt() });
    }
    Ok(eig.reconstruct_with(&roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceProfile {
        ToleranceProfile::default()
    }

    fn swap() -> HermitianMatrix {
        HermitianMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
    }

    #[test]
    fn identity_function_returns_input() {
        let h = HermitianMatrix::from_real_rows(&[&[2.0, -1.0, 0.5], &[-1.0, 0.0, 0.3], &[0.5, 0.3, 1.0]]).unwrap();
        let out = apply_function(&h, |t| t, &tol()).unwrap();
        assert!((&out - &h).frobenius_norm() <= tol().eig_tol * h.frobenius_norm().max(1.0));
    }

    #[test]
    fn square_of_swap_is_identity() {
        let out = apply_function(&swap(), |t| t * t, &tol()).unwrap();
        assert!((&out - &HermitianMatrix::identity(2)).frobenius_norm() < 1e-14);
    }

    #[test]
    fn sqrt_of_diagonal() {
        let out = apply_function(&HermitianMatrix::diag(&[4.0, 9.0]), f64::sqrt, &tol()).unwrap();
        assert_eq!(out, HermitianMatrix::diag(&[2.0, 3.0]));
    }

    #[test]
    fn undefined_function_is_domain_error() {
        let err = apply_function(&HermitianMatrix::diag(&[-1.0, 1.0]), f64::sqrt, &tol()).unwrap_err();
        assert!(matches!(err, Error::Domain { eigenvalue } if eigenvalue == -1.0));
    }

    #[test]
    fn norms_of_named_examples() {
        let d = HermitianMatrix::diag(&[2.0, -3.0]);
        assert_eq!(norm(&d, NormKind::Operator, &tol()).unwrap(), 3.0);
        assert_eq!(norm(&d, NormKind::Trace, &tol()).unwrap(), 5.0);
        let z = HermitianMatrix::zeros(3);
        for kind in [NormKind::Operator, NormKind::Trace, NormKind::Frobenius] {
            assert_eq!(norm(&z, kind, &tol()).unwrap(), 0.0);
        }
        assert!((norm(&swap(), NormKind::Operator, &tol()).unwrap() - 1.0).abs() < 1e-15);
        assert!((norm(&swap(), NormKind::Trace, &tol()).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn psd_examples() {
        let v = is_psd(&HermitianMatrix::diag(&[1.0, 0.0]), &tol()).unwrap();
        assert!(v.holds && v.residual == 0.0);
        let v = is_psd(&HermitianMatrix::diag(&[1.0, -0.5]), &tol()).unwrap();
        assert!(!v.holds && v.residual == 0.5);
        let ones = HermitianMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        let v = is_psd(&ones, &tol()).unwrap();
        assert!(v.holds && v.residual < 1e-15);
    }

    #[test]
    fn leq_examples() {
        let t = tol();
        assert!(
            leq(&HermitianMatrix::zeros(2), &HermitianMatrix::identity(2), &t)
                .unwrap()
                .holds
        );
        assert!(
            leq(
                &HermitianMatrix::diag(&[1.0, 0.0]),
                &HermitianMatrix::diag(&[1.0, 1.0]),
                &t
            )
            .unwrap()
            .holds
        );
        let half = HermitianMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap();
        assert!(!leq(&HermitianMatrix::diag(&[1.0, 0.0]), &half, &t).unwrap().holds);
        assert!(leq(&HermitianMatrix::identity(2), &HermitianMatrix::identity(3), &t).is_err());
    }
}
