//! The `|·|`, meet and join calculus and the orthogonality and compatibility
//! predicates built on it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::calculus::{apply_function, is_psd, norm, op_norm, NormKind};
use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::models::{random_unit_interval, random_unitary, rng_from_seed};
use crate::tolerance::ToleranceProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    /// `M_n(C)` Hermitian part with the operator (order unit) norm.
    MatrixInfty,
    /// `M_n(C)` Hermitian part with the trace norm.
    MatrixTrace1,
    /// Real diagonal matrices: the commutative lattice model.
    DiagonalLattice,
}

impl ModelKind {
    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::MatrixInfty => "matrix-infty",
            ModelKind::MatrixTrace1 => "matrix-trace1",
            ModelKind::DiagonalLattice => "diagonal-lattice",
        }
    }
}

/// A finite-dimensional model `(V, e)`.
/// Serialized as its label, `kind:dim`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ModelContext {
    pub kind: ModelKind,
    pub dim: usize,
    pub unit: HermitianMatrix,
}

impl ModelContext {
    pub fn new(kind: ModelKind, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self {
            kind,
            dim,
            unit: HermitianMatrix::identity(dim),
        })
    }

    pub fn matrix_infty(dim: usize) -> Self {
        Self::new(ModelKind::MatrixInfty, dim).expect("positive dimension")
    }

    pub fn matrix_trace1(dim: usize) -> Self {
        Self::new(ModelKind::MatrixTrace1, dim).expect("positive dimension")
    }

    pub fn diagonal_lattice(dim: usize) -> Self {
        Self::new(ModelKind::DiagonalLattice, dim).expect("positive dimension")
    }

    /// Context matching the dimension of `h`, matrix model with operator norm.
    pub fn for_matrix(h: &HermitianMatrix) -> Self {
        Self::matrix_infty(h.dim())
    }

    pub fn is_diagonal(&self) -> bool {
        self.kind == ModelKind::DiagonalLattice
    }

    /// The norm of the model: trace norm for `matrix-trace1`, otherwise the
    /// order unit norm.
    pub fn norm_kind(&self) -> NormKind {
        match self.kind {
            ModelKind::MatrixTrace1 => NormKind::Trace,
            _ => NormKind::Operator,
        }
    }

    pub fn check_dim(&self, h: &HermitianMatrix) -> Result<()> {
        if h.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: h.dim(),
            });
        }
        Ok(())
    }

    /// `e − h`.
    pub fn complement(&self, h: &HermitianMatrix) -> HermitianMatrix {
        &self.unit - h
    }

    pub fn label(&self) -> String {
        format!("{}:{}", self.kind.name(), self.dim)
    }
}

impl fmt::Display for ModelContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl From<ModelContext> for String {
    fn from(ctx: ModelContext) -> String {
        ctx.label()
    }
}

impl TryFrom<String> for ModelContext {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for ModelContext {
    type Err = Error;

    /// `kind:dim`, e.g. `matrix-infty:4` or `diagonal-lattice:4`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, dim) = s
            .split_once(':')
            .ok_or_else(|| Error::Precondition(format!("context must be kind:dim, got {s:?}")))?;
        let dim: usize = dim
            .parse()
            .map_err(|_| Error::Precondition(format!("bad context dimension {dim:?}")))?;
        let kind = match kind {
            "matrix-infty" => ModelKind::MatrixInfty,
            "matrix-trace1" => ModelKind::MatrixTrace1,
            "diagonal-lattice" | "diagonal" => ModelKind::DiagonalLattice,
            other => return Err(Error::Precondition(format!("unknown context kind {other:?}"))),
        };
        Self::new(kind, dim)
    }
}

/// Verdict of an approximate predicate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthoVerdict {
    pub holds: bool,
    pub residual: f64,
    pub threshold: f64,
    /// Falsifying sub-elements found by a sampled check.
    pub witness: Vec<HermitianMatrix>,
    /// Set when two routes to the same verdict disagree.
    pub anomaly: Option<String>,
}

impl OrthoVerdict {
    pub fn new(residual: f64, threshold: f64) -> Self {
        Self {
            holds: residual <= threshold,
            residual,
            threshold,
            witness: Vec::new(),
            anomaly: None,
        }
    }

    /// A failed precondition reported as a false verdict.
    pub fn violated(residual: f64, threshold: f64) -> Self {
        Self {
            holds: false,
            residual,
            threshold,
            witness: Vec::new(),
            anomaly: None,
        }
    }

    pub fn trivial() -> Self {
        Self::new(0.0, 0.0)
    }
}

/// `|a| = (a²)^{1/2}`.
pub fn abs_value(a: &HermitianMatrix, tol: &ToleranceProfile) -> Result<HermitianMatrix> {
    apply_function(a, f64::abs, tol)
}

/// `(v⁺, v⁻)` with `v = v⁺ − v⁻`, `|v| = v⁺ + v⁻`.
pub fn pos_neg_parts(v: &HermitianMatrix, tol: &ToleranceProfile) -> Result<(HermitianMatrix, HermitianMatrix)> {
    let eig = eigh(v, tol)?;
    let plus: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0)).collect();
    let minus: Vec<f64> = eig.eigenvalues.iter().map(|&l| (-l).max(0.0)).collect();
    Ok((eig.reconstruct_with(&plus), eig.reconstruct_with(&minus)))
}

/// `v ∧̇ w = ½(v + w − |v − w|)`.
pub fn meet(v: &HermitianMatrix, w: &HermitianMatrix, tol: &ToleranceProfile) -> Result<HermitianMatrix> {
    let d = abs_value(&v.try_sub(w)?, tol)?;
    Ok((&(v + w) - &d).scale(0.5))
}

/// `v ∨̇ w = ½(v + w + |v − w|)`.
pub fn join(v: &HermitianMatrix, w: &HermitianMatrix, tol: &ToleranceProfile) -> Result<HermitianMatrix> {
    let d = abs_value(&v.try_sub(w)?, tol)?;
    Ok((&(v + w) + &d).scale(0.5))
}

/// Largest cone violation `max(0, −λ_min)` over `hs`, with its threshold.
pub fn cone_residual(hs: &[&HermitianMatrix], tol: &ToleranceProfile) -> Result<(f64, f64)> {
    let mut residual: f64 = 0.0;
    let mut threshold = f64::INFINITY;
    for h in hs {
        let v = is_psd(h, tol)?;
        residual = residual.max(v.residual);
        threshold = threshold.min(tol.psd_threshold(op_norm(h, tol)?));
    }
    Ok((residual, threshold))
}

/// Distance of `h` outside `[0, e]`: `max(0, −λ_min, λ_max − 1)`.
pub fn band_residual(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<f64> {
    let eig = eigh(h, tol)?;
    let lo = eig.eigenvalues[0];
    let hi = *eig.eigenvalues.last().expect("nonempty");
    Ok((-lo).max(hi - 1.0).max(0.0))
}

fn opn(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<f64> {
    op_norm(h, tol)
}

/// `u ⊥ v`: both positive and `|u − v| = u + v`.
pub fn is_abs_orthogonal(u: &HermitianMatrix, v: &HermitianMatrix, tol: &ToleranceProfile) -> Result<OrthoVerdict> {
    u.check_same_dim(v)?;
    let (cone, cone_thr) = cone_residual(&[u, v], tol)?;
    if cone > cone_thr {
        return Ok(OrthoVerdict::violated(cone, cone_thr));
    }
    let sum = u + v;
    let d = abs_value(&(u - v), tol)?;
    let residual = opn(&(&d - &sum), tol)?;
    let scale = opn(u, tol)?.max(opn(v, tol)?);
    Ok(OrthoVerdict::new(residual, tol.threshold(scale)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PNorm {
    One,
    Infinity,
}

impl PNorm {
    pub fn norm_kind(&self) -> NormKind {
        match self {
            PNorm::One => NormKind::Trace,
            PNorm::Infinity => NormKind::Operator,
        }
    }
}

/// Coefficients `(α, β)` tried by [`is_p_orthogonal`]; one pair flips sign
/// because positive combinations are always additive under the trace norm.
pub const DEFAULT_COEFFICIENTS: [(f64, f64); 4] = [(1.0, 1.0), (1.0, -1.0), (2.0, 1.0), (1.0, -3.0)];

/// `u ⊥_p v` over a finite coefficient set.
pub fn is_p_orthogonal(
    u: &HermitianMatrix,
    v: &HermitianMatrix,
    p: PNorm,
    coefficients: &[(f64, f64)],
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    u.check_same_dim(v)?;
    let kind = p.norm_kind();
    let nu = norm(u, kind, tol)?;
    let nv = norm(v, kind, tol)?;
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroInput("p-orthogonality needs nonzero elements"));
    }
    let (cone, cone_thr) = cone_residual(&[u, v], tol)?;
    if cone > cone_thr {
        return Ok(OrthoVerdict::violated(cone, cone_thr));
    }
    let mut residual: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for &(alpha, beta) in coefficients {
        let lhs = norm(&(&u.scale(alpha) + &v.scale(beta)), kind, tol)?;
        let (a, b) = (alpha.abs() * nu, beta.abs() * nv);
        let rhs = match p {
            PNorm::One => a + b,
            PNorm::Infinity => a.max(b),
        };
        residual = residual.max((lhs - rhs).abs());
        scale = scale.max(rhs);
    }
    Ok(OrthoVerdict::new(residual, tol.threshold(scale)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum InftyMode {
    /// Product test `‖uv‖ ≤ tol·‖u‖‖v‖`.
    Oracle,
    /// Falsification over sub-elements `0 < c ≤ u`, `0 < d ≤ v`.
    Sampled { samples: usize, seed: u64 },
}

/// Absolute ∞-orthogonality.
///
/// The sampled mode tries every pair of rank-one spectral pieces of `u` and
/// `v` (for those `‖c/‖c‖ + d/‖d‖‖ − 1 = |⟨x, y⟩|`) and then `samples` random
/// pairs `c = u^{1/2} K u^{1/2}` with `0 ≤ K ≤ e`. The first falsifying pair
/// is returned as the witness.
pub fn is_abs_infty_orthogonal(
    u: &HermitianMatrix,
    v: &HermitianMatrix,
    mode: InftyMode,
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    u.check_same_dim(v)?;
    let nu = opn(u, tol)?;
    let nv = opn(v, tol)?;
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroInput(
            "absolute infinity-orthogonality needs nonzero elements",
        ));
    }
    let (cone, cone_thr) = cone_residual(&[u, v], tol)?;
    if cone > cone_thr {
        return Ok(OrthoVerdict::violated(cone, cone_thr));
    }
    let threshold = tol.threshold(1.0);
    match mode {
        InftyMode::Oracle => {
            let residual = u.matmul(v).operator_norm()? / (nu * nv);
            Ok(OrthoVerdict::new(residual, threshold))
        }
        InftyMode::Sampled { samples, seed } => sampled_infty(u, v, samples, seed, threshold, tol),
    }
}

fn sampled_infty(
    u: &HermitianMatrix,
    v: &HermitianMatrix,
    samples: usize,
    seed: u64,
    threshold: f64,
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    let n = u.dim();
    let eu = eigh(u, tol)?;
    let ev = eigh(v, tol)?;
    let pieces = |e: &crate::eigen::EigenDecomposition| -> Vec<usize> {
        let top = e.eigenvalues.last().copied().unwrap_or(0.0);
        let cliff = tol.rank_threshold(top);
        (0..e.dim()).filter(|&k| e.eigenvalues[k] > cliff).collect()
    };
    let (pu, pv) = (pieces(&eu), pieces(&ev));
    let mut worst: f64 = 0.0;
    for &i in &pu {
        let x = eu.basis.column(i);
        for &j in &pv {
            let y = ev.basis.column(j);
            let overlap: num_complex::Complex64 = x.iter().zip(&y).map(|(a, b)| a.conj() * b).sum();
            let residual = overlap.norm();
            if residual > threshold {
                let c = piece(&eu, i);
                let d = piece(&ev, j);
                let mut verdict = OrthoVerdict::new(residual, threshold);
                verdict.witness = vec![c, d];
                return Ok(verdict);
            }
            worst = worst.max(residual);
        }
    }

    let root = |e: &crate::eigen::EigenDecomposition| -> HermitianMatrix {
        let floor = tol.eig_tol * e.eigenvalues.last().copied().unwrap_or(0.0).abs();
        let r: Vec<f64> = e
            .eigenvalues
            .iter()
            .map(|&l| if l <= floor { 0.0 } else { l.sqrt() })
            .collect();
        e.reconstruct_with(&r)
    };
    let (ru, rv) = (root(&eu), root(&ev));
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let ku_basis = random_unitary(&mut rng, n);
        let ku = random_unit_interval(&mut rng, &ku_basis);
        let kv_basis = random_unitary(&mut rng, n);
        let kv = random_unit_interval(&mut rng, &kv_basis);
        let c = ku.conjugate_by(ru.as_dense());
        let d = kv.conjugate_by(rv.as_dense());
        let (nc, nd) = (opn(&c, tol)?, opn(&d, tol)?);
        if nc <= tol.atol || nd <= tol.atol {
            continue;
        }
        let residual = opn(&(&c.scale(1.0 / nc) + &d.scale(1.0 / nd)), tol)? - 1.0;
        if residual > threshold {
            let mut verdict = OrthoVerdict::new(residual, threshold);
            verdict.witness = vec![c, d];
            return Ok(verdict);
        }
        worst = worst.max(residual);
    }
    Ok(OrthoVerdict::new(worst, threshold))
}

fn piece(e: &crate::eigen::EigenDecomposition, k: usize) -> HermitianMatrix {
    let values: Vec<f64> = (0..e.dim())
        .map(|i| if i == k { e.eigenvalues[k] } else { 0.0 })
        .collect();
    e.reconstruct_with(&values)
}

/// Absolute compatibility `|u − v| + |u + v − e| = e` for `u, v ∈ [0, e]`.
///
/// The residual is cross-checked against `u ∧̇ v + u ∧̇ (e − v) = u`, whose
/// residual is exactly half as large in exact arithmetic.
pub fn is_absolutely_compatible(
    u: &HermitianMatrix,
    v: &HermitianMatrix,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    ctx.check_dim(u)?;
    ctx.check_dim(v)?;
    let band = band_residual(u, tol)?.max(band_residual(v, tol)?);
    let band_thr = tol.psd_threshold(1.0);
    if band > band_thr {
        return Ok(OrthoVerdict::violated(band, band_thr));
    }
    let e = &ctx.unit;
    let lhs = &abs_value(&(u - v), tol)? + &abs_value(&(&(u + v) - e), tol)?;
    let residual = opn(&(&lhs - e), tol)?;
    let mut verdict = OrthoVerdict::new(residual, tol.threshold(1.0));

    let split = &meet(u, v, tol)? + &meet(u, &ctx.complement(v), tol)?;
    let half = opn(&(&split - u), tol)?;
    if (2.0 * half - residual).abs() > 10.0 * verdict.threshold {
        verdict.anomaly = Some(format!(
            "meet-split residual {half:.3e} is not half the compatibility residual {residual:.3e}"
        ));
    }
    Ok(verdict)
}

/// Outcome of comparing `a ∘ b` with `α (a ∧̇ b)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductCheck {
    /// `max(‖a‖, ‖b‖)`.
    pub alpha: f64,
    /// Compatibility of `a/α` and `b/α`.
    pub compatibility: OrthoVerdict,
    /// `‖a ∘ b − α (a ∧̇ b)‖`.
    pub product_residual: f64,
    pub product_threshold: f64,
    pub product_holds: bool,
}

impl ProductCheck {
    pub fn agree(&self) -> bool {
        self.compatibility.holds == self.product_holds
    }

    pub fn verdict(&self) -> OrthoVerdict {
        let mut v = OrthoVerdict {
            holds: self.compatibility.holds && self.product_holds,
            residual: self
                .compatibility
                .residual
                .max(self.product_residual / self.alpha.max(1.0).powi(2)),
            threshold: self.compatibility.threshold,
            witness: Vec::new(),
            anomaly: self.compatibility.anomaly.clone(),
        };
        if !self.agree() {
            v.anomaly = Some(format!(
                "compatibility says {} (residual {:.3e}) but the product identity says {} (residual {:.3e})",
                self.compatibility.holds, self.compatibility.residual, self.product_holds, self.product_residual
            ));
        }
        v
    }
}

/// Symmetrized product against the normalized meet, for positive `a, b`.
pub fn symmetrized_product_check(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<ProductCheck> {
    ctx.check_dim(a)?;
    ctx.check_dim(b)?;
    let (cone, cone_thr) = cone_residual(&[a, b], tol)?;
    let alpha = opn(a, tol)?.max(opn(b, tol)?);
    if cone > cone_thr {
        return Ok(ProductCheck {
            alpha,
            compatibility: OrthoVerdict::violated(cone, cone_thr),
            product_residual: f64::NAN,
            product_threshold: 0.0,
            product_holds: false,
        });
    }
    if alpha == 0.0 || opn(a, tol)? == 0.0 || opn(b, tol)? == 0.0 {
        return Ok(ProductCheck {
            alpha,
            compatibility: OrthoVerdict::trivial(),
            product_residual: 0.0,
            product_threshold: 0.0,
            product_holds: true,
        });
    }
    let (an, bn) = (a.scale(1.0 / alpha), b.scale(1.0 / alpha));
    let compatibility = is_absolutely_compatible(&an, &bn, ctx, tol)?;
    let target = meet(&an, &bn, tol)?.scale(alpha * alpha);
    let product_residual = opn(&(&a.jordan(b) - &target), tol)?;
    let product_threshold = tol.threshold(alpha * alpha);
    Ok(ProductCheck {
        alpha,
        compatibility,
        product_residual,
        product_threshold,
        product_holds: product_residual <= product_threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceProfile {
        ToleranceProfile::default()
    }

    fn rows(r: &[&[f64]]) -> HermitianMatrix {
        HermitianMatrix::from_real_rows(r).unwrap()
    }

    fn close(a: &HermitianMatrix, b: &HermitianMatrix, eps: f64) -> bool {
        (a - b).frobenius_norm() <= eps
    }

    fn half_ones() -> HermitianMatrix {
        rows(&[&[0.5, 0.5], &[0.5, 0.5]])
    }

    #[test]
    fn abs_value_examples() {
        let t = tol();
        assert_eq!(
            abs_value(&HermitianMatrix::diag(&[2.0, -3.0]), &t).unwrap(),
            HermitianMatrix::diag(&[2.0, 3.0])
        );
        let p = half_ones();
        assert!(close(&abs_value(&p, &t).unwrap(), &p, 1e-14));
        let a = rows(&[&[0.0, 2.0], &[2.0, 0.0]]);
        assert!(close(
            &abs_value(&a, &t).unwrap(),
            &HermitianMatrix::identity(2).scale(2.0),
            1e-14
        ));
    }

    #[test]
    fn pos_neg_examples() {
        let t = tol();
        let (p, m) = pos_neg_parts(&HermitianMatrix::diag(&[1.0, -2.0]), &t).unwrap();
        assert_eq!(
            (p, m),
            (HermitianMatrix::diag(&[1.0, 0.0]), HermitianMatrix::diag(&[0.0, 2.0]))
        );
        let (p, m) = pos_neg_parts(&rows(&[&[0.0, 1.0], &[1.0, 0.0]]), &t).unwrap();
        assert!(close(&p, &half_ones(), 1e-14));
        assert!(close(&m, &rows(&[&[0.5, -0.5], &[-0.5, 0.5]]), 1e-14));
        let psd = rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let (p, m) = pos_neg_parts(&psd, &t).unwrap();
        assert!(close(&p, &psd, 1e-14) && m.frobenius_norm() < 1e-14);
    }

    #[test]
    fn meet_examples() {
        let t = tol();
        let v = rows(&[&[1.0, 0.3], &[0.3, -2.0]]);
        assert!(close(&meet(&v, &v, &t).unwrap(), &v, 1e-14));
        assert_eq!(
            meet(
                &HermitianMatrix::diag(&[1.0, 3.0]),
                &HermitianMatrix::diag(&[2.0, 2.0]),
                &t
            )
            .unwrap(),
            HermitianMatrix::diag(&[1.0, 2.0])
        );
        let p = half_ones();
        let q = HermitianMatrix::diag(&[1.0, 0.0]);
        let m = meet(&p, &q, &t).unwrap();
        let expect = &(&p + &q).scale(0.5) - &HermitianMatrix::identity(2).scale(1.0 / (2.0 * 2f64.sqrt()));
        assert!(close(&m, &expect, 1e-14));
        assert!(!is_psd(&m, &t).unwrap().holds);
        let j = join(&p, &q, &t).unwrap();
        assert!(close(&(&j + &m), &(&p + &q), 1e-14));
    }

    #[test]
    fn abs_orthogonal_examples() {
        let t = tol();
        let (e1, e2) = (HermitianMatrix::diag(&[1.0, 0.0]), HermitianMatrix::diag(&[0.0, 1.0]));
        let v = is_abs_orthogonal(&e1, &e2, &t).unwrap();
        assert!(v.holds && v.residual == 0.0);
        let v = is_abs_orthogonal(&e1, &e1, &t).unwrap();
        assert!(!v.holds && (v.residual - 2.0).abs() < 1e-14);
        let v = is_abs_orthogonal(&half_ones(), &HermitianMatrix::zeros(2), &t).unwrap();
        assert!(v.holds);
        let v = is_abs_orthogonal(&HermitianMatrix::diag(&[1.0, -1.0]), &e2, &t).unwrap();
        assert!(!v.holds && v.residual == 1.0);
    }

    #[test]
    fn p_orthogonal_examples() {
        let t = tol();
        let (e1, e2) = (HermitianMatrix::diag(&[1.0, 0.0]), HermitianMatrix::diag(&[0.0, 1.0]));
        assert!(
            is_p_orthogonal(&e1, &e2, PNorm::Infinity, &DEFAULT_COEFFICIENTS, &t)
                .unwrap()
                .holds
        );
        let v = is_p_orthogonal(&e1, &e1, PNorm::Infinity, &[(1.0, 1.0)], &t).unwrap();
        assert!(!v.holds && (v.residual - 1.0).abs() < 1e-14);
        let v = is_p_orthogonal(&e1, &e2, PNorm::One, &[(1.0, -1.0)], &t).unwrap();
        assert!(v.holds && v.residual == 0.0);
        assert!(
            is_p_orthogonal(&e1, &e2, PNorm::One, &DEFAULT_COEFFICIENTS, &t)
                .unwrap()
                .holds
        );
        assert!(matches!(
            is_p_orthogonal(&e1, &HermitianMatrix::zeros(2), PNorm::One, &DEFAULT_COEFFICIENTS, &t),
            Err(Error::ZeroInput(_))
        ));
    }

    #[test]
    fn abs_infty_examples() {
        let t = tol();
        let i2 = HermitianMatrix::identity(2);
        let v = is_abs_infty_orthogonal(&i2, &i2, InftyMode::Oracle, &t).unwrap();
        assert!(!v.holds && (v.residual - 1.0).abs() < 1e-14);
        let (e1, e2) = (HermitianMatrix::diag(&[1.0, 0.0]), HermitianMatrix::diag(&[0.0, 1.0]));
        let v = is_abs_infty_orthogonal(&e1, &e2, InftyMode::Sampled { samples: 100, seed: 1 }, &t).unwrap();
        assert!(v.holds && v.witness.is_empty());
        let v = is_abs_infty_orthogonal(&e1, &half_ones(), InftyMode::Sampled { samples: 10, seed: 1 }, &t).unwrap();
        assert!(!v.holds && v.witness.len() == 2);
        assert!(is_abs_infty_orthogonal(&e1, &HermitianMatrix::zeros(2), InftyMode::Oracle, &t).is_err());
    }

    #[test]
    fn compatibility_examples() {
        let t = tol();
        let ctx = ModelContext::matrix_infty(2);
        let p = half_ones();
        assert!(is_absolutely_compatible(&p, &p, &ctx, &t).unwrap().holds);
        let v = is_absolutely_compatible(&p, &HermitianMatrix::diag(&[1.0, 0.0]), &ctx, &t).unwrap();
        assert!(!v.holds);
        assert!((v.residual - (2f64.sqrt() - 1.0)).abs() < 1e-12);
        assert!(v.anomaly.is_none());
        // Commuting is not enough: coordinatewise |x−y| + |x+y−1| = 1 needs
        // min(x, y) = 0 or max(x, y) = 1. Here the sum is diag(0.4, 0.8).
        let v = is_absolutely_compatible(
            &HermitianMatrix::diag(&[0.3, 0.9]),
            &HermitianMatrix::diag(&[0.5, 0.2]),
            &ctx,
            &t,
        )
        .unwrap();
        assert!(!v.holds && (v.residual - 0.6).abs() < 1e-14);
        let v = is_absolutely_compatible(
            &HermitianMatrix::diag(&[0.3, 1.0]),
            &HermitianMatrix::diag(&[0.0, 0.2]),
            &ctx,
            &t,
        )
        .unwrap();
        assert!(v.holds && v.residual == 0.0);
        let v = is_absolutely_compatible(&HermitianMatrix::diag(&[1.5, 0.0]), &p, &ctx, &t).unwrap();
        assert!(!v.holds && (v.residual - 0.5).abs() < 1e-14);
        assert!(is_absolutely_compatible(&HermitianMatrix::zeros(3), &HermitianMatrix::zeros(3), &ctx, &t).is_err());
    }

    #[test]
    fn symmetrized_product_examples() {
        let t = tol();
        let ctx = ModelContext::matrix_infty(2);
        let p = half_ones();
        let c = symmetrized_product_check(&p, &p, &ctx, &t).unwrap();
        assert!(c.agree() && c.verdict().holds && c.alpha > 0.0);
        let c = symmetrized_product_check(
            &HermitianMatrix::diag(&[0.4, 0.0]),
            &HermitianMatrix::diag(&[0.0, 0.7]),
            &ctx,
            &t,
        )
        .unwrap();
        assert!(c.agree() && c.verdict().holds);
        let c = symmetrized_product_check(&p, &HermitianMatrix::diag(&[1.0, 0.0]), &ctx, &t).unwrap();
        assert!(c.agree() && !c.verdict().holds);
        let z = HermitianMatrix::zeros(2);
        assert!(symmetrized_product_check(&z, &z, &ctx, &t).unwrap().verdict().holds);
        assert!(symmetrized_product_check(&z, &p, &ctx, &t).unwrap().verdict().holds);
    }

    #[test]
    fn context_strings() {
        let c: ModelContext = "matrix-infty:4".parse().unwrap();
        assert_eq!(c.label(), "matrix-infty:4");
        assert!("diagonal-lattice:4".parse::<ModelContext>().unwrap().is_diagonal());
        assert!("matrix-infty".parse::<ModelContext>().is_err());
        assert!("matrix-infty:0".parse::<ModelContext>().is_err());
    }
}
