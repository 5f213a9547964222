//! Covers `c±(v, α)`, the spectral family `e_α = c⁺(v, α)′` and the step
//! function approximation `Σ αᵢ (e_{αᵢ} − e_{αᵢ₋₁})`.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::calculus::{is_psd, leq, op_norm};
use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::format::to_json;
use crate::matrix::HermitianMatrix;
use crate::order::{pos_neg_parts, ModelContext, OrthoVerdict};
use crate::projections::{ac_membership, cover, p_decompose, OrderProjection};
use crate::tolerance::ToleranceProfile;

fn opn(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<f64> {
    op_norm(h, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sign {
    Plus,
    Minus,
}

/// Cover of `(v − α e)^±`.
pub fn c_pm(
    v: &HermitianMatrix,
    alpha: f64,
    sign: Sign,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<OrderProjection> {
    ctx.check_dim(v)?;
    let shifted = v - &ctx.unit.scale(alpha);
    let (plus, minus) = pos_neg_parts(&shifted, tol)?;
    let part = match sign {
        Sign::Plus => plus,
        Sign::Minus => minus,
    };
    cover(&part, tol)
}

/// `e_α = c⁺(v, α)′`, computed directly.
pub fn e_alpha(v: &HermitianMatrix, alpha: f64, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<OrderProjection> {
    Ok(c_pm(v, alpha, Sign::Plus, ctx, tol)?.complement())
}

/// The spectral family of one element, tabulated at its breakpoints.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralFamily {
    pub element: HermitianMatrix,
    /// Distinct eigenvalues; a cluster within the rank threshold is
    /// represented by its largest member.
    pub breakpoints: Vec<f64>,
    /// `e_β` for each breakpoint `β`.
    pub projections: Vec<OrderProjection>,
    /// `e_α` at the midpoint between consecutive breakpoints.
    pub midpoints: Vec<(f64, OrderProjection)>,
    /// Values within this distance below a breakpoint snap up to it.
    pub snap: f64,
    #[serde(skip)]
    zero: OrderProjection,
}

impl SpectralFamily {
    /// `e_α`: the projection at the largest breakpoint `≤ α + snap`, or `0`.
    pub fn at(&self, alpha: f64) -> &OrderProjection {
        let k = self.breakpoints.partition_point(|&b| b <= alpha + self.snap);
        if k == 0 {
            &self.zero
        } else {
            &self.projections[k - 1]
        }
    }

    pub fn norm(&self) -> f64 {
        self.breakpoints.iter().fold(0.0_f64, |m, b| m.max(b.abs()))
    }
}

pub fn spectral_family(v: &HermitianMatrix, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<SpectralFamily> {
    ctx.check_dim(v)?;
    let eig = eigh(v, tol)?;
    let top = eig.eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let snap = tol.rank_threshold(top);
    let mut breakpoints: Vec<f64> = Vec::new();
    let mut start = f64::NEG_INFINITY;
    for &l in &eig.eigenvalues {
        if l - start > snap {
            breakpoints.push(l);
            start = l;
        } else {
            *breakpoints.last_mut().expect("cluster has a start") = l;
        }
    }
    let projections = breakpoints
        .iter()
        .map(|&b| e_alpha(v, b, ctx, tol))
        .collect::<Result<Vec<_>>>()?;
    let midpoints = breakpoints
        .windows(2)
        .map(|w| {
            let m = 0.5 * (w[0] + w[1]);
            Ok((m, e_alpha(v, m, ctx, tol)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let zero = OrderProjection::measure(&HermitianMatrix::zeros(ctx.dim), ctx, tol)?;
    Ok(SpectralFamily {
        element: v.clone(),
        breakpoints,
        projections,
        midpoints,
        snap,
        zero,
    })
}

/// Checks of the characterizing properties at sampled `α`.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyProperties {
    pub monotone: bool,
    pub boundary: bool,
    pub in_ac: bool,
    /// `C_{e_α}(v) ≤ α e_α`.
    pub upper: bool,
    /// `C_{e_α′}(v) ≥ α e_α′`.
    pub lower: bool,
    pub right_continuous: bool,
    pub worst_residual: f64,
    pub holds: bool,
}

pub fn family_properties(
    family: &SpectralFamily,
    ctx: &ModelContext,
    sample_alphas: &[f64],
    tol: &ToleranceProfile,
) -> Result<FamilyProperties> {
    let v = &family.element;
    let nv = opn(v, tol)?;
    let mut alphas: Vec<f64> = sample_alphas.to_vec();
    alphas.extend([-nv - 1.0, nv, nv + 1.0]);
    alphas.extend(family.breakpoints.iter().copied());
    alphas.sort_by(f64::total_cmp);
    let psd_thr = tol.psd_threshold(nv.max(1.0));
    let mut worst: f64 = 0.0;
    let mut record = |residual: f64, ok: &mut bool| {
        worst = worst.max(residual);
        if residual > psd_thr {
            *ok = false;
        }
    };
    let (mut monotone, mut boundary, mut in_ac, mut upper, mut lower, mut right) = (true, true, true, true, true, true);
    for pair in alphas.windows(2) {
        let residual = is_psd(&(&family.at(pair[1]).matrix - &family.at(pair[0]).matrix), tol)?.residual;
        record(residual, &mut monotone);
    }
    for &a in &alphas {
        let e = family.at(a);
        if a < -nv - family.snap {
            record(opn(&e.matrix, tol)?, &mut boundary);
        }
        if a >= nv {
            record(opn(&(&e.matrix - &ctx.unit), tol)?, &mut boundary);
        }
        let d = p_decompose(v, e, tol)?;
        record(d.membership_residual, &mut in_ac);
        let ec = e.complement();
        record(is_psd(&(&e.matrix.scale(a) - &d.c_p), tol)?.residual, &mut upper);
        record(is_psd(&(&d.c_p_prime - &ec.matrix.scale(a)), tol)?.residual, &mut lower);
    }
    for (k, &b) in family.breakpoints.iter().enumerate() {
        let gap = family.breakpoints.get(k + 1).map_or(1.0, |next| next - b);
        for delta in [0.5 * gap, 1e-3 * gap] {
            let after = e_alpha(v, b + delta, ctx, tol)?;
            let residual = opn(&(&after.matrix - &family.projections[k].matrix), tol)?;
            record(residual, &mut right);
        }
    }
    let holds = monotone && boundary && in_ac && upper && lower && right;
    Ok(FamilyProperties {
        monotone,
        boundary,
        in_ac,
        upper,
        lower,
        right_continuous: right,
        worst_residual: worst,
        holds,
    })
}

/// Both sides of `(C_p(v) ≤ αp and C_p′(v) ≥ αp′) ⇔ c⁻(v, α) ≤ p ≤ c⁺(v, α)′`.
#[derive(Debug, Clone, Serialize)]
pub struct Sandwich {
    pub compression_side: bool,
    pub cover_side: bool,
    /// When both sides hold: residual of `C_p(v − αe) = −(v − αe)⁻` and
    /// `C_p′(v − αe) = (v − αe)⁺`.
    pub parts_residual: Option<f64>,
    pub agree: bool,
}

pub fn sandwich_check(
    v: &HermitianMatrix,
    p: &OrderProjection,
    alpha: f64,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<Sandwich> {
    let d = p_decompose(v, p, tol)?;
    if !d.in_ac(tol) {
        return Err(Error::Precondition("element is not in AC(p)".into()));
    }
    let pc = p.complement();
    let compression_side =
        leq(&d.c_p, &p.matrix.scale(alpha), tol)?.holds && leq(&pc.matrix.scale(alpha), &d.c_p_prime, tol)?.holds;
    let minus = c_pm(v, alpha, Sign::Minus, ctx, tol)?;
    let plus_c = c_pm(v, alpha, Sign::Plus, ctx, tol)?.complement();
    let cover_side = leq(&minus.matrix, &p.matrix, tol)?.holds && leq(&p.matrix, &plus_c.matrix, tol)?.holds;
    let parts_residual = if compression_side && cover_side {
        let shifted = v - &ctx.unit.scale(alpha);
        let (sp, sm) = pos_neg_parts(&shifted, tol)?;
        let r1 = opn(&(&p.compress(&shifted) + &sm), tol)?;
        let r2 = opn(&(&pc.compress(&shifted) - &sp), tol)?;
        Some(r1.max(r2))
    } else {
        None
    };
    Ok(Sandwich {
        compression_side,
        cover_side,
        parts_residual,
        agree: compression_side == cover_side,
    })
}

/// Both covers `c±(v, α)` lie in `AC(p)` whenever `v` does.
pub fn cover_compatibility(
    v: &HermitianMatrix,
    p: &OrderProjection,
    alpha: f64,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    if !p_decompose(v, p, tol)?.in_ac(tol) {
        return Err(Error::Precondition("element is not in AC(p)".into()));
    }
    let a = ac_membership(&c_pm(v, alpha, Sign::Plus, ctx, tol)?.matrix, p, ctx, tol)?;
    let b = ac_membership(&c_pm(v, alpha, Sign::Minus, ctx, tol)?.matrix, p, ctx, tol)?;
    let mut verdict = OrthoVerdict::new(a.residual.max(b.residual), a.threshold.min(b.threshold));
    verdict.anomaly = a.anomaly.or(b.anomaly);
    Ok(verdict)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralGrid {
    pub epsilon: f64,
    pub points: Vec<f64>,
}

impl SpectralGrid {
    /// Uniform grid on `[−‖v‖ − ε/2, ‖v‖ + ε/2]` with
    /// `ceil(2(‖v‖ + ε)/ε) + 1` cells.
    pub fn uniform(norm: f64, epsilon: f64) -> Result<Self> {
        if epsilon.is_nan() || epsilon <= 0.0 || !epsilon.is_finite() {
            return Err(Error::Precondition(format!("epsilon must be positive, got {epsilon}")));
        }
        let lo = -norm - 0.5 * epsilon;
        let hi = norm + 0.5 * epsilon;
        let cells = (2.0 * (norm + epsilon) / epsilon).ceil() as usize + 1;
        let step = (hi - lo) / cells as f64;
        let mut points: Vec<f64> = (0..=cells).map(|i| lo + step * i as f64).collect();
        points[cells] = hi;
        Ok(Self { epsilon, points })
    }

    pub fn max_gap(&self) -> f64 {
        self.points.windows(2).fold(0.0_f64, |m, w| m.max(w[1] - w[0]))
    }

    pub fn cells(&self) -> usize {
        self.points.len().saturating_sub(1)
    }
}

/// One nonzero increment `αᵢ (e_{αᵢ} − e_{αᵢ₋₁})`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Increment {
    pub index: usize,
    pub coefficient: f64,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralDecomposition {
    pub approximation: HermitianMatrix,
    /// `‖v − approximation‖`.
    pub error: f64,
    pub grid: SpectralGrid,
    pub increments: Vec<Increment>,
    /// `‖Σ (e_{αᵢ} − e_{αᵢ₋₁}) − e‖`.
    pub partition_residual: f64,
}

pub fn spectral_decompose(
    v: &HermitianMatrix,
    epsilon: f64,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<SpectralDecomposition> {
    let family = spectral_family(v, ctx, tol)?;
    let grid = SpectralGrid::uniform(opn(v, tol)?, epsilon)?;
    decompose_on_grid(&family, grid, ctx, tol)
}

/// Step function approximation of `family.element` on a given grid.
pub fn decompose_on_grid(
    family: &SpectralFamily,
    grid: SpectralGrid,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<SpectralDecomposition> {
    let v = &family.element;
    let n = ctx.dim;
    let mut approximation = HermitianMatrix::zeros(n);
    let mut total = HermitianMatrix::zeros(n);
    let mut increments = Vec::new();
    for i in 1..grid.points.len() {
        let hi = &family.at(grid.points[i]).matrix;
        let lo = &family.at(grid.points[i - 1]).matrix;
        if hi == lo {
            continue;
        }
        let step = hi - lo;
        let alpha = grid.points[i];
        approximation = &approximation + &step.scale(alpha);
        total = &total + &step;
        increments.push(Increment {
            index: i,
            coefficient: alpha,
            rank: step.trace().round().max(0.0) as usize,
        });
    }
    let error = opn(&(v - &approximation), tol)?;
    let partition_residual = opn(&(&total - &ctx.unit), tol)?;
    Ok(SpectralDecomposition {
        approximation,
        error,
        grid,
        increments,
        partition_residual,
    })
}

/// SHA-256 of the matrix document of `v`.
pub fn element_digest(v: &HermitianMatrix) -> String {
    hex::encode(Sha256::digest(to_json(v).as_bytes()))
}

/// The serialized decomposition report.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub element_digest: String,
    pub epsilon: f64,
    pub grid: Vec<f64>,
    pub max_gap: f64,
    pub increments: Vec<Increment>,
    pub error: f64,
}

impl DecompositionReport {
    pub fn new(v: &HermitianMatrix, d: &SpectralDecomposition) -> Self {
        Self {
            element_digest: element_digest(v),
            epsilon: d.grid.epsilon,
            grid: d.grid.points.clone(),
            max_gap: d.grid.max_gap(),
            increments: d.increments.clone(),
            error: d.error,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleComparison {
    pub alphas: Vec<f64>,
    pub distances: Vec<f64>,
    pub max_distance: f64,
}

/// Frobenius distance between `e_α` and the projection onto the eigenvectors
/// with eigenvalue `≤ α`. Eigenvalues within the family's snap distance above
/// `α` count as equal to it.
pub fn oracle_compare(
    family: &SpectralFamily,
    sample_alphas: &[f64],
    tol: &ToleranceProfile,
) -> Result<OracleComparison> {
    let eig = eigh(&family.element, tol)?;
    let mut distances = Vec::with_capacity(sample_alphas.len());
    for &a in sample_alphas {
        let oracle = eig.spectral_projection(|l| l <= a + family.snap);
        distances.push((&family.at(a).matrix - &oracle).frobenius_norm());
    }
    let max_distance = distances.iter().fold(0.0_f64, |m, &d| m.max(d));
    Ok(OracleComparison {
        alphas: sample_alphas.to_vec(),
        distances,
        max_distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceProfile {
        ToleranceProfile::default()
    }

    fn d(v: &[f64]) -> HermitianMatrix {
        HermitianMatrix::diag(v)
    }

    fn sample() -> HermitianMatrix {
        d(&[2.0, -1.0, 0.5])
    }

    fn swap() -> HermitianMatrix {
        HermitianMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
    }

    fn close(a: &HermitianMatrix, b: &HermitianMatrix) -> bool {
        (a - b).frobenius_norm() < 1e-12
    }

    #[test]
    fn cover_examples() {
        let (t, c) = (tol(), ModelContext::matrix_infty(3));
        assert_eq!(
            c_pm(&sample(), 0.0, Sign::Plus, &c, &t).unwrap().matrix,
            d(&[1.0, 0.0, 1.0])
        );
        assert_eq!(
            c_pm(&sample(), 0.0, Sign::Minus, &c, &t).unwrap().matrix,
            d(&[0.0, 1.0, 0.0])
        );
        let psd = d(&[0.5, 0.0, 2.0]);
        assert_eq!(
            c_pm(&psd, -1.0, Sign::Plus, &c, &t).unwrap().matrix,
            HermitianMatrix::identity(3)
        );
        let z = HermitianMatrix::zeros(3);
        assert_eq!(c_pm(&z, 0.0, Sign::Plus, &c, &t).unwrap().matrix, z);
        assert_eq!(c_pm(&z, 0.0, Sign::Minus, &c, &t).unwrap().matrix, z);
    }

    #[test]
    fn family_examples() {
        let (t, c) = (tol(), ModelContext::matrix_infty(3));
        let f = spectral_family(&sample(), &c, &t).unwrap();
        assert_eq!(f.breakpoints, vec![-1.0, 0.5, 2.0]);
        assert_eq!(f.at(-1.0).matrix, d(&[0.0, 1.0, 0.0]));
        assert_eq!(f.at(0.5).matrix, d(&[0.0, 1.0, 1.0]));
        assert_eq!(f.at(2.0).matrix, HermitianMatrix::identity(3));
        assert_eq!(f.at(-1.5).matrix, HermitianMatrix::zeros(3));

        let f = spectral_family(&HermitianMatrix::identity(3).scale(0.7), &c, &t).unwrap();
        assert_eq!(f.at(0.69).matrix, HermitianMatrix::zeros(3));
        assert_eq!(f.at(0.7).matrix, HermitianMatrix::identity(3));

        let c2 = ModelContext::matrix_infty(2);
        let f = spectral_family(&swap(), &c2, &t).unwrap();
        let low = HermitianMatrix::from_real_rows(&[&[0.5, -0.5], &[-0.5, 0.5]]).unwrap();
        assert!(close(&f.at(-1.0).matrix, &low));
        assert!(close(&f.at(1.0).matrix, &HermitianMatrix::identity(2)));
        assert!(close(&f.midpoints[0].1.matrix, &low));
    }

    #[test]
    fn family_property_examples() {
        let (t, c) = (tol(), ModelContext::matrix_infty(3));
        let f = spectral_family(&sample(), &c, &t).unwrap();
        let p = family_properties(&f, &c, &[-1.0, 0.0, 0.5, 2.0], &t).unwrap();
        assert!(p.holds && p.worst_residual == 0.0, "{p:?}");
        let f = spectral_family(&HermitianMatrix::identity(3).scale(-0.4), &c, &t).unwrap();
        assert!(family_properties(&f, &c, &[-0.4, 3.0], &t).unwrap().holds);
    }

    #[test]
    fn sandwich_examples() {
        let (t, c) = (tol(), ModelContext::matrix_infty(3));
        let p = OrderProjection::new(&d(&[0.0, 1.0, 0.0]), &c, &t).unwrap();
        let s = sandwich_check(&sample(), &p, 0.0, &c, &t).unwrap();
        assert!(s.agree && s.compression_side && s.parts_residual == Some(0.0));
        let f = spectral_family(&sample(), &c, &t).unwrap();
        let s = sandwich_check(&sample(), f.at(0.7), 0.7, &c, &t).unwrap();
        assert!(s.agree && s.cover_side);
        let e = OrderProjection::new(&HermitianMatrix::identity(3), &c, &t).unwrap();
        assert!(sandwich_check(&sample(), &e, 2.0, &c, &t).unwrap().compression_side);
        let q = OrderProjection::new(
            &HermitianMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap(),
            &ModelContext::matrix_infty(2),
            &t,
        )
        .unwrap();
        assert!(sandwich_check(&d(&[1.0, 0.0]), &q, 0.0, &ModelContext::matrix_infty(2), &t).is_err());
    }

    #[test]
    fn cover_compatibility_examples() {
        let (t, c) = (tol(), ModelContext::matrix_infty(3));
        let p = OrderProjection::new(&d(&[1.0, 1.0, 0.0]), &c, &t).unwrap();
        let v = HermitianMatrix::from_real_rows(&[&[0.2, 0.5, 0.0], &[0.5, -0.3, 0.0], &[0.0, 0.0, 0.9]]).unwrap();
        for a in [-0.5, 0.0, 0.7] {
            assert!(cover_compatibility(&v, &p, a, &c, &t).unwrap().holds);
        }
        let e = OrderProjection::new(&HermitianMatrix::identity(3), &c, &t).unwrap();
        assert!(cover_compatibility(&v, &e, 0.1, &c, &t).unwrap().holds);
        assert!(cover_compatibility(&v, &e.complement(), 0.1, &c, &t).unwrap().holds);
    }

    #[test]
    fn decomposition_examples() {
        let (t, c) = (tol(), ModelContext::matrix_infty(3));
        let r = spectral_decompose(&sample(), 0.5, &c, &t).unwrap();
        assert!(r.error < 0.5 && r.error <= r.grid.max_gap());
        assert!(r.grid.max_gap() < 0.5);
        assert!(r.partition_residual == 0.0);
        assert_eq!(r.increments.iter().map(|i| i.rank).sum::<usize>(), 3);
        let r = spectral_decompose(&sample(), 6.0, &c, &t).unwrap();
        assert!(r.error < 6.0);
        assert!(spectral_decompose(&sample(), 0.0, &c, &t).is_err());
        assert!(spectral_decompose(&sample(), -1.0, &c, &t).is_err());
    }

    #[test]
    fn grid_shape() {
        let g = SpectralGrid::uniform(2.0, 0.5).unwrap();
        assert!(g.points[0] < -2.0 && *g.points.last().unwrap() > 2.0);
        assert!(g.max_gap() < 0.5);
        assert_eq!(g.cells(), 11);
    }

    #[test]
    fn oracle_examples() {
        let t = tol();
        let c = ModelContext::matrix_infty(3);
        let f = spectral_family(&sample(), &c, &t).unwrap();
        assert_eq!(
            oracle_compare(&f, &[-2.0, -0.3, 0.6, 3.0], &t).unwrap().max_distance,
            0.0
        );
        let f = spectral_family(&swap(), &ModelContext::matrix_infty(2), &t).unwrap();
        assert!(oracle_compare(&f, &[0.0], &t).unwrap().max_distance < 1e-12);
    }
}
