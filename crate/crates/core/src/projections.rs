//! Order projections: detection, covers, the projection lattice and the
//! compressions `C_p(v) = p v p`.

use num_complex::Complex64;
use serde::Serialize;

use crate::calculus::{is_psd, leq, op_norm, sqrt_psd};
use crate::eigen::eigh;
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, HermitianMatrix};
use crate::models::{random_hermitian, random_psd, random_unit_interval, random_unitary, rng_from_seed};
use crate::order::{
    abs_value, band_residual, cone_residual, is_abs_orthogonal, is_absolutely_compatible, is_p_orthogonal, join, meet,
    ModelContext, OrthoVerdict, PNorm, DEFAULT_COEFFICIENTS,
};
use crate::tolerance::ToleranceProfile;

fn opn(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<f64> {
    op_norm(h, tol)
}

/// A validated element of `OP(V)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderProjection {
    pub matrix: HermitianMatrix,
    /// `‖p² − p‖`.
    pub idempotency_residual: f64,
    /// `‖|2p − e| − e‖`.
    pub op_residual: f64,
    #[serde(skip)]
    complement: HermitianMatrix,
}

impl OrderProjection {
    /// Measures `p` without deciding membership.
    pub fn measure(p: &HermitianMatrix, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Self> {
        ctx.check_dim(p)?;
        let e = &ctx.unit;
        let reflection = &p.scale(2.0) - e;
        let op_residual = opn(&(&abs_value(&reflection, tol)? - e), tol)?;
        let square = HermitianMatrix::symmetrize(&p.matmul(p));
        let idempotency_residual = opn(&(&square - p), tol)?;
        Ok(Self {
            matrix: p.clone(),
            idempotency_residual,
            op_residual,
            complement: ctx.complement(p),
        })
    }

    /// Validates `p`, failing with a precondition error when `p ∉ OP(V)`.
    pub fn new(p: &HermitianMatrix, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Self> {
        match is_order_projection(p, ctx, tol)? {
            (true, Some(op)) => Ok(op),
            _ => Err(Error::Precondition("not an order projection".into())),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `p′ = e − p`; taking the complement twice returns the same bits.
    pub fn complement(&self) -> OrderProjection {
        Self {
            matrix: self.complement.clone(),
            idempotency_residual: self.idempotency_residual,
            op_residual: self.op_residual,
            complement: self.matrix.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.trace().round().max(0.0) as usize
    }

    /// `C_p(v) = p v p`.
    pub fn compress(&self, v: &HermitianMatrix) -> HermitianMatrix {
        v.compress(&self.matrix)
    }
}

/// `p ∈ OP(V)`: `0 ≤ p ≤ e` and `|2p − e| = e`.
pub fn is_order_projection(
    p: &HermitianMatrix,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<(bool, Option<OrderProjection>)> {
    let op = OrderProjection::measure(p, ctx, tol)?;
    let band = band_residual(p, tol)?;
    let holds = band <= tol.psd_threshold(1.0) && op.op_residual <= tol.threshold(1.0);
    Ok((holds, holds.then_some(op)))
}

/// Orthogonal projection onto the eigenvectors of `a` with eigenvalue above
/// the rank threshold.
pub fn range_projection(a: &HermitianMatrix, tol: &ToleranceProfile) -> Result<OrderProjection> {
    let eig = eigh(a, tol)?;
    let top = eig.eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let cliff = tol.rank_threshold(top);
    let p = eig.spectral_projection(|l| l > cliff);
    projection_from_exact(p, tol)
}

/// The least projection `c` with `v ∈ c V c`: the range projection of `|v|`.
pub fn cover(v: &HermitianMatrix, tol: &ToleranceProfile) -> Result<OrderProjection> {
    let eig = eigh(v, tol)?;
    let top = eig.eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let cliff = tol.rank_threshold(top);
    let p = eig.spectral_projection(|l| l.abs() > cliff);
    projection_from_exact(p, tol)
}

/// `‖v − c v c‖` for the cover `c` of `v`.
pub fn cover_residual(v: &HermitianMatrix, c: &OrderProjection, tol: &ToleranceProfile) -> Result<f64> {
    opn(&(v - &c.compress(v)), tol)
}

fn projection_from_exact(p: HermitianMatrix, tol: &ToleranceProfile) -> Result<OrderProjection> {
    let ctx = ModelContext::matrix_infty(p.dim());
    OrderProjection::measure(&p, &ctx, tol)
}

/// Orthogonal projection onto `range(p) + range(q)` by Gram–Schmidt on the
/// columns of `p` and `q`. Used as an oracle for the projection lattice.
pub fn span_projection(p: &HermitianMatrix, q: &HermitianMatrix, tol: &ToleranceProfile) -> HermitianMatrix {
    let n = p.dim();
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    let cliff = tol.rank_threshold(1.0).sqrt();
    for m in [p, q] {
        for j in 0..n {
            let mut x: Vec<Complex64> = (0..n).map(|i| m.get(i, j)).collect();
            for _ in 0..2 {
                for b in &basis {
                    let c: Complex64 = b.iter().zip(&x).map(|(bi, xi)| bi.conj() * xi).sum();
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi -= c * bi;
                    }
                }
            }
            let len = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if len > cliff {
                basis.push(x.into_iter().map(|z| z / len).collect());
            }
        }
    }
    let out = DenseMatrix::from_fn(n, |i, j| basis.iter().map(|b| b[i] * b[j].conj()).sum());
    HermitianMatrix::symmetrize(&out)
}

/// The projection predicates for an element `a ∈ [0, e]`.
#[derive(Debug, Clone, Serialize)]
pub struct ProjectionProfile {
    /// `a² = a`.
    pub idempotent: bool,
    pub idempotency_residual: f64,
    /// `a ⊥ (e − a)`.
    pub orthogonal_to_complement: bool,
    pub orthogonality_residual: f64,
    /// `[0, a] ∩ [0, e − a] = {0}`, by search.
    pub intervals_trivial: bool,
    pub interval_witness: Option<HermitianMatrix>,
    /// `±v ≤ ‖v‖ a` for sampled `v ∈ a V a`.
    pub order_unit_property: bool,
    pub order_unit_residual: f64,
    pub anomaly: Option<String>,
}

impl ProjectionProfile {
    pub fn verdicts(&self) -> [bool; 4] {
        [
            self.idempotent,
            self.orthogonal_to_complement,
            self.intervals_trivial,
            self.order_unit_property,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }
}

pub fn projection_profile(
    a: &HermitianMatrix,
    ctx: &ModelContext,
    samples: usize,
    seed: u64,
    tol: &ToleranceProfile,
) -> Result<ProjectionProfile> {
    ctx.check_dim(a)?;
    let thr = tol.threshold(1.0);
    let measured = OrderProjection::measure(a, ctx, tol)?;
    let orth = is_abs_orthogonal(a, &ctx.complement(a), tol)?;

    // min(a, e − a) in the functional calculus lies below both a and e − a and
    // vanishes exactly when a is a projection.
    let eig = eigh(a, tol)?;
    let low: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.min(1.0 - l).max(0.0)).collect();
    let common = eig.reconstruct_with(&low);
    let common_norm = opn(&common, tol)?;
    let mut witness = None;
    if common_norm > thr {
        witness = Some(common.scale(0.5));
    } else {
        let mut rng = rng_from_seed(seed);
        let root = sqrt_psd(&common, tol)?;
        for _ in 0..samples {
            let basis = random_unitary(&mut rng, a.dim());
            let k = random_unit_interval(&mut rng, &basis);
            let x = k.conjugate_by(root.as_dense());
            if opn(&x, tol)? > thr && leq(&x, a, tol)?.holds && leq(&x, &ctx.complement(a), tol)?.holds {
                witness = Some(x);
                break;
            }
        }
    }

    let mut rng = rng_from_seed(seed ^ 0x5eed);
    let mut unit_residual: f64 = 0.0;
    let mut probes = vec![HermitianMatrix::identity(a.dim())];
    for _ in 0..samples {
        probes.push(random_hermitian(&mut rng, a.dim()));
    }
    for h in probes {
        let v = h.compress(a);
        let nv = opn(&v, tol)?;
        if nv <= thr {
            continue;
        }
        let top = a.scale(nv);
        let r = is_psd(&(&top - &v), tol)?
            .residual
            .max(is_psd(&(&top + &v), tol)?.residual);
        unit_residual = unit_residual.max(r / nv);
    }

    let mut profile = ProjectionProfile {
        idempotent: measured.idempotency_residual <= thr,
        idempotency_residual: measured.idempotency_residual,
        orthogonal_to_complement: orth.holds,
        orthogonality_residual: orth.residual,
        intervals_trivial: witness.is_none(),
        interval_witness: witness,
        order_unit_property: unit_residual <= tol.psd_threshold(1.0),
        order_unit_residual: unit_residual,
        anomaly: None,
    };
    if !profile.agree() {
        profile.anomaly = Some(format!("projection predicates disagree: {:?}", profile.verdicts()));
    }
    Ok(profile)
}

/// The pair conditions for two order projections.
#[derive(Debug, Clone, Serialize)]
pub struct PairRelations {
    pub sum_below_unit: bool,
    pub orthogonal: bool,
    pub sum_is_projection: bool,
    pub infty_orthogonal: bool,
    /// `q − p ∈ OP(V)`, reported when `p ≤ q`.
    pub difference_is_projection: Option<bool>,
}

impl PairRelations {
    pub fn verdicts(&self) -> [bool; 4] {
        [
            self.sum_below_unit,
            self.orthogonal,
            self.sum_is_projection,
            self.infty_orthogonal,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }
}

pub fn op_pair_relations(
    p: &OrderProjection,
    q: &OrderProjection,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<PairRelations> {
    let (pm, qm) = (&p.matrix, &q.matrix);
    let sum = pm.try_add(qm)?;
    let sum_below_unit = leq(&sum, &ctx.unit, tol)?.holds;
    let orthogonal = is_abs_orthogonal(pm, qm, tol)?.holds;
    let sum_is_projection = is_order_projection(&sum, ctx, tol)?.0;
    let thr = tol.threshold(1.0);
    let infty_orthogonal = if opn(pm, tol)? <= thr || opn(qm, tol)? <= thr {
        true
    } else {
        is_p_orthogonal(pm, qm, PNorm::Infinity, &DEFAULT_COEFFICIENTS, tol)?.holds
    };
    let difference_is_projection = if leq(pm, qm, tol)?.holds {
        Some(is_order_projection(&(qm - pm), ctx, tol)?.0)
    } else {
        None
    };
    Ok(PairRelations {
        sum_below_unit,
        orthogonal,
        sum_is_projection,
        infty_orthogonal,
        difference_is_projection,
    })
}

/// `(inf, sup)` in `OP(V)`: `sup = c(p + q)` and `inf = (c(p′ + q′))′`.
pub fn op_meet_join(
    p: &OrderProjection,
    q: &OrderProjection,
    tol: &ToleranceProfile,
) -> Result<(OrderProjection, OrderProjection)> {
    let sup = cover(&p.matrix.try_add(&q.matrix)?, tol)?;
    let co_sup = cover(&(&p.complement().matrix + &q.complement().matrix), tol)?;
    Ok((co_sup.complement(), sup))
}

/// The seven equivalent conditions for a pair of projections.
#[derive(Debug, Clone, Serialize)]
pub struct MeetCompatibility {
    pub meet_is_projection: bool,
    pub join_is_projection: bool,
    pub co_meet_is_projection: bool,
    pub co_join_is_projection: bool,
    pub compatible: bool,
    pub compatibility_residual: f64,
    /// `|p − q| ∈ OP(V)` and `|p − q| ≤ p + q`.
    pub difference_is_projection: bool,
    pub commute: bool,
    pub commutator_norm: f64,
    pub meet: HermitianMatrix,
}

impl MeetCompatibility {
    pub fn verdicts(&self) -> [bool; 7] {
        [
            self.meet_is_projection,
            self.join_is_projection,
            self.co_meet_is_projection,
            self.co_join_is_projection,
            self.compatible,
            self.difference_is_projection,
            self.commute,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }

    pub fn holds(&self) -> bool {
        self.verdicts().iter().all(|&b| b)
    }
}

pub fn meet_compatibility_check(
    p: &OrderProjection,
    q: &OrderProjection,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<MeetCompatibility> {
    let (pm, qm) = (&p.matrix, &q.matrix);
    let (pc, qc) = (p.complement(), q.complement());
    let in_op = |h: &HermitianMatrix| -> Result<bool> { Ok(is_order_projection(h, ctx, tol)?.0) };
    let m = meet(pm, qm, tol)?;
    let compat = is_absolutely_compatible(pm, qm, ctx, tol)?;
    let diff = abs_value(&pm.try_sub(qm)?, tol)?;
    let commutator_norm = pm.commutator(qm).operator_norm()?;
    Ok(MeetCompatibility {
        meet_is_projection: in_op(&m)?,
        join_is_projection: in_op(&join(pm, qm, tol)?)?,
        co_meet_is_projection: in_op(&meet(&pc.matrix, &qc.matrix, tol)?)?,
        co_join_is_projection: in_op(&join(&pc.matrix, &qc.matrix, tol)?)?,
        compatible: compat.holds,
        compatibility_residual: compat.residual,
        difference_is_projection: in_op(&diff)? && leq(&diff, &(pm + qm), tol)?.holds,
        commute: commutator_norm <= tol.threshold(1.0),
        commutator_norm,
        meet: m,
    })
}

/// Closure of `S = {0, e, p, q, r, p′, q′, r′}` under `(u, v) ↦ |u − v|`,
/// where `r = |p − q|`.
#[derive(Debug, Clone, Serialize)]
pub struct SSetClosure {
    pub labels: Vec<&'static str>,
    pub elements: Vec<HermitianMatrix>,
    /// `table[i][j]` is the index of `|s_i − s_j|` in `elements`.
    pub table: Vec<Vec<Option<usize>>>,
    pub closed: bool,
    /// Largest distance from some `|s_i − s_j|` to its nearest element of `S`.
    pub residual: f64,
    /// `‖p − |q − r|‖` and `‖q − |p − r|‖`.
    pub recovery_residual: f64,
}

pub fn s_set_closure(
    p: &OrderProjection,
    q: &OrderProjection,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<SSetClosure> {
    if !meet_compatibility_check(p, q, ctx, tol)?.holds() {
        return Err(Error::Precondition("S-set undefined for incompatible pair".into()));
    }
    let (pm, qm) = (&p.matrix, &q.matrix);
    let r = abs_value(&(pm - qm), tol)?;
    let e = &ctx.unit;
    let labels = vec!["0", "e", "p", "q", "r", "p'", "q'", "r'"];
    let elements = vec![
        HermitianMatrix::zeros(ctx.dim),
        e.clone(),
        pm.clone(),
        qm.clone(),
        r.clone(),
        p.complement().matrix,
        q.complement().matrix,
        e - &r,
    ];
    let thr = tol.threshold(1.0);
    let mut table = vec![vec![None; elements.len()]; elements.len()];
    let mut residual: f64 = 0.0;
    for (i, u) in elements.iter().enumerate() {
        for (j, v) in elements.iter().enumerate() {
            let d = abs_value(&(u - v), tol)?;
            let mut best = (f64::INFINITY, 0);
            for (k, s) in elements.iter().enumerate() {
                let dist = opn(&(&d - s), tol)?;
                if dist < best.0 {
                    best = (dist, k);
                }
            }
            residual = residual.max(best.0);
            if best.0 <= thr {
                table[i][j] = Some(best.1);
            }
        }
    }
    let recovery_residual =
        opn(&(pm - &abs_value(&(qm - &r), tol)?), tol)?.max(opn(&(qm - &abs_value(&(pm - &r), tol)?), tol)?);
    Ok(SSetClosure {
        labels,
        elements,
        closed: residual <= thr,
        table,
        residual,
        recovery_residual,
    })
}

/// `v ↦ (p v p, p′ v p′)` with the size of the off-diagonal remainder.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PDecomposition {
    pub c_p: HermitianMatrix,
    pub c_p_prime: HermitianMatrix,
    /// `‖v − C_p(v) − C_p′(v)‖`.
    pub membership_residual: f64,
    /// `‖v‖`, the scale for the membership threshold.
    pub scale: f64,
}

impl PDecomposition {
    /// `v ∈ AC(p)`.
    pub fn in_ac(&self, tol: &ToleranceProfile) -> bool {
        self.membership_residual <= tol.threshold(self.scale)
    }

    pub fn threshold(&self, tol: &ToleranceProfile) -> f64 {
        tol.threshold(self.scale)
    }
}

pub fn p_decompose(v: &HermitianMatrix, p: &OrderProjection, tol: &ToleranceProfile) -> Result<PDecomposition> {
    v.check_same_dim(&p.matrix)?;
    let c_p = p.compress(v);
    let c_p_prime = p.complement().compress(v);
    let membership_residual = opn(&(&(v - &c_p) - &c_p_prime), tol)?;
    Ok(PDecomposition {
        c_p,
        c_p_prime,
        membership_residual,
        scale: opn(v, tol)?,
    })
}

/// `u ∈ AC(p)⁺`, cross-checked against absolute compatibility of the
/// normalized `u` with `p`.
pub fn ac_membership(
    u: &HermitianMatrix,
    p: &OrderProjection,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    ctx.check_dim(u)?;
    let (cone, cone_thr) = cone_residual(&[u], tol)?;
    if cone > cone_thr {
        return Ok(OrthoVerdict::violated(cone, cone_thr));
    }
    let d = p_decompose(u, p, tol)?;
    let mut verdict = OrthoVerdict::new(d.membership_residual, d.threshold(tol));
    let un = u.scale(1.0 / d.scale.max(1.0));
    let compat = is_absolutely_compatible(&un, &p.matrix, ctx, tol)?;
    let wide = 10.0 * verdict.threshold.max(compat.threshold);
    if (verdict.holds && compat.residual > wide) || (compat.holds && verdict.residual > wide) {
        verdict.anomaly = Some(format!(
            "compression residual {:.3e} and compatibility residual {:.3e} disagree",
            verdict.residual, compat.residual
        ));
    }
    Ok(verdict)
}

/// Lower and upper bound checks for `u ∧̇ p` and `u ∨̇ p`.
#[derive(Debug, Clone, Serialize)]
pub struct InfSupReport {
    pub meet: HermitianMatrix,
    pub join: HermitianMatrix,
    /// Violation of `m ≤ u`, `m ≤ p`, `j ≥ u`, `j ≥ p`.
    pub bound_residual: f64,
    /// Worst violation of `w ≤ m` over sampled common lower bounds `w`, and
    /// of `w ≥ j` over sampled common upper bounds in `[0, e]`.
    pub extremality_residual: f64,
    pub witnesses_tested: usize,
    pub holds: bool,
}

/// Largest `t ∈ [0, 1]` with `t x ≤ u`, by bisection.
fn largest_multiple_below(x: &HermitianMatrix, u: &HermitianMatrix, tol: &ToleranceProfile) -> Result<f64> {
    if leq(x, u, tol)?.holds {
        return Ok(1.0);
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if is_psd(&(u - &x.scale(mid)), &ToleranceProfile { psd_slack: 0.0, ..*tol })?.holds {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

pub fn inf_sup_with_projection(
    u: &HermitianMatrix,
    p: &OrderProjection,
    ctx: &ModelContext,
    witnesses: usize,
    seed: u64,
    tol: &ToleranceProfile,
) -> Result<InfSupReport> {
    ctx.check_dim(u)?;
    let band = band_residual(u, tol)?;
    if band > tol.psd_threshold(1.0) {
        return Err(Error::Precondition("element is outside [0, e]".into()));
    }
    if !is_absolutely_compatible(u, &p.matrix, ctx, tol)?.holds {
        return Err(Error::Precondition(
            "element is not absolutely compatible with p".into(),
        ));
    }
    let pm = &p.matrix;
    let m = meet(u, pm, tol)?;
    let j = join(u, pm, tol)?;
    let viol = |a: &HermitianMatrix, b: &HermitianMatrix| -> Result<f64> { Ok(is_psd(&(b - a), tol)?.residual) };
    let bound_residual = viol(&m, u)?.max(viol(&m, pm)?).max(viol(u, &j)?).max(viol(pm, &j)?);

    let pc = p.complement();
    let (uc, e) = (ctx.complement(u), &ctx.unit);
    let mut rng = rng_from_seed(seed);
    let mut extremality_residual: f64 = 0.0;
    let mut tested = 0;
    for _ in 0..witnesses {
        // Anything below p lives in p V p, anything below p′ in p′ V p′.
        let x = p.compress(&random_psd(&mut rng, ctx.dim));
        let t = largest_multiple_below(&x, u, tol)?;
        let w = x.scale(t);
        extremality_residual = extremality_residual.max(viol(&w, &m)?);
        let y = pc.compress(&random_psd(&mut rng, ctx.dim));
        let s = largest_multiple_below(&y, &uc, tol)?;
        let upper = e - &y.scale(s);
        extremality_residual = extremality_residual.max(viol(&j, &upper)?);
        tested += 2;
    }
    let thr = tol.psd_threshold(1.0).max(tol.threshold(1.0));
    Ok(InfSupReport {
        holds: bound_residual <= thr && extremality_residual <= thr,
        meet: m,
        join: j,
        bound_residual,
        extremality_residual,
        witnesses_tested: tested,
    })
}

/// `(Σ u_i) ∧̇ (Σ ‖u_i‖ p) = Σ (u_i ∧̇ ‖u_i‖ p)` and the matching join identity.
pub fn additive_meet_identity(
    us: &[HermitianMatrix],
    p: &OrderProjection,
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    let n = p.dim();
    let mut total = HermitianMatrix::zeros(n);
    let mut weight = 0.0;
    let mut meets = HermitianMatrix::zeros(n);
    let mut joins = HermitianMatrix::zeros(n);
    let mut terms = 0usize;
    for u in us {
        let nu = opn(u, tol)?;
        if nu == 0.0 {
            continue;
        }
        let scaled = p.matrix.scale(nu);
        total = total.try_add(u)?;
        weight += nu;
        meets = &meets + &meet(u, &scaled, tol)?;
        joins = &joins + &join(u, &scaled, tol)?;
        terms += 1;
    }
    let target = p.matrix.scale(weight);
    let residual =
        opn(&(&meet(&total, &target, tol)? - &meets), tol)?.max(opn(&(&join(&total, &target, tol)? - &joins), tol)?);
    Ok(OrthoVerdict::new(residual, terms.max(1) as f64 * tol.threshold(weight)))
}

/// `v = v ∧̇ p + v ∧̇ q + v ∧̇ r` with `r = e − p − q`.
#[derive(Debug, Clone, Serialize)]
pub struct TripleDecomposition {
    pub r: HermitianMatrix,
    pub reconstruction_residual: f64,
    pub in_ac_r: bool,
    pub in_ac_sum: bool,
    /// Violated hypotheses, if any.
    pub precondition: Option<String>,
    pub holds: bool,
}

pub fn triple_decomposition(
    v: &HermitianMatrix,
    p: &OrderProjection,
    q: &OrderProjection,
    ctx: &ModelContext,
    tol: &ToleranceProfile,
) -> Result<TripleDecomposition> {
    ctx.check_dim(v)?;
    let (pm, qm) = (&p.matrix, &q.matrix);
    let sum = pm.try_add(qm)?;
    let r = &ctx.unit - &sum;
    let mut problems = Vec::new();
    if !leq(&sum, &ctx.unit, tol)?.holds {
        problems.push("p + q is not below e");
    }
    if !ac_membership(v, p, ctx, tol)?.holds || !ac_membership(v, q, ctx, tol)?.holds {
        problems.push("v is not in AC(p)+ and AC(q)+");
    }
    if opn(v, tol)? > 1.0 + tol.threshold(1.0) {
        problems.push("norm of v exceeds 1");
    }
    let pieces = &(&meet(v, pm, tol)? + &meet(v, qm, tol)?) + &meet(v, &r, tol)?;
    let reconstruction_residual = opn(&(v - &pieces), tol)?;
    let ac = |proj: &HermitianMatrix| -> Result<bool> {
        let op = OrderProjection::measure(proj, ctx, tol)?;
        Ok(p_decompose(v, &op, tol)?.in_ac(tol))
    };
    let in_ac_r = ac(&r)?;
    let in_ac_sum = ac(&sum)?;
    let precondition = (!problems.is_empty()).then(|| problems.join("; "));
    let holds = reconstruction_residual <= tol.threshold(1.0) && in_ac_r && in_ac_sum;
    Ok(TripleDecomposition {
        r,
        reconstruction_residual,
        in_ac_r,
        in_ac_sum,
        precondition,
        holds,
    })
}

/// Residuals of the compression identities for `p ≤ q`.
#[derive(Debug, Clone, Serialize)]
pub struct CompressionIdentities {
    /// `C_p C_q v = C_q C_p v = C_p v`.
    pub nested: f64,
    /// `C_p C_q′ v = 0`.
    pub annihilate: f64,
    /// `C_p′ C_q v = C_q v − C_p v`.
    pub difference: f64,
    /// `C_p′ C_q′ v = C_q′ v`.
    pub complement: f64,
    pub threshold: f64,
    pub holds: bool,
}

pub fn compression_commute(
    v: &HermitianMatrix,
    p: &OrderProjection,
    q: &OrderProjection,
    tol: &ToleranceProfile,
) -> Result<CompressionIdentities> {
    if !leq(&p.matrix, &q.matrix, tol)?.holds {
        return Err(Error::Precondition("compression identities need p <= q".into()));
    }
    let (pc, qc) = (p.complement(), q.complement());
    let cp = p.compress(v);
    let cq = q.compress(v);
    let nested = opn(&(&p.compress(&cq) - &cp), tol)?.max(opn(&(&q.compress(&cp) - &cp), tol)?);
    let annihilate = opn(&p.compress(&qc.compress(v)), tol)?;
    let difference = opn(&(&pc.compress(&cq) - &(&cq - &cp)), tol)?;
    let complement = opn(&(&pc.compress(&qc.compress(v)) - &qc.compress(v)), tol)?;
    let threshold = tol.threshold(opn(v, tol)?);
    let holds = [nested, annihilate, difference, complement]
        .iter()
        .all(|&r| r <= threshold);
    Ok(CompressionIdentities {
        nested,
        annihilate,
        difference,
        complement,
        threshold,
        holds,
    })
}

/// Searches `p V p` for `v` with `|v| ≰ ‖v‖ p`.
pub fn absolute_order_unit_property_check(
    p: &OrderProjection,
    samples: usize,
    seed: u64,
    tol: &ToleranceProfile,
) -> Result<OrthoVerdict> {
    let mut rng = rng_from_seed(seed);
    let mut worst: f64 = 0.0;
    let thr = tol.psd_threshold(1.0);
    for _ in 0..samples {
        let v = p.compress(&random_hermitian(&mut rng, p.dim()));
        let nv = opn(&v, tol)?;
        if nv <= tol.atol {
            continue;
        }
        let gap = &p.matrix.scale(nv) - &abs_value(&v, tol)?;
        let residual = is_psd(&gap, tol)?.residual / nv;
        if residual > thr {
            let mut verdict = OrthoVerdict::new(residual, thr);
            verdict.witness = vec![v];
            return Ok(verdict);
        }
        worst = worst.max(residual);
    }
    Ok(OrthoVerdict::new(worst, thr))
}
