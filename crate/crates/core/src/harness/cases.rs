//! The case registry: one generator and one claim bundle per statement.

use rand::Rng as _;

use super::{entry, Claim, Expectation, Instance, TheoremCase};
use crate::calculus::{is_psd, norm, op_norm, sqrt_psd, NormKind};
use crate::error::Result;
use crate::matrix::{DenseMatrix, HermitianMatrix};
use crate::models::{
    basis_projection, block_compatible, direct_sum, masked_projection, orthogonal_support_pair, random_basis,
    random_unit_interval, uniform_values, with_spectrum, Rng,
};
use crate::order::{
    abs_value, band_residual, is_abs_infty_orthogonal, is_abs_orthogonal, is_absolutely_compatible, is_p_orthogonal,
    join, meet, pos_neg_parts, symmetrized_product_check, InftyMode, ModelContext, ModelKind, PNorm,
    DEFAULT_COEFFICIENTS,
};
use crate::projections::{
    absolute_order_unit_property_check, ac_membership, additive_meet_identity, compression_commute, cover,
    cover_residual, inf_sup_with_projection, meet_compatibility_check, op_meet_join, p_decompose, projection_profile,
    s_set_closure, span_projection, triple_decomposition, OrderProjection,
};
use crate::spectral::{
    c_pm, cover_compatibility, e_alpha, family_properties, oracle_compare, sandwich_check, spectral_decompose,
    spectral_family, Sign,
};
use crate::tolerance::ToleranceProfile;

type H = HermitianMatrix;

const ALL: &[ModelKind] = &[
    ModelKind::MatrixInfty,
    ModelKind::MatrixTrace1,
    ModelKind::DiagonalLattice,
];

fn holds(_: &ModelContext) -> Expectation {
    Expectation::Holds
}

/// Counterexamples exist in the matrix models but not in the lattice model.
fn matrix_counterexample(ctx: &ModelContext) -> Expectation {
    if ctx.is_diagonal() {
        Expectation::Holds
    } else {
        Expectation::Counterexample
    }
}

const fn case(
    id: &'static str,
    summary: &'static str,
    generate: fn(&mut Rng, &ModelContext) -> Result<Instance>,
    check: fn(&Instance, &ModelContext, &ToleranceProfile) -> Result<Vec<Claim>>,
) -> TheoremCase {
    TheoremCase {
        id,
        summary,
        kinds: ALL,
        min_dim: 2,
        generate,
        check,
        expectation: holds,
        fixed: None,
    }
}

static REGISTRY: &[TheoremCase] = &[
    case(
        "thm-001",
        "product vanishing vs normalized-sum orthogonality",
        gen_thm001,
        check_thm001,
    ),
    case(
        "prop-8",
        "product vanishing, sampled orthogonality and trivial common lower bounds",
        gen_prop8,
        check_prop8,
    ),
    case(
        "thm-1",
        "cone/absolute value, join, meet and orthogonality axiom sets",
        gen_thm1,
        check_thm1,
    ),
    TheoremCase {
        kinds: &[ModelKind::DiagonalLattice, ModelKind::MatrixInfty],
        ..case(
            "thm-3-diagonal",
            "lattice conditions on the commutative model",
            gen_thm3,
            check_thm3,
        )
    },
    case(
        "rem-4",
        "meet-zero rules and the reflection identity",
        gen_rem4,
        check_rem4,
    ),
    case("def-2", "absolutely ordered space axioms", gen_def2, check_def2),
    case(
        "def-p-orth",
        "p-orthogonality of orthogonal pairs",
        gen_orth_and_overlap,
        check_def_p_orth,
    ),
    case(
        "prop-6",
        "norm of parts, p-orthogonality and the unit ball",
        gen_prop6,
        check_prop6,
    ),
    case(
        "rem-7",
        "order smoothness and orthogonality transfer",
        gen_rem7,
        check_rem7,
    ),
    TheoremCase {
        expectation: matrix_counterexample,
        fixed: Some(fixed_triangle),
        ..case(
            "cx-triangle",
            "triangle inequality for the absolute value",
            gen_cx_pair,
            check_cx_triangle,
        )
    },
    TheoremCase {
        expectation: matrix_counterexample,
        fixed: Some(fixed_join_assoc),
        ..case(
            "cx-join-assoc",
            "associativity of the join",
            gen_cx_triple,
            check_cx_join_assoc,
        )
    },
    TheoremCase {
        expectation: matrix_counterexample,
        fixed: Some(fixed_noncommuting),
        ..case(
            "cx-noncommuting-compat",
            "compatibility of rank-one projections",
            gen_cx_projections,
            check_cx_noncommuting,
        )
    },
    case(
        "prop-17",
        "orthogonality inside [0, e] via the compatibility identity",
        gen_prop17,
        check_prop17,
    ),
    case(
        "prop-14",
        "the compatibility identity forces [0, e]",
        gen_prop14,
        check_prop14,
    ),
    case(
        "prop-15",
        "six meet characterizations of compatibility",
        gen_candidate_pair,
        check_prop15,
    ),
    case(
        "prop-16",
        "compatibility via orthogonal meets",
        gen_candidate_pair,
        check_prop16,
    ),
    case(
        "rem-17a",
        "compatibility of meet and join; self-compatibility",
        gen_rem17a,
        check_rem17a,
    ),
    case(
        "prop-11",
        "compatibility identity vs symmetrized product",
        gen_prop11,
        check_prop11,
    ),
    case(
        "cor-11",
        "scaled symmetrized product for positive pairs",
        gen_cor11,
        check_cor11,
    ),
    case(
        "prop-12",
        "compatibility with a projection vs commuting",
        gen_prop12,
        check_prop12,
    ),
    case(
        "cor-12",
        "compatibility with a projection for positive elements",
        gen_cor12,
        check_cor12,
    ),
    case(
        "prop-13",
        "commuting projections vs projection meets",
        gen_projection_pair,
        check_prop13,
    ),
    case("thm-18", "projection predicates agree", gen_thm18, check_thm18),
    case(
        "prop-26",
        "four conditions for sums of order projections",
        gen_prop26,
        check_prop26,
    ),
    case(
        "prop-27",
        "orthogonal splits of an order projection",
        gen_prop27,
        check_prop27,
    ),
    case(
        "cor-28",
        "differences of nested order projections",
        gen_nested,
        check_cor28,
    ),
    case(
        "prop-29",
        "meet/join identities and orthogonal remainders",
        gen_prop29,
        check_prop29,
    ),
    case("thm-30", "meet/join membership in OP", gen_projection_pair, check_thm30),
    case(
        "thm-31",
        "meet membership vs compatibility",
        gen_projection_pair,
        check_thm31,
    ),
    case(
        "rem-32",
        "closure of OP under meets and joins of compatible pairs",
        gen_projection_pair,
        check_rem32,
    ),
    case(
        "prop-33",
        "meet membership vs the absolute difference",
        gen_projection_pair,
        check_prop33,
    ),
    case(
        "thm-34",
        "infimum in OP of compatible projections",
        gen_projection_pair,
        check_thm34,
    ),
    case(
        "cor-35",
        "supremum in OP of compatible projections",
        gen_projection_pair,
        check_cor35,
    ),
    case(
        "s-set",
        "closure of S under absolute differences",
        gen_commuting_projections,
        check_s_set,
    ),
    case(
        "lattice-op",
        "infimum and supremum in OP against a span oracle",
        gen_projection_pair,
        check_lattice_op,
    ),
    case(
        "cover-def",
        "covers: membership, minimality and orthogonality",
        gen_cover_def,
        check_cover_def,
    ),
    case(
        "prop-19",
        "absolute order unit property of order projections",
        gen_thm18,
        check_prop19,
    ),
    case("prop-21", "direct sums of orthogonal corners", gen_prop21, check_prop21),
    case("thm-23", "corner decomposition via meets", gen_thm23, check_thm23),
    case(
        "cor-24",
        "compatibility with p vs membership in AC(p)",
        gen_cor24,
        check_cor24,
    ),
    case(
        "prop-22",
        "infimum and supremum with a compatible projection",
        gen_prop22,
        check_prop22,
    ),
    case(
        "thm-25",
        "additivity of meets with scaled projections",
        gen_thm25,
        check_thm25,
    ),
    case("def-cp", "the p-decomposition", gen_def_cp, check_def_cp),
    case(
        "prop-43",
        "commuting compressions for nested projections",
        gen_prop43,
        check_prop43,
    ),
    TheoremCase {
        min_dim: 3,
        ..case("thm-46", "three-corner decomposition", gen_thm46, check_thm46)
    },
    case(
        "cor-45",
        "AC membership for sums and differences",
        gen_cor45,
        check_cor45,
    ),
    TheoremCase {
        min_dim: 3,
        ..case(
            "rem-47",
            "AC membership for families of projections",
            gen_rem47,
            check_rem47,
        )
    },
    case("rem-48", "covers of positive elements", gen_psd_and_alpha, check_rem48),
    case(
        "prop-49",
        "monotonicity and bounds of the covers",
        gen_hermitian_alphas,
        check_prop49,
    ),
    case(
        "thm-50",
        "covers stay compatible with p",
        gen_block_hermitian,
        check_thm50,
    ),
    case(
        "prop-51",
        "compression bounds vs the cover sandwich",
        gen_block_hermitian,
        check_prop51,
    ),
    case(
        "prop-52",
        "right continuity of the spectral family",
        gen_hermitian_alphas,
        check_prop52,
    ),
    case(
        "thm-53",
        "characterizing properties of the spectral family",
        gen_block_hermitian,
        check_thm53,
    ),
    case("thm-54", "step-function approximation error", gen_thm54, check_thm54),
    case(
        "spectral-oracle",
        "spectral family vs eigenprojections",
        gen_hermitian_alphas,
        check_spectral_oracle,
    ),
];

pub fn registry() -> &'static [TheoremCase] {
    REGISTRY
}

// ---------------------------------------------------------------------------
// generators

fn basis(rng: &mut Rng, ctx: &ModelContext) -> DenseMatrix {
    random_basis(rng, ctx.dim, ctx.is_diagonal())
}

fn spectrum(rng: &mut Rng, ctx: &ModelContext, lo: f64, hi: f64) -> H {
    let b = basis(rng, ctx);
    let values = uniform_values(rng, ctx.dim, lo, hi);
    with_spectrum(&b, &values)
}

fn hermitian(rng: &mut Rng, ctx: &ModelContext) -> H {
    spectrum(rng, ctx, -1.5, 1.5)
}

fn psd(rng: &mut Rng, ctx: &ModelContext) -> H {
    spectrum(rng, ctx, 0.0, 1.5)
}

fn unit(rng: &mut Rng, ctx: &ModelContext) -> H {
    let b = basis(rng, ctx);
    random_unit_interval(rng, &b)
}

/// Mask with `lo ≤ count ≤ hi` selected entries.
fn mask(rng: &mut Rng, n: usize, lo: usize, hi: usize) -> Vec<bool> {
    let k = rng.random_range(lo..=hi.min(n));
    let mut m: Vec<bool> = (0..n).map(|i| i < k).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        m.swap(i, j);
    }
    m
}

fn projection(rng: &mut Rng, ctx: &ModelContext, lo: usize, hi: usize) -> H {
    let b = basis(rng, ctx);
    let m = mask(rng, ctx.dim, lo, hi);
    masked_projection(&b, &m)
}

/// `0 ≤ x ≤ a` as `a^{1/2} k a^{1/2}` with `k ∈ [0, e]`.
fn below(rng: &mut Rng, ctx: &ModelContext, a: &H) -> Result<H> {
    let k = unit(rng, ctx);
    let root = sqrt_psd(a, &ToleranceProfile::default())?;
    Ok(k.conjugate_by(root.as_dense()))
}

/// `Σ P_i K_i P_i` with each `K_i` spectrally in `[lo, hi]`.
fn block_element(rng: &mut Rng, ctx: &ModelContext, projs: &[&H], lo: f64, hi: f64) -> H {
    let mut out = H::zeros(ctx.dim);
    for p in projs {
        let k = spectrum(rng, ctx, lo, hi);
        out = &out + &k.compress(p);
    }
    out
}

/// Projections onto a random partition of a shared eigenbasis into `parts`
/// groups (some possibly empty).
fn partition(rng: &mut Rng, ctx: &ModelContext, parts: usize) -> Vec<H> {
    let b = basis(rng, ctx);
    let labels: Vec<usize> = (0..ctx.dim).map(|_| rng.random_range(0..parts)).collect();
    (0..parts)
        .map(|g| {
            let m: Vec<bool> = labels.iter().map(|&l| l == g).collect();
            masked_projection(&b, &m)
        })
        .collect()
}

/// Commuting pair in `[0, e]` with one of the two eigenvalues extreme in
/// every coordinate, hence compatible.
fn compatible_pair(rng: &mut Rng, ctx: &ModelContext) -> (H, H) {
    let b = basis(rng, ctx);
    let mut x = uniform_values(rng, ctx.dim, 0.0, 1.0);
    let mut y = uniform_values(rng, ctx.dim, 0.0, 1.0);
    for i in 0..ctx.dim {
        let extreme = if rng.random_bool(0.5) { 1.0 } else { 0.0 };
        if rng.random_bool(0.5) {
            x[i] = extreme;
        } else {
            y[i] = extreme;
        }
    }
    (with_spectrum(&b, &x), with_spectrum(&b, &y))
}

/// A pair in `[0, e]` that is decisively incompatible: interior spectra in
/// unrelated bases (commuting interior spectra in the lattice model).
fn incompatible_pair(rng: &mut Rng, ctx: &ModelContext) -> (H, H) {
    let b1 = basis(rng, ctx);
    let b2 = if ctx.is_diagonal() { b1.clone() } else { basis(rng, ctx) };
    let x = uniform_values(rng, ctx.dim, 0.1, 0.9);
    let y = uniform_values(rng, ctx.dim, 0.1, 0.9);
    (with_spectrum(&b1, &x), with_spectrum(&b2, &y))
}

fn candidate_pair(rng: &mut Rng, ctx: &ModelContext) -> (H, H) {
    if rng.random_bool(0.5) {
        compatible_pair(rng, ctx)
    } else {
        incompatible_pair(rng, ctx)
    }
}

/// Two order projections; half the time built on one eigenbasis.
fn projection_pair(rng: &mut Rng, ctx: &ModelContext) -> (H, H) {
    let n = ctx.dim;
    if rng.random_bool(0.5) || ctx.is_diagonal() {
        let b = basis(rng, ctx);
        (
            masked_projection(&b, &mask(rng, n, 0, n)),
            masked_projection(&b, &mask(rng, n, 0, n)),
        )
    } else {
        (projection(rng, ctx, 1, n - 1), projection(rng, ctx, 1, n - 1))
    }
}

/// PSD pair with `‖cd‖ > 0.1 ‖c‖ ‖d‖`.
fn overlapping_pair(rng: &mut Rng, ctx: &ModelContext) -> Result<(H, H)> {
    let tol = ToleranceProfile::default();
    for _ in 0..64 {
        let c = spectrum(rng, ctx, 0.05, 1.0);
        let d = spectrum(rng, ctx, 0.05, 1.0);
        let ratio = c.matmul(&d).operator_norm()? / (op_norm(&c, &tol)? * op_norm(&d, &tol)?);
        if ratio > 0.1 {
            return Ok((c, d));
        }
    }
    let c = spectrum(rng, ctx, 0.05, 1.0);
    Ok((c.clone(), c))
}

fn gen_thm001(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let b = basis(rng, ctx);
    let (a, bb) = orthogonal_support_pair(rng, &b);
    let (c, d) = overlapping_pair(rng, ctx)?;
    Ok(Instance::new(vec![a, bb, c, d], vec![]))
}

fn gen_prop8(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let b = basis(rng, ctx);
    let (a, bb) = orthogonal_support_pair(rng, &b);
    // commuting pair whose supports are disjoint half the time
    let shared = basis(rng, ctx);
    let mut x = uniform_values(rng, ctx.dim, 0.05, 1.0);
    let mut y = uniform_values(rng, ctx.dim, 0.05, 1.0);
    if rng.random_bool(0.5) {
        let m = mask(rng, ctx.dim, 1, ctx.dim - 1);
        for i in 0..ctx.dim {
            if m[i] {
                x[i] = 0.0;
            } else {
                y[i] = 0.0;
            }
        }
    }
    Ok(Instance::new(
        vec![a, bb, with_spectrum(&shared, &x), with_spectrum(&shared, &y)],
        vec![],
    ))
}

fn gen_thm1(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (u, v, w) = (hermitian(rng, ctx), hermitian(rng, ctx), hermitian(rng, ctx));
    let x = psd(rng, ctx);
    let b = basis(rng, ctx);
    let (a, bb) = orthogonal_support_pair(rng, &b);
    let below_v = &v - &psd(rng, ctx);
    let above_v = &v + &psd(rng, ctx);
    let k: f64 = rng.random_range(-2.0..2.0);
    let kpos: f64 = rng.random_range(0.0..2.0);
    Ok(Instance::new(vec![u, v, w, x, a, bb, below_v, above_v], vec![k, kpos]))
}

fn gen_thm3(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    // In the matrix model, a triple sharing one eigenbasis.
    let b = basis(rng, ctx);
    let n = ctx.dim;
    let (x, y, z) = (
        uniform_values(rng, n, -1.5, 1.5),
        uniform_values(rng, n, -1.5, 1.5),
        uniform_values(rng, n, -1.5, 1.5),
    );
    let extra = uniform_values(rng, n, 0.0, 1.0);
    let max: Vec<f64> = y.iter().zip(&z).map(|(a, c)| a.max(*c)).collect();
    let dominating: Vec<f64> = y.iter().zip(&extra).map(|(a, s)| a.abs() + s).collect();
    Ok(Instance::new(
        vec![
            with_spectrum(&b, &x),
            with_spectrum(&b, &y),
            with_spectrum(&b, &z),
            with_spectrum(&b, &max),
            with_spectrum(&b, &dominating),
        ],
        vec![],
    ))
}

/// `u` orthogonal to `v, w` (both supported on the complement of `u`), plus
/// `u ≤ s` for the reflection identity.
fn gen_rem4(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let tol = ToleranceProfile::default();
    let b = basis(rng, ctx);
    let (u, rest) = orthogonal_support_pair(rng, &b);
    let off = cover(&u, &tol)?.complement().matrix;
    let v = psd(rng, ctx).compress(&off);
    let w = psd(rng, ctx).compress(&off);
    let (pa, pb) = (u.clone(), rest);
    let s = &pa + &pb;
    let generic = below(rng, ctx, &s)?;
    Ok(Instance::new(vec![u, v, w, pa, s, generic], vec![]))
}

fn gen_def2(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let mut inst = gen_rem4(rng, ctx)?;
    let x = hermitian(rng, ctx);
    let p = psd(rng, ctx);
    let below_v = below(rng, ctx, &inst.matrices[1])?;
    let k: f64 = rng.random_range(-2.0..2.0);
    inst.matrices.extend([x, p, below_v]);
    inst.scalars.push(k);
    Ok(inst)
}

fn gen_orth_and_overlap(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    gen_thm001(rng, ctx)
}

fn gen_prop6(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let b = basis(rng, ctx);
    let (a, bb) = orthogonal_support_pair(rng, &b);
    let c = below(rng, ctx, &a)?;
    let d = below(rng, ctx, &bb)?;
    let v = hermitian(rng, ctx);
    let ball = spectrum(rng, ctx, -1.0, 1.0);
    Ok(Instance::new(vec![a, bb, c, d, v, ball], vec![]))
}

fn gen_rem7(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let u = hermitian(rng, ctx);
    let v = &u + &psd(rng, ctx);
    let w = &v + &psd(rng, ctx);
    let mut inst = gen_rem4(rng, ctx)?;
    let (c, d) = overlapping_pair(rng, ctx)?;
    let alpha: f64 = rng.random_range(-2.0..2.0);
    let beta: f64 = rng.random_range(-2.0..2.0);
    inst.matrices.extend([u, v, w, c, d]);
    inst.scalars.extend([alpha, beta]);
    Ok(inst)
}

fn gen_cx_pair(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    Ok(Instance::new(vec![hermitian(rng, ctx), hermitian(rng, ctx)], vec![]))
}

fn gen_cx_triple(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    Ok(Instance::new(
        vec![hermitian(rng, ctx), hermitian(rng, ctx), hermitian(rng, ctx)],
        vec![],
    ))
}

fn gen_cx_projections(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    Ok(Instance::new(
        vec![projection(rng, ctx, 1, 1), projection(rng, ctx, 1, 1)],
        vec![],
    ))
}

fn pad(h: H, n: usize) -> H {
    if h.dim() >= n {
        h
    } else {
        direct_sum(&h, &H::zeros(n - h.dim()))
    }
}

fn fixed_triangle(ctx: &ModelContext) -> Option<Instance> {
    if ctx.is_diagonal() {
        return None;
    }
    let a = H::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).ok()?;
    let b = H::diag(&[0.0, -2.0]);
    Some(Instance::new(vec![pad(a, ctx.dim), pad(b, ctx.dim)], vec![]))
}

fn fixed_join_assoc(ctx: &ModelContext) -> Option<Instance> {
    if ctx.is_diagonal() {
        return None;
    }
    let a = H::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).ok()?;
    let b = H::diag(&[0.0, -2.0]);
    let c = H::diag(&[-2.0, 1.0]);
    Some(Instance::new(
        vec![pad(a, ctx.dim), pad(b, ctx.dim), pad(c, ctx.dim)],
        vec![],
    ))
}

fn fixed_noncommuting(ctx: &ModelContext) -> Option<Instance> {
    if ctx.is_diagonal() {
        return None;
    }
    let p = H::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).ok()?;
    let q = H::diag(&[1.0, 0.0]);
    // pad with an identity block so the pair stays incompatible in every dimension
    let fill = |h: H| {
        if ctx.dim > 2 {
            direct_sum(&h, &H::identity(ctx.dim - 2))
        } else {
            h
        }
    };
    Some(Instance::new(vec![fill(p), fill(q)], vec![]))
}

fn gen_prop17(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let b = basis(rng, ctx);
    let (a, bb) = orthogonal_support_pair(rng, &b);
    let (c, d) = incompatible_pair(rng, ctx);
    let (x, y) = compatible_pair(rng, ctx);
    Ok(Instance::new(vec![a, bb, c, d, x, y], vec![]))
}

fn gen_prop14(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (u, v) = candidate_pair(rng, ctx);
    let big = spectrum(rng, ctx, -1.5, 1.5);
    let scale = 1.5 / op_norm(&big, &ToleranceProfile::default())?.max(1e-3);
    let w = hermitian(rng, ctx);
    Ok(Instance::new(vec![u, v, big.scale(scale), w], vec![]))
}

fn gen_candidate_pair(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (u, v) = candidate_pair(rng, ctx);
    Ok(Instance::new(vec![u, v], vec![]))
}

fn gen_rem17a(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (u, v) = candidate_pair(rng, ctx);
    let single = if rng.random_bool(0.5) {
        projection(rng, ctx, 0, ctx.dim)
    } else {
        spectrum(rng, ctx, 0.1, 0.9)
    };
    Ok(Instance::new(vec![u, v, single], vec![]))
}

fn gen_prop11(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (a, b) = match rng.random_range(0..5) {
        0 => incompatible_pair(rng, ctx),
        1 => {
            let bs = basis(rng, ctx);
            let rank = rng.random_range(0..=ctx.dim);
            block_compatible(rng, &bs, rank, ctx.is_diagonal())
        }
        _ => {
            let bs = basis(rng, ctx);
            let x = uniform_values(rng, ctx.dim, 0.0, 1.0);
            let y = uniform_values(rng, ctx.dim, 0.0, 1.0);
            if rng.random_bool(0.5) {
                compatible_pair(rng, ctx)
            } else {
                (with_spectrum(&bs, &x), with_spectrum(&bs, &y))
            }
        }
    };
    let (c, d) = (hermitian(rng, ctx), hermitian(rng, ctx));
    Ok(Instance::new(vec![a, b, c, d], vec![]))
}

fn gen_cor11(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (a, b) = candidate_pair(rng, ctx);
    let s: f64 = rng.random_range(0.2..3.0);
    let t: f64 = rng.random_range(0.2..1.0);
    Ok(Instance::new(vec![a.scale(s), b.scale(s * t)], vec![]))
}

fn gen_prop12(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let n = ctx.dim;
    let (p, a) = if rng.random_bool(0.5) || ctx.is_diagonal() {
        let b = basis(rng, ctx);
        let rank = rng.random_range(0..=n);
        block_compatible(rng, &b, rank, ctx.is_diagonal())
    } else {
        (projection(rng, ctx, 1, n - 1), spectrum(rng, ctx, 0.1, 0.9))
    };
    Ok(Instance::new(vec![a, p], vec![]))
}

fn gen_cor12(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let mut inst = gen_prop12(rng, ctx)?;
    let s: f64 = rng.random_range(0.5..3.0);
    inst.matrices[0] = inst.matrices[0].scale(s);
    Ok(inst)
}

fn gen_projection_pair(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (p, q) = projection_pair(rng, ctx);
    Ok(Instance::new(vec![p, q], vec![]))
}

fn gen_commuting_projections(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let b = basis(rng, ctx);
    let n = ctx.dim;
    Ok(Instance::new(
        vec![
            masked_projection(&b, &mask(rng, n, 0, n)),
            masked_projection(&b, &mask(rng, n, 0, n)),
        ],
        vec![],
    ))
}

fn gen_thm18(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let a = if rng.random_bool(0.5) {
        projection(rng, ctx, 0, ctx.dim)
    } else {
        spectrum(rng, ctx, 0.1, 0.9)
    };
    Ok(Instance::new(vec![a], vec![]))
}

fn gen_prop26(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let n = ctx.dim;
    let (p, q) = if rng.random_bool(0.5) {
        let parts = partition(rng, ctx, 3);
        (parts[0].clone(), parts[1].clone())
    } else {
        (projection(rng, ctx, 1, n), projection(rng, ctx, 1, n))
    };
    Ok(Instance::new(vec![p, q], vec![]))
}

fn gen_prop27(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (u, v) = if rng.random_bool(0.5) {
        let parts = partition(rng, ctx, 3);
        (parts[0].clone(), parts[1].clone())
    } else {
        let p = projection(rng, ctx, 1, ctx.dim);
        let half = p.scale(0.5);
        (half.clone(), half)
    };
    Ok(Instance::new(vec![u, v], vec![]))
}

fn gen_nested(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 3);
    let p = parts[0].clone();
    let q = &parts[0] + &parts[1];
    Ok(Instance::new(vec![p, q], vec![]))
}

fn gen_prop29(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let (u, v) = (hermitian(rng, ctx), hermitian(rng, ctx));
    Ok(Instance::new(vec![u, v], vec![]))
}

fn gen_cover_def(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let n = ctx.dim;
    let b = basis(rng, ctx);
    let m = mask(rng, n, 1, n);
    let values: Vec<f64> = uniform_values(rng, n, -1.5, 1.5)
        .into_iter()
        .zip(&m)
        .map(|(x, &keep)| if keep { x } else { 0.0 })
        .collect();
    let v = with_spectrum(&b, &values);
    let r = projection(rng, ctx, 0, n);
    let b2 = basis(rng, ctx);
    let (x, y) = orthogonal_support_pair(rng, &b2);
    Ok(Instance::new(vec![v, r, x, y], vec![]))
}

fn gen_prop21(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 3);
    let x = hermitian(rng, ctx).compress(&parts[0]);
    let y = hermitian(rng, ctx).compress(&parts[1]);
    Ok(Instance::new(vec![parts[0].clone(), parts[1].clone(), x, y], vec![]))
}

fn gen_thm23(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 3);
    let (p, q) = (parts[0].clone(), parts[1].clone());
    let w = if rng.random_bool(0.5) {
        block_element(rng, ctx, &[&p, &q], 0.0, 1.0)
    } else {
        spectrum(rng, ctx, 0.1, 0.9)
    };
    Ok(Instance::new(vec![p, q, w], vec![]))
}

fn gen_cor24(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let inst = gen_prop12(rng, ctx)?;
    Ok(inst)
}

fn gen_prop22(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let b = basis(rng, ctx);
    let rank = rng.random_range(0..=ctx.dim);
    let (p, u) = block_compatible(rng, &b, rank, ctx.is_diagonal());
    Ok(Instance::new(vec![u, p], vec![]))
}

fn gen_thm25(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let b = basis(rng, ctx);
    let rank = rng.random_range(0..=ctx.dim);
    let p = basis_projection(&b, rank);
    let pc = &H::identity(ctx.dim) - &p;
    let mut ms = vec![p.clone()];
    for _ in 0..3 {
        let s: f64 = rng.random_range(0.2..2.0);
        ms.push(block_element(rng, ctx, &[&p, &pc], 0.0, 1.0).scale(s));
    }
    Ok(Instance::new(ms, vec![]))
}

fn gen_def_cp(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 2);
    let (p, pc) = (parts[0].clone(), parts[1].clone());
    let v = block_element(rng, ctx, &[&p, &pc], -1.5, 1.5);
    let w = block_element(rng, ctx, &[&p, &pc], -1.5, 1.5);
    let u = block_element(rng, ctx, &[&p, &pc], 0.0, 1.5);
    let lambda: f64 = rng.random_range(-2.0..2.0);
    Ok(Instance::new(vec![p, v, w, u], vec![lambda]))
}

fn gen_prop43(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 3);
    let p = parts[0].clone();
    let q = &parts[0] + &parts[1];
    let v = block_element(rng, ctx, &[&parts[0], &parts[1], &parts[2]], -1.5, 1.5);
    Ok(Instance::new(vec![p, q, v], vec![]))
}

fn gen_thm46(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 3);
    let v = block_element(rng, ctx, &[&parts[0], &parts[1], &parts[2]], 0.0, 1.0);
    Ok(Instance::new(vec![parts[0].clone(), parts[1].clone(), v], vec![]))
}

fn gen_cor45(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 3);
    let w = block_element(rng, ctx, &[&parts[0], &parts[1], &parts[2]], 0.0, 1.5);
    let nested = &parts[0] + &parts[1];
    Ok(Instance::new(
        vec![parts[0].clone(), parts[1].clone(), nested, w],
        vec![],
    ))
}

fn gen_rem47(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let k = ctx.dim.min(4);
    let parts = partition(rng, ctx, k);
    let refs: Vec<&H> = parts.iter().collect();
    let w = block_element(rng, ctx, &refs, 0.0, 1.5);
    let mut ms = parts.clone();
    ms.push(w);
    Ok(Instance::new(ms, vec![]))
}

fn gen_psd_and_alpha(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let v = psd(rng, ctx);
    let neg: f64 = rng.random_range(-2.0..-1e-3);
    let pos: f64 = rng.random_range(1e-3..2.0);
    Ok(Instance::new(vec![v], vec![neg, pos]))
}

fn gen_hermitian_alphas(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let v = hermitian(rng, ctx);
    let alphas = uniform_values(rng, 20, -2.0, 2.0);
    Ok(Instance::new(vec![v], alphas))
}

fn gen_block_hermitian(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let parts = partition(rng, ctx, 2);
    let v = block_element(rng, ctx, &[&parts[0], &parts[1]], -1.5, 1.5);
    let alphas = uniform_values(rng, 6, -2.0, 2.0);
    Ok(Instance::new(vec![v, parts[0].clone()], alphas))
}

fn gen_thm54(rng: &mut Rng, ctx: &ModelContext) -> Result<Instance> {
    let v = hermitian(rng, ctx);
    let eps = [0.5, 0.1, 0.01][rng.random_range(0..3)];
    Ok(Instance::new(vec![v], vec![eps]))
}

// ---------------------------------------------------------------------------
// claim helpers

fn opn(h: &H, tol: &ToleranceProfile) -> Result<f64> {
    op_norm(h, tol)
}

/// `a = b` within the threshold at the scale of the inputs.
fn same(label: &str, a: &H, b: &H, tol: &ToleranceProfile) -> Result<Claim> {
    let scale = opn(a, tol)?.max(opn(b, tol)?);
    Ok(Claim::bound(label, opn(&(a - b), tol)?, tol.threshold(scale)))
}

fn same_if(label: &str, premise: bool, a: &H, b: &H, tol: &ToleranceProfile) -> Result<Claim> {
    let mut c = same(label, a, b, tol)?;
    if !premise {
        c = Claim::implies(label, false, 0.0, c.threshold);
    }
    Ok(c)
}

/// `h ≥ 0`.
fn positive(label: &str, h: &H, tol: &ToleranceProfile) -> Result<Claim> {
    let scale = opn(h, tol)?;
    Ok(Claim::bound(label, is_psd(h, tol)?.residual, tol.psd_threshold(scale)))
}

/// `a ≤ b`.
fn below_claim(label: &str, a: &H, b: &H, tol: &ToleranceProfile) -> Result<Claim> {
    positive(label, &(b - a), tol)
}

fn psd_entry(h: &H, tol: &ToleranceProfile) -> Result<(bool, f64, f64)> {
    let r = is_psd(h, tol)?.residual;
    let t = tol.psd_threshold(opn(h, tol)?);
    Ok((r <= t, r, t))
}

fn leq_entry(a: &H, b: &H, tol: &ToleranceProfile) -> Result<(bool, f64, f64)> {
    psd_entry(&(b - a), tol)
}

fn eq_entry(a: &H, b: &H, tol: &ToleranceProfile) -> Result<(bool, f64, f64)> {
    let r = opn(&(a - b), tol)?;
    let t = tol.threshold(opn(a, tol)?.max(opn(b, tol)?));
    Ok((r <= t, r, t))
}

/// Membership in `OP(V)` with its residual.
fn op_entry(h: &H, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<(bool, f64, f64)> {
    let band = band_residual(h, tol)?;
    let band_thr = tol.psd_threshold(1.0);
    if band > band_thr {
        return Ok((false, band, band_thr));
    }
    let m = OrderProjection::measure(h, ctx, tol)?;
    let t = tol.threshold(1.0);
    Ok((m.op_residual <= t, m.op_residual, t))
}

/// Conjunction of entries: holds iff all hold; the residual is that of the
/// first failing entry, else the largest.
fn all_of(entries: &[(bool, f64, f64)]) -> (bool, f64, f64) {
    if let Some(&bad) = entries.iter().find(|e| !e.0) {
        return bad;
    }
    entries
        .iter()
        .copied()
        .fold((true, 0.0, 0.0), |acc, e| if e.1 >= acc.1 { e } else { acc })
}

fn commute_entry(a: &H, b: &H, tol: &ToleranceProfile) -> Result<(bool, f64, f64)> {
    let r = a.commutator(b).operator_norm()?;
    let t = tol.threshold(1.0);
    Ok((r <= t, r, t))
}

fn compat_entry(u: &H, v: &H, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<(bool, f64, f64)> {
    Ok(entry(&is_absolutely_compatible(u, v, ctx, tol)?))
}

fn orth_entry(u: &H, v: &H, tol: &ToleranceProfile) -> Result<(bool, f64, f64)> {
    Ok(entry(&is_abs_orthogonal(u, v, tol)?))
}

/// `|u − v| + |u + v − e| − e` without the band precheck.
fn raw_identity(u: &H, v: &H, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<f64> {
    let lhs = &abs_value(&(u - v), tol)? + &abs_value(&(&(u + v) - &ctx.unit), tol)?;
    opn(&(&lhs - &ctx.unit), tol)
}

fn p_norm(ctx: &ModelContext) -> PNorm {
    match ctx.norm_kind() {
        NormKind::Trace => PNorm::One,
        _ => PNorm::Infinity,
    }
}

// ---------------------------------------------------------------------------
// checks: orthogonality and the absolute value calculus

fn check_thm001(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (a, b, c, d) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    let orth = is_abs_orthogonal(a, b, tol)?;
    let oracle = is_abs_infty_orthogonal(a, b, InftyMode::Oracle, tol)?;
    let sampled = is_abs_infty_orthogonal(a, b, InftyMode::Sampled { samples: 16, seed: 1 }, tol)?;
    let overlap = is_abs_orthogonal(c, d, tol)?;
    let overlap_oracle = is_abs_infty_orthogonal(c, d, InftyMode::Oracle, tol)?;
    let overlap_sampled = is_abs_infty_orthogonal(c, d, InftyMode::Sampled { samples: 16, seed: 1 }, tol)?;
    Ok(vec![
        Claim::verdict("abs-orthogonal", &orth),
        Claim::verdict("infty-oracle", &oracle),
        Claim::verdict("infty-sampled", &sampled),
        Claim::refuted("overlap-not-orthogonal", &overlap),
        Claim::refuted("overlap-oracle-refutes", &overlap_oracle),
        Claim::agree(
            "overlap-verdicts-agree",
            &[entry(&overlap), entry(&overlap_oracle), entry(&overlap_sampled)],
        ),
    ])
}

fn check_prop8(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (a, b, c, d) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    let mut claims = Vec::new();
    // (1) ⇒ (2) on an orthogonal pair
    let product = is_abs_infty_orthogonal(a, b, InftyMode::Oracle, tol)?;
    let sampled = is_abs_infty_orthogonal(a, b, InftyMode::Sampled { samples: 16, seed: 2 }, tol)?;
    claims.push(Claim::verdict("product-vanishes", &product));
    claims.push(Claim::implies(
        "product-implies-sampled",
        product.holds,
        sampled.residual,
        sampled.threshold,
    ));
    // (2) ⇒ (3): the commuting meet is the largest common lower bound
    let m = meet(a, b, tol)?;
    claims.push(Claim::implies(
        "sampled-implies-trivial-lower-bounds",
        sampled.holds,
        opn(&m, tol)?,
        tol.threshold(1.0),
    ));
    // commuting pair: (3) ⇔ (1)
    let mc = meet(c, d, tol)?;
    claims.push(below_claim("meet-below-first", &mc, c, tol)?);
    claims.push(below_claim("meet-below-second", &mc, d, tol)?);
    let nm = opn(&mc, tol)?;
    let trivial = (nm <= tol.threshold(1.0), nm, tol.threshold(1.0));
    let oracle = is_abs_infty_orthogonal(c, d, InftyMode::Oracle, tol)?;
    claims.push(Claim::agree("commuting-bounds-vs-product", &[trivial, entry(&oracle)]));
    Ok(claims)
}

fn check_thm1(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v, w, x) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    let (a, b, below_v, above_v) = (inst.m(4), inst.m(5), inst.m(6), inst.m(7));
    let (k, kpos) = (inst.s(0), inst.s(1));
    let abs_v = abs_value(v, tol)?;
    let mut c = vec![
        same("1a-abs-of-positive", &abs_value(x, tol)?, x, tol)?,
        positive("1b-abs-plus", &(&abs_v + v), tol)?,
        positive("1b-abs-minus", &(&abs_v - v), tol)?,
        same(
            "1c-homogeneous",
            &abs_value(&v.scale(k), tol)?,
            &abs_v.scale(k.abs()),
            tol,
        )?,
        same("2a-join-idempotent", &join(v, v, tol)?, v, tol)?,
        same("2b-join-commutes", &join(v, w, tol)?, &join(w, v, tol)?, tol)?,
        same(
            "2c-join-translates",
            &(&join(u, v, tol)? + w),
            &join(&(u + w), &(v + w), tol)?,
            tol,
        )?,
        same(
            "2d-join-scales",
            &join(v, w, tol)?.scale(kpos),
            &join(&v.scale(kpos), &w.scale(kpos), tol)?,
            tol,
        )?,
        same("3a-meet-idempotent", &meet(v, v, tol)?, v, tol)?,
        same("3b-meet-commutes", &meet(v, w, tol)?, &meet(w, v, tol)?, tol)?,
        same(
            "3c-meet-translates",
            &(&meet(u, v, tol)? + w),
            &meet(&(u + w), &(v + w), tol)?,
            tol,
        )?,
        same(
            "3d-meet-scales",
            &meet(v, w, tol)?.scale(kpos),
            &meet(&v.scale(kpos), &w.scale(kpos), tol)?,
            tol,
        )?,
    ];
    // 2e: v ∨̇ w = v when w ≤ v
    let j = join(v, below_v, tol)?;
    c.push(same("2e-premise", &j, v, tol)?);
    c.push(same(
        "2e-conditional-associativity",
        &join(&join(u, v, tol)?, below_v, tol)?,
        &join(u, &j, tol)?,
        tol,
    )?);
    let m = meet(v, above_v, tol)?;
    c.push(same("3e-premise", &m, v, tol)?);
    c.push(same(
        "3e-conditional-associativity",
        &meet(&meet(u, v, tol)?, above_v, tol)?,
        &meet(u, &m, tol)?,
        tol,
    )?);
    let zero = H::zeros(x.dim());
    c.push(Claim::verdict(
        "4a-orthogonal-to-zero",
        &is_abs_orthogonal(x, &zero, tol)?,
    ));
    c.push(Claim::verdict("4b-symmetric", &is_abs_orthogonal(b, a, tol)?));
    c.push(Claim::verdict(
        "4c-scaled",
        &is_abs_orthogonal(&a.scale(kpos + 0.1), &b.scale(kpos + 0.1), tol)?,
    ));
    let (vp, vm) = pos_neg_parts(v, tol)?;
    c.push(Claim::verdict(
        "4d-parts-orthogonal",
        &is_abs_orthogonal(&vp, &vm, tol)?,
    ));
    c.push(same("4d-parts-reconstruct", &(&vp - &vm), v, tol)?);
    let (ap, am) = pos_neg_parts(&(a - b), tol)?;
    c.push(same("4d-unique-positive", &ap, a, tol)?);
    c.push(same("4d-unique-negative", &am, b, tol)?);
    Ok(c)
}

fn check_thm3(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v, w, max, dom) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3), inst.m(4));
    let premise = is_psd(&(dom - v), tol)?.holds && is_psd(&(dom + v), tol)?.holds;
    let abs_v = abs_value(v, tol)?;
    let gap = &(&abs_value(v, tol)? + &abs_value(w, tol)?) - &abs_value(&(v + w), tol)?;
    let dominated = is_psd(&(dom - &abs_v), tol)?.residual;
    Ok(vec![
        same("i-join-is-max", &join(v, w, tol)?, max, tol)?,
        same(
            "ii-join-associative",
            &join(&join(u, v, tol)?, w, tol)?,
            &join(u, &join(v, w, tol)?, tol)?,
            tol,
        )?,
        Claim::implies(
            "iii-dominated-abs",
            premise,
            dominated,
            tol.psd_threshold(opn(dom, tol)?),
        ),
        positive("iv-triangle", &gap, tol)?,
    ])
}

fn check_rem4(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v, w, a, s, generic) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3), inst.m(4), inst.m(5));
    let zero_meet = |x: &H, y: &H, label: &str| -> Result<Claim> {
        let m = meet(x, y, tol)?;
        Ok(Claim::bound(
            label,
            opn(&m, tol)?,
            tol.threshold(opn(x, tol)?.max(opn(y, tol)?)),
        ))
    };
    let sub = {
        let root = sqrt_psd(v, tol)?;
        H::identity(v.dim()).scale(0.5).conjugate_by(root.as_dense())
    };
    let mut c = vec![
        zero_meet(u, v, "premise-u-v")?,
        zero_meet(u, w, "premise-u-w")?,
        zero_meet(u, &(v + w), "1-meet-with-sum")?,
        zero_meet(u, &sub, "2-meet-with-smaller")?,
        zero_meet(u, &abs_value(&(v - w), tol)?, "3-meet-with-difference")?,
    ];
    // (4): |a − b| = a + b iff a, b ≥ 0 with ab = 0
    let orth = is_abs_orthogonal(u, v, tol)?;
    let product = u.matmul(v).operator_norm()?;
    c.push(Claim::agree(
        "4-orthogonal-iff-product-zero",
        &[
            entry(&orth),
            (product <= tol.threshold(1.0), product, tol.threshold(1.0)),
        ],
    ));
    let orth_generic = is_abs_orthogonal(generic, s, tol)?;
    let product_generic = generic.matmul(s).operator_norm()?;
    c.push(Claim::agree(
        "4-generic-pair",
        &[
            entry(&orth_generic),
            (
                product_generic <= tol.threshold(1.0),
                product_generic,
                tol.threshold(1.0),
            ),
        ],
    ));
    // (6): |2u − v| = v iff 0 ≤ u ≤ v with u ⊥ (v − u)
    for (label, x) in [("6-split-element", a), ("6-generic-element", generic)] {
        let lhs = eq_entry(&abs_value(&(&x.scale(2.0) - s), tol)?, s, tol)?;
        let rhs = all_of(&[leq_entry(x, s, tol)?, orth_entry(x, &(s - x), tol)?]);
        c.push(Claim::agree(label, &[lhs, rhs]));
    }
    Ok(c)
}

fn check_def2(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v, w) = (inst.m(0), inst.m(1), inst.m(2));
    let (x, p, below_v) = (inst.m(6), inst.m(7), inst.m(8));
    let k = inst.s(0);
    let abs_x = abs_value(x, tol)?;
    let mut c = vec![
        same("1-abs-of-positive", &abs_value(p, tol)?, p, tol)?,
        positive("2-abs-plus", &(&abs_x + x), tol)?,
        positive("2-abs-minus", &(&abs_x - x), tol)?,
        same(
            "3-homogeneous",
            &abs_value(&x.scale(k), tol)?,
            &abs_x.scale(k.abs()),
            tol,
        )?,
        Claim::verdict("4-premise", &is_abs_orthogonal(u, v, tol)?),
        Claim::verdict("4-hereditary", &is_abs_orthogonal(u, below_v, tol)?),
        Claim::verdict("5-premise", &is_abs_orthogonal(u, w, tol)?),
    ];
    for (label, sign) in [("5-additive-sum", 1.0), ("5-additive-difference", -1.0)] {
        let t = v + &w.scale(sign);
        let lhs = abs_value(&(u - &t), tol)?;
        let rhs = u + &abs_value(&t, tol)?;
        c.push(same(label, &lhs, &rhs, tol)?);
    }
    Ok(c)
}

fn check_def_p_orth(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (a, b, c) = (inst.m(0), inst.m(1), inst.m(2));
    let p = p_norm(ctx);
    let orth = is_p_orthogonal(a, b, p, &DEFAULT_COEFFICIENTS, tol)?;
    let self_pair = is_p_orthogonal(c, c, p, &DEFAULT_COEFFICIENTS, tol)?;
    let swapped = is_p_orthogonal(b, a, p, &DEFAULT_COEFFICIENTS, tol)?;
    Ok(vec![
        Claim::verdict("orthogonal-pair-is-p-orthogonal", &orth),
        Claim::verdict("p-orthogonality-symmetric", &swapped),
        Claim::refuted("element-not-p-orthogonal-to-itself", &self_pair),
    ])
}

fn check_prop6(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (a, b, c, d, v, ball) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3), inst.m(4), inst.m(5));
    let kind = ctx.norm_kind();
    let p = p_norm(ctx);
    let nv = norm(v, kind, tol)?;
    let (vp, vm) = pos_neg_parts(v, tol)?;
    let (np, nm) = (norm(&vp, kind, tol)?, norm(&vm, kind, tol)?);
    let combined = match p {
        PNorm::One => np + nm,
        PNorm::Infinity => np.max(nm),
    };
    let t = tol.threshold(nv);
    let mut claims = vec![
        Claim::bound("A-norm-of-abs", (norm(&abs_value(v, tol)?, kind, tol)? - nv).abs(), t),
        Claim::bound("A-norm-of-parts", (combined - nv).abs(), t),
        Claim::verdict(
            "C-orthogonal-is-p-orthogonal",
            &is_p_orthogonal(a, b, p, &DEFAULT_COEFFICIENTS, tol)?,
        ),
    ];
    if opn(c, tol)? > tol.threshold(1.0) && opn(d, tol)? > tol.threshold(1.0) {
        claims.push(Claim::verdict(
            "B-sub-elements-p-orthogonal",
            &is_p_orthogonal(c, d, p, &DEFAULT_COEFFICIENTS, tol)?,
        ));
    }
    if kind == NormKind::Operator {
        claims.push(below_claim("D-unit-ball-abs", &abs_value(ball, tol)?, &ctx.unit, tol)?);
    }
    Ok(claims)
}

fn check_rem7(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u0, v0, w0) = (inst.m(0), inst.m(1), inst.m(2));
    let (lo, mid, hi, c, d) = (inst.m(6), inst.m(7), inst.m(8), inst.m(9), inst.m(10));
    let (alpha, beta) = (inst.s(0), inst.s(1));
    let kind = ctx.norm_kind();
    let p = p_norm(ctx);
    let (nl, nm, nh) = (norm(lo, kind, tol)?, norm(mid, kind, tol)?, norm(hi, kind, tol)?);
    let bound = match p {
        PNorm::One => nl + nh,
        PNorm::Infinity => nl.max(nh),
    };
    let mut claims = vec![Claim::bound(
        "O.p.1-sandwich-norm",
        (nm - bound).max(0.0),
        tol.threshold(bound),
    )];
    // orthogonality and p-orthogonality agree on an orthogonal and an overlapping pair
    claims.push(Claim::agree(
        "orthogonal-pair-transfer",
        &[
            orth_entry(u0, v0, tol)?,
            entry(&is_p_orthogonal(u0, v0, p, &DEFAULT_COEFFICIENTS, tol)?),
        ],
    ));
    claims.push(Claim::agree(
        "overlapping-pair-transfer",
        &[
            orth_entry(c, d, tol)?,
            entry(&is_p_orthogonal(c, d, p, &DEFAULT_COEFFICIENTS, tol)?),
        ],
    ));
    // (4): u ⊥ v, u ⊥ w ⇒ u ⊥_p |αv + βw|
    let combo = abs_value(&(&v0.scale(alpha) + &w0.scale(beta)), tol)?;
    if opn(&combo, tol)? > tol.threshold(1.0) {
        claims.push(Claim::verdict(
            "4-orthogonal-to-combinations",
            &is_p_orthogonal(u0, &combo, p, &DEFAULT_COEFFICIENTS, tol)?,
        ));
    }
    // OS.p.2: the parts realize the norm
    let (vp, vm) = pos_neg_parts(mid, tol)?;
    let (np, nn) = (norm(&vp, kind, tol)?, norm(&vm, kind, tol)?);
    let parts = match p {
        PNorm::One => np + nn,
        PNorm::Infinity => np.max(nn),
    };
    claims.push(Claim::bound(
        "OS.p.2-norm-of-parts",
        (parts - nm).abs(),
        tol.threshold(nm),
    ));
    Ok(claims)
}

fn check_cx_triangle(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (v, w) = (inst.m(0), inst.m(1));
    let gap = &(&abs_value(v, tol)? + &abs_value(w, tol)?) - &abs_value(&(v + w), tol)?;
    Ok(vec![positive("triangle-inequality", &gap, tol)?])
}

fn check_cx_join_assoc(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v, w) = (inst.m(0), inst.m(1), inst.m(2));
    Ok(vec![same(
        "join-associativity",
        &join(&join(u, v, tol)?, w, tol)?,
        &join(u, &join(v, w, tol)?, tol)?,
        tol,
    )?])
}

fn check_cx_noncommuting(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let v = is_absolutely_compatible(inst.m(0), inst.m(1), ctx, tol)?;
    Ok(vec![Claim::verdict("projections-compatible", &v)])
}

// ---------------------------------------------------------------------------
// checks: compatibility and the symmetrized product

fn check_prop17(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for (label, k) in [("orthogonal-pair", 0), ("incompatible-pair", 2), ("compatible-pair", 4)] {
        let (u, v) = (inst.m(k), inst.m(k + 1));
        let lhs = orth_entry(u, v, tol)?;
        let rhs = all_of(&[leq_entry(&(u + v), &ctx.unit, tol)?, compat_entry(u, v, ctx, tol)?]);
        claims.push(Claim::agree(label, &[lhs, rhs]));
    }
    Ok(claims)
}

fn check_prop14(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v, big, w) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    let t = tol.threshold(1.0);
    let identity = raw_identity(u, v, ctx, tol)?;
    let band = band_residual(u, tol)?.max(band_residual(v, tol)?);
    Ok(vec![
        Claim::implies("identity-implies-band", identity <= t, band, tol.psd_threshold(1.0)),
        Claim::refute("out-of-band-breaks-identity", raw_identity(big, w, ctx, tol)?, t),
    ])
}

fn check_prop15(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v) = (inst.m(0), inst.m(1));
    let (uc, vc) = (ctx.complement(u), ctx.complement(v));
    let m = |a: &H, b: &H| meet(a, b, tol);
    let e2 = eq_entry(&(&m(u, v)? + &m(u, &vc)?), u, tol)?;
    let e3 = eq_entry(&(&m(u, v)? + &m(&uc, v)?), v, tol)?;
    let e4 = eq_entry(&(&m(&uc, v)? + &m(&uc, &vc)?), &uc, tol)?;
    let e5 = eq_entry(&(&m(u, &vc)? + &m(&uc, &vc)?), &vc, tol)?;
    let total = &(&(&m(u, v)? + &m(u, &vc)?) + &m(&uc, v)?) + &m(&uc, &vc)?;
    let e6 = eq_entry(&total, &ctx.unit, tol)?;
    let compat = is_absolutely_compatible(u, v, ctx, tol)?;
    Ok(vec![
        Claim::agree("six-conditions-agree", &[entry(&compat), e2, e3, e4, e5, e6]),
        Claim::no_anomaly("meet-split-cross-check", &compat),
    ])
}

fn check_prop16(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v) = (inst.m(0), inst.m(1));
    let (uc, vc) = (ctx.complement(u), ctx.complement(v));
    let second = orth_entry(&meet(u, v, tol)?, &meet(&uc, &vc, tol)?, tol)?;
    let third = orth_entry(&meet(u, &vc, tol)?, &meet(&uc, v, tol)?, tol)?;
    Ok(vec![Claim::agree(
        "three-conditions-agree",
        &[compat_entry(u, v, ctx, tol)?, second, third],
    )])
}

fn check_rem17a(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v, s) = (inst.m(0), inst.m(1), inst.m(2));
    let (m, j) = (meet(u, v, tol)?, join(u, v, tol)?);
    let co_join = meet(&ctx.complement(u), &ctx.complement(v), tol)?;
    let lifted = compat_entry(&m, &j, ctx, tol)?;
    let in_band = all_of(&[
        psd_entry(&m, tol)?,
        leq_entry(&j, &ctx.unit, tol)?,
        orth_entry(&m, &ctx.complement(&j), tol)?,
    ]);
    Ok(vec![
        same("complement-meet-is-complement-join", &co_join, &ctx.complement(&j), tol)?,
        Claim::agree("compatibility-lifts", &[compat_entry(u, v, ctx, tol)?, lifted, in_band]),
        Claim::agree(
            "self-compatibility",
            &[compat_entry(s, s, ctx, tol)?, orth_entry(s, &ctx.complement(s), tol)?],
        ),
    ])
}

fn check_prop11(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (a, b, c, d) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    let t = tol.threshold(1.0);
    let identity = raw_identity(a, b, ctx, tol)?;
    let product = opn(&(&a.jordan(b) - &meet(a, b, tol)?), tol)?;
    let band = band_residual(a, tol)?.max(band_residual(b, tol)?);
    let rhs = all_of(&[
        (band <= tol.psd_threshold(1.0), band, tol.psd_threshold(1.0)),
        (product <= t, product, t),
    ]);
    // arbitrary Hermitian pairs: the identity only holds inside the band
    let raw = raw_identity(c, d, ctx, tol)?;
    let raw_band = band_residual(c, tol)?.max(band_residual(d, tol)?);
    Ok(vec![
        Claim::agree("identity-iff-product", &[(identity <= t, identity, t), rhs]),
        Claim::implies(
            "hermitian-identity-implies-band",
            raw <= t,
            raw_band,
            tol.psd_threshold(1.0),
        ),
    ])
}

fn check_cor11(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let check = symmetrized_product_check(inst.m(0), inst.m(1), ctx, tol)?;
    Ok(vec![Claim::agree(
        "scaled-product-iff-compatible",
        &[
            entry(&check.compatibility),
            (check.product_holds, check.product_residual, check.product_threshold),
        ],
    )])
}

fn projection_conditions(a: &H, p: &H, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<(bool, f64, f64)>> {
    let compat = compat_entry(a, p, ctx, tol)?;
    let ap = a.matmul(p);
    let r = (meet(a, p, tol)?.as_dense() - &ap).operator_norm()?;
    let t = tol.threshold(1.0);
    Ok(vec![compat, (r <= t, r, t), commute_entry(a, p, tol)?])
}

fn check_prop12(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (a, p) = (inst.m(0), inst.m(1));
    let conditions = projection_conditions(a, p, ctx, tol)?;
    let mut claims = vec![Claim::agree("three-conditions-agree", &conditions)];
    if conditions[0].0 {
        let op = OrderProjection::measure(p, ctx, tol)?;
        let report = inf_sup_with_projection(a, &op, ctx, 8, 3, tol)?;
        let t = tol.psd_threshold(1.0);
        claims.push(Claim::bound(
            "meet-is-infimum",
            report.bound_residual.max(report.extremality_residual),
            t,
        ));
    }
    Ok(claims)
}

fn check_cor12(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (a, p) = (inst.m(0), inst.m(1));
    let scaled = a.scale(1.0 / opn(a, tol)?.max(1.0));
    Ok(vec![Claim::agree(
        "three-conditions-agree-normalized",
        &projection_conditions(&scaled, p, ctx, tol)?,
    )])
}

// ---------------------------------------------------------------------------
// checks: order projections

fn check_prop13(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let commute = commute_entry(p, q, tol)?;
    let m = meet(p, q, tol)?;
    let pq = HermitianMatrix::symmetrize(&p.matmul(q));
    let (op_p, op_q) = (
        OrderProjection::measure(p, ctx, tol)?,
        OrderProjection::measure(q, ctx, tol)?,
    );
    let (inf, _) = op_meet_join(&op_p, &op_q, tol)?;
    Ok(vec![
        Claim::agree("commute-iff-meet-projection", &[commute, op_entry(&m, ctx, tol)?]),
        same_if("meet-is-product", commute.0, &m, &pq, tol)?,
        same_if("meet-is-infimum", commute.0, &m, &inf.matrix, tol)?,
    ])
}

fn check_thm18(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let a = inst.m(0);
    let mut claims = Vec::new();
    for (label, x) in [("profile", a.clone()), ("complement-profile", ctx.complement(a))] {
        let pr = projection_profile(&x, ctx, 8, 5, tol)?;
        let t = tol.threshold(1.0);
        let witness = match &pr.interval_witness {
            Some(w) => opn(w, tol)?,
            None => 0.0,
        };
        claims.push(Claim::agree(
            label,
            &[
                (pr.idempotent, pr.idempotency_residual, t),
                (pr.orthogonal_to_complement, pr.orthogonality_residual, t),
                (pr.intervals_trivial, witness, t),
                (pr.order_unit_property, pr.order_unit_residual, tol.psd_threshold(1.0)),
            ],
        ));
    }
    Ok(claims)
}

fn check_prop26(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let sum = p + q;
    let mut entries = vec![
        leq_entry(&sum, &ctx.unit, tol)?,
        orth_entry(p, q, tol)?,
        op_entry(&sum, ctx, tol)?,
    ];
    let t = tol.threshold(1.0);
    if opn(p, tol)? > t && opn(q, tol)? > t {
        entries.push(entry(&is_p_orthogonal(
            p,
            q,
            PNorm::Infinity,
            &DEFAULT_COEFFICIENTS,
            tol,
        )?));
    }
    Ok(vec![Claim::agree("four-conditions-agree", &entries)])
}

fn check_prop27(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v) = (inst.m(0), inst.m(1));
    let premise = op_entry(&(u + v), ctx, tol)?.0 && orth_entry(u, v, tol)?.0;
    let (ou, ov) = (op_entry(u, ctx, tol)?, op_entry(v, ctx, tol)?);
    Ok(vec![
        Claim::implies("first-summand-in-op", premise, ou.1, ou.2),
        Claim::implies("second-summand-in-op", premise, ov.1, ov.2),
    ])
}

fn check_cor28(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let diff = q - p;
    let d = op_entry(&diff, ctx, tol)?;
    Ok(vec![
        below_claim("nested", p, q, tol)?,
        Claim::bound("difference-in-op", d.1, d.2),
        Claim::verdict("orthogonal-to-difference", &is_abs_orthogonal(p, &diff, tol)?),
    ])
}

fn check_prop29(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, v) = (inst.m(0), inst.m(1));
    let (m, j) = (meet(u, v, tol)?, join(u, v, tol)?);
    let (ru, rv) = (u - &m, v - &m);
    Ok(vec![
        same("1-join-plus-meet", &(&j + &m), &(u + v), tol)?,
        same("2-join-minus-meet", &(&j - &m), &abs_value(&(u - v), tol)?, tol)?,
        positive("3-first-remainder", &ru, tol)?,
        positive("3-second-remainder", &rv, tol)?,
        Claim::verdict("4-remainders-orthogonal", &is_abs_orthogonal(&ru, &rv, tol)?),
    ])
}

fn meet_entries(p: &H, q: &H, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<[(bool, f64, f64); 4]> {
    let (pc, qc) = (ctx.complement(p), ctx.complement(q));
    Ok([
        op_entry(&meet(p, q, tol)?, ctx, tol)?,
        op_entry(&join(p, q, tol)?, ctx, tol)?,
        op_entry(&meet(&pc, &qc, tol)?, ctx, tol)?,
        op_entry(&join(&pc, &qc, tol)?, ctx, tol)?,
    ])
}

fn check_thm30(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let e = meet_entries(inst.m(0), inst.m(1), ctx, tol)?;
    Ok(vec![Claim::agree("four-memberships-agree", &e)])
}

fn check_thm31(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let first = op_entry(&meet(p, q, tol)?, ctx, tol)?;
    let third = all_of(&[first, op_entry(&meet(p, &ctx.complement(q), tol)?, ctx, tol)?]);
    let (op_p, op_q) = (
        OrderProjection::measure(p, ctx, tol)?,
        OrderProjection::measure(q, ctx, tol)?,
    );
    let all = meet_compatibility_check(&op_p, &op_q, ctx, tol)?;
    let t = tol.threshold(1.0);
    Ok(vec![
        Claim::agree("meet-vs-compatibility", &[first, compat_entry(p, q, ctx, tol)?, third]),
        Claim::agree(
            "bridge-to-commutation",
            &[
                (all.compatible, all.compatibility_residual, t),
                (all.commute, all.commutator_norm, t),
            ],
        ),
        Claim::bound(
            "all-seven-agree",
            if all.agree() { 0.0 } else { all.compatibility_residual },
            t,
        ),
    ])
}

fn check_rem32(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let premise = op_entry(&meet(p, q, tol)?, ctx, tol)?.0;
    let family = [p.clone(), q.clone(), ctx.complement(p), ctx.complement(q)];
    let mut worst: f64 = 0.0;
    let mut thr = tol.threshold(1.0);
    for r in &family {
        for s in &family {
            for x in [meet(r, s, tol)?, join(r, s, tol)?] {
                let e = op_entry(&x, ctx, tol)?;
                if !e.0 && e.1 / e.2 > worst / thr {
                    worst = e.1;
                    thr = e.2;
                }
            }
        }
    }
    Ok(vec![Claim::implies("closed-under-meet-and-join", premise, worst, thr)])
}

fn check_prop33(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let d = abs_value(&(p - q), tol)?;
    let rhs = all_of(&[op_entry(&d, ctx, tol)?, leq_entry(&d, &(p + q), tol)?]);
    Ok(vec![Claim::agree(
        "meet-vs-absolute-difference",
        &[op_entry(&meet(p, q, tol)?, ctx, tol)?, rhs],
    )])
}

fn check_thm34(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let m = meet(p, q, tol)?;
    let premise = op_entry(&m, ctx, tol)?.0;
    let (op_p, op_q) = (
        OrderProjection::measure(p, ctx, tol)?,
        OrderProjection::measure(q, ctx, tol)?,
    );
    let (inf, _) = op_meet_join(&op_p, &op_q, tol)?;
    Ok(vec![same_if("infimum-is-meet", premise, &inf.matrix, &m, tol)?])
}

fn check_cor35(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let j = join(p, q, tol)?;
    let premise = op_entry(&j, ctx, tol)?.0;
    let (op_p, op_q) = (
        OrderProjection::measure(p, ctx, tol)?,
        OrderProjection::measure(q, ctx, tol)?,
    );
    let (_, sup) = op_meet_join(&op_p, &op_q, tol)?;
    Ok(vec![same_if("supremum-is-join", premise, &sup.matrix, &j, tol)?])
}

fn check_s_set(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (op_p, op_q) = (
        OrderProjection::new(inst.m(0), ctx, tol)?,
        OrderProjection::new(inst.m(1), ctx, tol)?,
    );
    let s = s_set_closure(&op_p, &op_q, ctx, tol)?;
    let t = tol.threshold(1.0);
    let r = abs_value(&(inst.m(0) - inst.m(1)), tol)?;
    Ok(vec![
        Claim::bound("closed", s.residual, t),
        Claim::bound("recovers-p-and-q", s.recovery_residual, t),
        Claim::bound("difference-in-op", op_entry(&r, ctx, tol)?.1, t),
    ])
}

fn check_lattice_op(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q) = (inst.m(0), inst.m(1));
    let (op_p, op_q) = (
        OrderProjection::measure(p, ctx, tol)?,
        OrderProjection::measure(q, ctx, tol)?,
    );
    let (inf, sup) = op_meet_join(&op_p, &op_q, tol)?;
    let span = span_projection(p, q, tol);
    let co_span = ctx.complement(&span_projection(&ctx.complement(p), &ctx.complement(q), tol));
    Ok(vec![
        below_claim("p-below-sup", p, &sup.matrix, tol)?,
        below_claim("q-below-sup", q, &sup.matrix, tol)?,
        below_claim("inf-below-p", &inf.matrix, p, tol)?,
        below_claim("inf-below-q", &inf.matrix, q, tol)?,
        same("sup-is-span", &sup.matrix, &span, tol)?,
        same("inf-is-intersection", &inf.matrix, &co_span, tol)?,
        Claim::bound("sup-in-op", op_entry(&sup.matrix, ctx, tol)?.1, tol.threshold(1.0)),
        Claim::bound("inf-in-op", op_entry(&inf.matrix, ctx, tol)?.1, tol.threshold(1.0)),
    ])
}

fn check_cover_def(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (v, r, x, y) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    let c = cover(v, tol)?;
    let scale = opn(v, tol)?;
    let t = tol.threshold(scale);
    // any projection whose corner holds v dominates the cover; r ∨ c is one
    let holder = span_projection(r, &c.matrix, tol);
    let holder_op = OrderProjection::measure(&holder, ctx, tol)?;
    let random_op = OrderProjection::measure(r, ctx, tol)?;
    let random_holds = cover_residual(v, &random_op, tol)? <= t;
    let (cx, cy) = (cover(x, tol)?, cover(y, tol)?);
    let mut claims = vec![
        Claim::bound("element-in-cover-corner", cover_residual(v, &c, tol)?, t),
        Claim::bound("element-in-larger-corner", cover_residual(v, &holder_op, tol)?, t),
        below_claim("cover-below-larger", &c.matrix, &holder, tol)?,
        Claim::verdict(
            "covers-of-orthogonal-pair-orthogonal",
            &is_abs_orthogonal(&cx.matrix, &cy.matrix, tol)?,
        ),
    ];
    let minimal = is_psd(&(r - &c.matrix), tol)?;
    claims.push(Claim::implies(
        "cover-below-any-holder",
        random_holds,
        minimal.residual,
        tol.psd_threshold(1.0),
    ));
    Ok(claims)
}

fn check_prop19(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let u = inst.m(0);
    let op = OrderProjection::measure(u, ctx, tol)?;
    let uc = op.complement();
    let in_op = op_entry(u, ctx, tol)?.0;
    let unit_u = absolute_order_unit_property_check(&op, 8, 11, tol)?;
    let unit_c = absolute_order_unit_property_check(&uc, 8, 12, tol)?;
    let mut claims = vec![
        Claim::implies("projection-has-unit-property", in_op, unit_u.residual, unit_u.threshold),
        Claim::implies("complement-has-unit-property", in_op, unit_c.residual, unit_c.threshold),
    ];
    let t = tol.threshold(1.0);
    if opn(u, tol)? > t && opn(&uc.matrix, tol)? > t {
        let infty = is_abs_infty_orthogonal(u, &uc.matrix, InftyMode::Oracle, tol)?;
        claims.push(Claim::implies(
            "unit-properties-imply-orthogonality",
            unit_u.holds && unit_c.holds,
            infty.residual,
            infty.threshold,
        ));
    }
    Ok(claims)
}

// ---------------------------------------------------------------------------
// checks: AC(p) and compressions

fn check_prop21(inst: &Instance, _: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (x, y) = (inst.m(2), inst.m(3));
    let s = x + y;
    let (sp, sm) = pos_neg_parts(&s, tol)?;
    let (xp, xm) = pos_neg_parts(x, tol)?;
    let (yp, ym) = pos_neg_parts(y, tol)?;
    let ns = opn(&s, tol)?;
    let nmax = opn(x, tol)?.max(opn(y, tol)?);
    Ok(vec![
        same("positive-part-splits", &sp, &(&xp + &yp), tol)?,
        same("negative-part-splits", &sm, &(&xm + &ym), tol)?,
        same(
            "abs-splits",
            &abs_value(&s, tol)?,
            &(&abs_value(x, tol)? + &abs_value(y, tol)?),
            tol,
        )?,
        Claim::bound("max-norm", (ns - nmax).abs(), tol.threshold(nmax)),
    ])
}

fn check_thm23(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q, w) = (inst.m(0), inst.m(1), inst.m(2));
    let (cp, cq) = (w.compress(p), w.compress(q));
    let first = all_of(&[
        eq_entry(w, &(&cp + &cq), tol)?,
        psd_entry(&cp, tol)?,
        psd_entry(&cq, tol)?,
        leq_entry(w, &ctx.unit, tol)?,
    ]);
    let (mp, mq) = (meet(p, w, tol)?, meet(q, w, tol)?);
    let second = eq_entry(w, &(&mp + &mq), tol)?;
    let lhs = &abs_value(&(p - w), tol)? + &abs_value(&(q - w), tol)?;
    let third = eq_entry(&lhs, &(p + q), tol)?;
    Ok(vec![
        Claim::agree("three-conditions-agree", &[first, second, third]),
        same_if("p-component", first.0, &mp, &cp, tol)?,
        same_if("q-component", first.0, &mq, &cq, tol)?,
    ])
}

fn check_cor24(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, p) = (inst.m(0), inst.m(1));
    let op = OrderProjection::measure(p, ctx, tol)?;
    let d = p_decompose(u, &op, tol)?;
    let membership = ac_membership(u, &op, ctx, tol)?;
    Ok(vec![
        Claim::agree(
            "compatible-iff-in-ac",
            &[
                compat_entry(u, p, ctx, tol)?,
                (d.in_ac(tol), d.membership_residual, d.threshold(tol)),
            ],
        ),
        Claim::no_anomaly("membership-cross-check", &membership),
    ])
}

fn check_prop22(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (u, p) = (inst.m(0), inst.m(1));
    let op = OrderProjection::measure(p, ctx, tol)?;
    let r = inf_sup_with_projection(u, &op, ctx, 8, 9, tol)?;
    let t = tol.psd_threshold(1.0);
    Ok(vec![
        Claim::bound("bounds", r.bound_residual, t),
        Claim::bound("extremal", r.extremality_residual, t),
    ])
}

fn check_thm25(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let op = OrderProjection::measure(inst.m(0), ctx, tol)?;
    let us = &inst.matrices[1..];
    Ok(vec![
        Claim::verdict("additive-meet-and-join", &additive_meet_identity(us, &op, tol)?),
        Claim::verdict("single-term", &additive_meet_identity(&us[..1], &op, tol)?),
    ])
}

fn check_def_cp(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, v, w, u) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    let lambda = inst.s(0);
    let op = OrderProjection::measure(p, ctx, tol)?;
    let dv = p_decompose(v, &op, tol)?;
    let dw = p_decompose(w, &op, tol)?;
    let combo = v + &w.scale(lambda);
    let dc = p_decompose(&combo, &op, tol)?;
    let nv = opn(v, tol)?;
    let max_norm = opn(&dv.c_p, tol)?.max(opn(&dv.c_p_prime, tol)?);
    let du = p_decompose(u, &op, tol)?;
    let nu = opn(u, tol)?;
    Ok(vec![
        Claim::bound("reconstructs", dv.membership_residual, dv.threshold(tol)),
        same("corner-fixed", &dv.c_p.compress(p), &dv.c_p, tol)?,
        same("linear", &dc.c_p, &(&dv.c_p + &dw.c_p.scale(lambda)), tol)?,
        same(
            "abs-preserving",
            &abs_value(&dv.c_p, tol)?,
            &abs_value(v, tol)?.compress(p),
            tol,
        )?,
        Claim::bound("norm-is-max", (nv - max_norm).abs(), tol.threshold(nv)),
        same("positive-corner-is-meet", &du.c_p, &meet(u, &p.scale(nu), tol)?, tol)?,
    ])
}

fn check_prop43(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q, v) = (inst.m(0), inst.m(1), inst.m(2));
    let (op_p, op_q) = (
        OrderProjection::measure(p, ctx, tol)?,
        OrderProjection::measure(q, ctx, tol)?,
    );
    let r = compression_commute(v, &op_p, &op_q, tol)?;
    Ok(vec![
        Claim::bound("nested", r.nested, r.threshold),
        Claim::bound("annihilate", r.annihilate, r.threshold),
        Claim::bound("difference", r.difference, r.threshold),
        Claim::bound("complement", r.complement, r.threshold),
    ])
}

fn check_thm46(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q, v) = (inst.m(0), inst.m(1), inst.m(2));
    let (op_p, op_q) = (
        OrderProjection::measure(p, ctx, tol)?,
        OrderProjection::measure(q, ctx, tol)?,
    );
    let r = triple_decomposition(v, &op_p, &op_q, ctx, tol)?;
    let bad = |b: bool| if b { 0.0 } else { 1.0 };
    Ok(vec![
        Claim::bound("hypotheses", bad(r.precondition.is_none()), 0.0),
        Claim::bound("reconstruction", r.reconstruction_residual, tol.threshold(1.0)),
        Claim::bound("in-ac-remainder", bad(r.in_ac_r), 0.0),
        Claim::bound("in-ac-sum", bad(r.in_ac_sum), 0.0),
    ])
}

fn ac_claim(label: &str, w: &H, proj: &H, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Claim> {
    let op = OrderProjection::measure(proj, ctx, tol)?;
    let d = p_decompose(w, &op, tol)?;
    Ok(Claim::bound(label, d.membership_residual, d.threshold(tol)))
}

fn check_cor45(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (p, q, nested, w) = (inst.m(0), inst.m(1), inst.m(2), inst.m(3));
    Ok(vec![
        ac_claim("in-ac-p", w, p, ctx, tol)?,
        ac_claim("in-ac-q", w, q, ctx, tol)?,
        ac_claim("in-ac-sum", w, &(p + q), ctx, tol)?,
        ac_claim("in-ac-difference", w, &(nested - p), ctx, tol)?,
    ])
}

fn check_rem47(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let k = inst.matrices.len() - 1;
    let parts = &inst.matrices[..k];
    let w = &inst.matrices[k];
    let mut claims = Vec::new();
    // every partial sum, and every difference of the increasing chain of partial sums
    let mut chain = vec![H::zeros(ctx.dim)];
    for part in parts {
        let next = chain.last().expect("chain starts at zero") + part;
        chain.push(next);
    }
    for subset in 1..(1usize << k) {
        let mut s = H::zeros(ctx.dim);
        for (i, part) in parts.iter().enumerate() {
            if subset & (1 << i) != 0 {
                s = &s + part;
            }
        }
        claims.push(ac_claim(&format!("in-ac-subset-{subset}"), w, &s, ctx, tol)?);
    }
    for i in 1..chain.len() {
        for j in (i + 1)..chain.len() {
            claims.push(ac_claim(
                &format!("in-ac-chain-{i}-{j}"),
                w,
                &(&chain[j] - &chain[i]),
                ctx,
                tol,
            )?);
        }
    }
    let mut worst: f64 = 0.0;
    for i in 0..k {
        for j in (i + 1)..k {
            worst = worst.max(parts[i].matmul(&parts[j]).operator_norm()?);
        }
    }
    claims.push(Claim::bound("pieces-mutually-orthogonal", worst, tol.threshold(1.0)));
    Ok(claims)
}

// ---------------------------------------------------------------------------
// checks: covers and the spectral family

fn check_rem48(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let v = inst.m(0);
    let (neg, pos) = (inst.s(0), inst.s(1));
    let nv = -v;
    let e = &ctx.unit;
    let zero = H::zeros(ctx.dim);
    Ok(vec![
        same(
            "upper-cover-full-below-zero",
            &c_pm(v, neg, Sign::Plus, ctx, tol)?.matrix,
            e,
            tol,
        )?,
        same(
            "lower-cover-empty-below-zero",
            &c_pm(v, neg, Sign::Minus, ctx, tol)?.matrix,
            &zero,
            tol,
        )?,
        same(
            "lower-cover-empty-at-zero",
            &c_pm(v, 0.0, Sign::Minus, ctx, tol)?.matrix,
            &zero,
            tol,
        )?,
        same(
            "dual-lower-cover-full",
            &c_pm(&nv, pos, Sign::Minus, ctx, tol)?.matrix,
            e,
            tol,
        )?,
        same(
            "dual-upper-cover-empty",
            &c_pm(&nv, pos, Sign::Plus, ctx, tol)?.matrix,
            &zero,
            tol,
        )?,
        same(
            "dual-upper-cover-empty-at-zero",
            &c_pm(&nv, 0.0, Sign::Plus, ctx, tol)?.matrix,
            &zero,
            tol,
        )?,
    ])
}

fn check_prop49(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let v = inst.m(0);
    let nv = opn(v, tol)?;
    let mut alphas = inst.scalars.clone();
    alphas.sort_by(f64::total_cmp);
    let e = &ctx.unit;
    let zero = H::zeros(ctx.dim);
    let mut claims = vec![
        same(
            "lower-empty-below-norm",
            &c_pm(v, -nv, Sign::Minus, ctx, tol)?.matrix,
            &zero,
            tol,
        )?,
        same(
            "upper-empty-above-norm",
            &c_pm(v, nv, Sign::Plus, ctx, tol)?.matrix,
            &zero,
            tol,
        )?,
        same(
            "lower-full-above-norm",
            &c_pm(v, nv + 0.25, Sign::Minus, ctx, tol)?.matrix,
            e,
            tol,
        )?,
        same(
            "upper-full-below-norm",
            &c_pm(v, -nv - 0.25, Sign::Plus, ctx, tol)?.matrix,
            e,
            tol,
        )?,
    ];
    let (mut mono, mut ac, mut bounds) = (0.0_f64, 0.0_f64, 0.0_f64);
    let mut prev: Option<(H, H)> = None;
    for &a in &alphas {
        let lo = c_pm(v, a, Sign::Minus, ctx, tol)?;
        let hi = c_pm(v, a, Sign::Plus, ctx, tol)?;
        if let Some((plo, phi)) = &prev {
            mono = mono
                .max(is_psd(&(&lo.matrix - plo), tol)?.residual)
                .max(is_psd(&(phi - &hi.matrix), tol)?.residual);
        }
        let dl = p_decompose(v, &lo, tol)?;
        let dh = p_decompose(v, &hi, tol)?;
        ac = ac.max(dl.membership_residual).max(dh.membership_residual);
        let (lc, hc) = (lo.complement(), hi.complement());
        bounds = bounds
            .max(is_psd(&(&lo.matrix.scale(a) - &dl.c_p), tol)?.residual)
            .max(is_psd(&(&dl.c_p_prime - &lc.matrix.scale(a)), tol)?.residual)
            .max(is_psd(&(&dh.c_p - &hi.matrix.scale(a)), tol)?.residual)
            .max(is_psd(&(&hc.matrix.scale(a) - &dh.c_p_prime), tol)?.residual);
        prev = Some((lo.matrix, hi.matrix));
    }
    let t = tol.psd_threshold(nv.max(1.0));
    claims.push(Claim::bound("monotone", mono, t));
    claims.push(Claim::bound("element-in-ac-of-covers", ac, tol.threshold(nv)));
    claims.push(Claim::bound("compression-bounds", bounds, t));
    Ok(claims)
}

fn check_thm50(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (v, p) = (inst.m(0), inst.m(1));
    let op = OrderProjection::measure(p, ctx, tol)?;
    let mut claims = Vec::new();
    for (i, &a) in inst.scalars.iter().enumerate() {
        let verdict = cover_compatibility(v, &op, a, ctx, tol)?;
        claims.push(Claim::verdict(format!("covers-compatible-{i}"), &verdict));
        claims.push(Claim::no_anomaly(format!("cross-check-{i}"), &verdict));
    }
    Ok(claims)
}

fn check_prop51(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (v, p) = (inst.m(0), inst.m(1));
    let op = OrderProjection::measure(p, ctx, tol)?;
    let t = tol.threshold(opn(v, tol)?.max(1.0));
    let mut claims = Vec::new();
    for (i, &a) in inst.scalars.iter().enumerate() {
        for (kind, proj) in [("block", op.clone()), ("family", e_alpha(v, a, ctx, tol)?)] {
            let s = sandwich_check(v, &proj, a, ctx, tol)?;
            let gray = if s.agree { 0.0 } else { 1.0 };
            claims.push(Claim::bound(format!("{kind}-sides-agree-{i}"), gray, 0.0));
            if let Some(r) = s.parts_residual {
                claims.push(Claim::bound(format!("{kind}-parts-{i}"), r, t));
            }
            if kind == "family" {
                claims.push(Claim::bound(
                    format!("family-satisfies-{i}"),
                    if s.cover_side { 0.0 } else { 1.0 },
                    0.0,
                ));
            }
        }
    }
    Ok(claims)
}

fn check_prop52(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let v = inst.m(0);
    let family = spectral_family(v, ctx, tol)?;
    let props = family_properties(&family, ctx, &[], tol)?;
    let mut worst: f64 = 0.0;
    for &a in &inst.scalars {
        // the next breakpoint above a bounds how far right we may step
        let next = family.breakpoints.iter().copied().find(|&b| b > a + family.snap);
        let step = next.map_or(0.5, |b| 0.5 * (b - a));
        let right = e_alpha(v, a + step, ctx, tol)?;
        worst = worst.max((&right.matrix - &family.at(a).matrix).frobenius_norm());
    }
    Ok(vec![
        Claim::bound(
            "right-continuous-at-breakpoints",
            if props.right_continuous {
                0.0
            } else {
                props.worst_residual
            },
            tol.psd_threshold(1.0),
        ),
        Claim::bound("right-continuous-at-samples", worst, tol.threshold(1.0)),
    ])
}

fn check_thm53(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let (v, p) = (inst.m(0), inst.m(1));
    let family = spectral_family(v, ctx, tol)?;
    let props = family_properties(&family, ctx, &inst.scalars, tol)?;
    let t = tol.psd_threshold(opn(v, tol)?.max(1.0));
    let flag = |b: bool| if b { 0.0 } else { props.worst_residual.max(2.0 * t) };
    let mut claims = vec![
        Claim::bound("1-increasing", flag(props.monotone), t),
        Claim::bound("2-boundary", flag(props.boundary), t),
        Claim::bound("3-element-in-ac", flag(props.in_ac), t),
        Claim::bound("4-upper-compression", flag(props.upper), t),
        Claim::bound("4-lower-compression", flag(props.lower), t),
        Claim::bound("6-right-continuous", flag(props.right_continuous), t),
    ];
    // (5): any p with the compression bounds lies below e_α
    let op = OrderProjection::measure(p, ctx, tol)?;
    for (i, &a) in inst.scalars.iter().enumerate() {
        let s = sandwich_check(v, &op, a, ctx, tol)?;
        let below = is_psd(&(&family.at(a).matrix - p), tol)?.residual;
        claims.push(Claim::implies(format!("5-maximal-{i}"), s.compression_side, below, t));
    }
    Ok(claims)
}

fn check_thm54(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let v = inst.m(0);
    let eps = inst.s(0);
    let d = spectral_decompose(v, eps, ctx, tol)?;
    let family = spectral_family(v, ctx, tol)?;
    let t = tol.threshold(opn(v, tol)?.max(1.0));
    let mut claims = vec![
        Claim::bound("error-below-epsilon", d.error, eps * (1.0 - 1e-12)),
        Claim::bound("error-below-max-gap", d.error, d.grid.max_gap() + t),
        Claim::bound("partition-of-unity", d.partition_residual, t),
    ];
    let pieces: Vec<H> = d
        .increments
        .iter()
        .map(|inc| &family.at(d.grid.points[inc.index]).matrix - &family.at(d.grid.points[inc.index - 1]).matrix)
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..pieces.len() {
        for j in (i + 1)..pieces.len() {
            worst = worst.max(is_abs_orthogonal(&pieces[i], &pieces[j], tol)?.residual);
        }
    }
    claims.push(Claim::bound("increments-orthogonal", worst, t));
    let rebuilt = spectral_family(&d.approximation, ctx, tol)?;
    let mut off_grid: f64 = 0.0;
    for b in &rebuilt.breakpoints {
        let nearest = d.grid.points.iter().fold(f64::INFINITY, |m, g| m.min((g - b).abs()));
        off_grid = off_grid.max(nearest);
    }
    claims.push(Claim::bound("breakpoints-on-grid", off_grid, t));
    Ok(claims)
}

fn check_spectral_oracle(inst: &Instance, ctx: &ModelContext, tol: &ToleranceProfile) -> Result<Vec<Claim>> {
    let family = spectral_family(inst.m(0), ctx, tol)?;
    let cmp = oracle_compare(&family, &inst.scalars, tol)?;
    Ok(vec![Claim::bound(
        "family-matches-eigenprojections",
        cmp.max_distance,
        10.0 * tol.threshold(1.0),
    )])
}
