//! Small inputs whose answers are known by hand.

use aous::calculus::{apply_function, is_psd, leq, norm, NormKind};
use aous::models::{diagonal_embed, direct_sum, generate_pair, generate_single, SampleKind, SampleRecipe};
use aous::order::{
    is_abs_infty_orthogonal, is_abs_orthogonal, is_absolutely_compatible, is_p_orthogonal, symmetrized_product_check,
    InftyMode, PNorm,
};
use aous::projections::{
    ac_membership, cover, is_order_projection, op_meet_join, op_pair_relations, p_decompose, projection_profile,
    range_projection, s_set_closure,
};
use aous::spectral::{
    c_pm, family_properties, oracle_compare, sandwich_check, spectral_decompose, spectral_family, Sign,
};
use aous::{abs_value, eigh, meet, pos_neg_parts, HermitianMatrix, ModelContext, OrderProjection, ToleranceProfile};

const EPS: f64 = 1e-10;

fn tol() -> ToleranceProfile {
    ToleranceProfile::default()
}

fn rows(r: &[&[f64]]) -> HermitianMatrix {
    HermitianMatrix::from_real_rows(r).unwrap()
}

fn d(v: &[f64]) -> HermitianMatrix {
    HermitianMatrix::diag(v)
}

fn close(a: &HermitianMatrix, b: &HermitianMatrix) -> bool {
    (a - b).frobenius_norm() <= EPS
}

fn half_ones() -> HermitianMatrix {
    rows(&[&[0.5, 0.5], &[0.5, 0.5]])
}

fn op(p: &HermitianMatrix, n: usize) -> OrderProjection {
    OrderProjection::new(p, &ModelContext::matrix_infty(n), &tol()).unwrap()
}

#[test]
fn eigen_and_norms() {
    let e = eigh(&d(&[3.0, 1.0, 2.0]), &tol()).unwrap();
    for (x, y) in e.eigenvalues.iter().zip([1.0, 2.0, 3.0]) {
        assert!((x - y).abs() < EPS);
    }
    let x = rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let e = eigh(&x, &tol()).unwrap();
    assert!((e.eigenvalues[0] + 1.0).abs() < EPS && (e.eigenvalues[1] - 1.0).abs() < EPS);

    let sq = apply_function(&x, |t| t * t, &tol()).unwrap();
    assert!(close(&sq, &HermitianMatrix::identity(2)));
    let rt = apply_function(&d(&[4.0, 9.0]), f64::sqrt, &tol()).unwrap();
    assert!(close(&rt, &d(&[2.0, 3.0])));

    let t = tol();
    assert!((norm(&d(&[2.0, -3.0]), NormKind::Operator, &t).unwrap() - 3.0).abs() < EPS);
    assert!((norm(&d(&[2.0, -3.0]), NormKind::Trace, &t).unwrap() - 5.0).abs() < EPS);
    assert!((norm(&x, NormKind::Trace, &t).unwrap() - 2.0).abs() < EPS);
    assert_eq!(norm(&HermitianMatrix::zeros(3), NormKind::Frobenius, &t).unwrap(), 0.0);
}

#[test]
fn psd_and_order() {
    let t = tol();
    assert!(is_psd(&d(&[1.0, 0.0]), &t).unwrap().holds);
    let v = is_psd(&d(&[1.0, -0.5]), &t).unwrap();
    assert!(!v.holds && (v.residual - 0.5).abs() < EPS);
    assert!(is_psd(&rows(&[&[1.0, 1.0], &[1.0, 1.0]]), &t).unwrap().holds);
    assert!(
        leq(&HermitianMatrix::zeros(2), &HermitianMatrix::identity(2), &t)
            .unwrap()
            .holds
    );
    assert!(leq(&d(&[1.0, 0.0]), &HermitianMatrix::identity(2), &t).unwrap().holds);
    assert!(!leq(&d(&[1.0, 0.0]), &half_ones(), &t).unwrap().holds);
}

#[test]
fn absolute_value_and_parts() {
    let t = tol();
    assert!(close(&abs_value(&d(&[2.0, -3.0]), &t).unwrap(), &d(&[2.0, 3.0])));
    let a = rows(&[&[0.0, 2.0], &[2.0, 0.0]]);
    assert!(close(&abs_value(&a, &t).unwrap(), &d(&[2.0, 2.0])));

    let (p, m) = pos_neg_parts(&d(&[1.0, -2.0]), &t).unwrap();
    assert!(close(&p, &d(&[1.0, 0.0])) && close(&m, &d(&[0.0, 2.0])));
    let (p, m) = pos_neg_parts(&rows(&[&[0.0, 1.0], &[1.0, 0.0]]), &t).unwrap();
    assert!(close(&p, &half_ones()));
    assert!(close(&m, &rows(&[&[0.5, -0.5], &[-0.5, 0.5]])));
}

#[test]
fn meet_of_noncommuting_projections_is_not_positive() {
    let t = tol();
    let p = half_ones();
    let q = d(&[1.0, 0.0]);
    let m = meet(&p, &q, &t).unwrap();
    // |p − q| = I/√2 because (p − q)² = I/2
    let expected = &(&p + &q).scale(0.5) - &HermitianMatrix::identity(2).scale(0.5 / 2f64.sqrt());
    assert!(close(&m, &expected));
    assert!(!is_psd(&m, &t).unwrap().holds);
    assert!(close(
        &meet(&d(&[1.0, 3.0]), &d(&[2.0, 2.0]), &t).unwrap(),
        &d(&[1.0, 2.0])
    ));
}

#[test]
fn orthogonality_examples() {
    let t = tol();
    let (u, v) = (d(&[1.0, 0.0]), d(&[0.0, 1.0]));
    let r = is_abs_orthogonal(&u, &v, &t).unwrap();
    assert!(r.holds && r.residual < EPS);
    let r = is_abs_orthogonal(&u, &u, &t).unwrap();
    assert!(!r.holds && (r.residual - 2.0).abs() < EPS);
    assert!(
        is_abs_orthogonal(&half_ones(), &HermitianMatrix::zeros(2), &t)
            .unwrap()
            .holds
    );

    assert!(
        is_p_orthogonal(&u, &v, PNorm::Infinity, &[(1.0, 1.0)], &t)
            .unwrap()
            .holds
    );
    assert!(
        !is_p_orthogonal(&u, &u, PNorm::Infinity, &[(1.0, 1.0)], &t)
            .unwrap()
            .holds
    );
    assert!(is_p_orthogonal(&u, &v, PNorm::One, &[(1.0, -1.0)], &t).unwrap().holds);

    let i = HermitianMatrix::identity(2);
    let r = is_abs_infty_orthogonal(&i, &i, InftyMode::Oracle, &t).unwrap();
    assert!(!r.holds && (r.residual - 1.0).abs() < EPS);
    let r = is_abs_infty_orthogonal(&u, &v, InftyMode::Sampled { samples: 100, seed: 0 }, &t).unwrap();
    assert!(r.holds && r.witness.is_empty());
}

#[test]
fn compatibility_examples() {
    let t = tol();
    let ctx = ModelContext::matrix_infty(2);
    let p = half_ones();
    assert!(is_absolutely_compatible(&p, &p, &ctx, &t).unwrap().holds);
    let r = is_absolutely_compatible(&p, &d(&[1.0, 0.0]), &ctx, &t).unwrap();
    assert!((r.residual - (2f64.sqrt() - 1.0)).abs() < 1e-12);

    // per coordinate |x−y| + |x+y−1| = max(|2x−1|, |2y−1|), which is 0.4 and 0.8 here,
    // so the residual is 1 − 0.4; a 0 or 1 in every coordinate makes it vanish
    let r = is_absolutely_compatible(&d(&[0.3, 0.9]), &d(&[0.5, 0.2]), &ctx, &t).unwrap();
    assert!(!r.holds && (r.residual - 0.6).abs() < 1e-12);
    assert!(
        is_absolutely_compatible(&d(&[0.3, 1.0]), &d(&[0.0, 0.2]), &ctx, &t)
            .unwrap()
            .holds
    );

    let pc = symmetrized_product_check(&p, &p, &ctx, &t).unwrap();
    assert!(pc.agree() && pc.product_holds);
    let pc = symmetrized_product_check(&d(&[0.4, 0.0]), &d(&[0.0, 0.7]), &ctx, &t).unwrap();
    assert!(pc.agree() && pc.product_holds);
    let pc = symmetrized_product_check(&p, &d(&[1.0, 0.0]), &ctx, &t).unwrap();
    assert!(pc.agree() && !pc.product_holds);
}

#[test]
fn order_projection_examples() {
    let t = tol();
    let ctx = ModelContext::matrix_infty(2);
    for m in [HermitianMatrix::zeros(2), HermitianMatrix::identity(2), d(&[1.0, 0.0])] {
        assert!(is_order_projection(&m, &ctx, &t).unwrap().0);
    }
    assert!(!is_order_projection(&d(&[0.5, 0.0]), &ctx, &t).unwrap().0);

    let prof = projection_profile(&half_ones(), &ctx, 50, 0, &t).unwrap();
    assert!(prof.verdicts().iter().all(|&b| b));
    let prof = projection_profile(&d(&[0.5, 0.5]), &ctx, 50, 0, &t).unwrap();
    assert!(prof.verdicts().iter().all(|&b| !b));
    let w = prof.interval_witness.expect("interval witness");
    assert!(leq(&w, &d(&[0.5, 0.5]), &t).unwrap().holds);

    assert!(close(
        &range_projection(&d(&[2.0, 0.0, 0.5]), &t).unwrap().matrix,
        &d(&[1.0, 0.0, 1.0])
    ));
    assert!(close(&range_projection(&half_ones(), &t).unwrap().matrix, &half_ones()));
    assert!(close(
        &cover(&d(&[1.0, -2.0, 0.0]), &t).unwrap().matrix,
        &d(&[1.0, 1.0, 0.0])
    ));
    assert!(close(
        &cover(&rows(&[&[0.0, 1.0], &[1.0, 0.0]]), &t).unwrap().matrix,
        &HermitianMatrix::identity(2)
    ));
}

#[test]
fn projection_pairs() {
    let t = tol();
    let ctx3 = ModelContext::matrix_infty(3);
    let r = op_pair_relations(&op(&d(&[1.0, 0.0, 0.0]), 3), &op(&d(&[0.0, 1.0, 0.0]), 3), &ctx3, &t).unwrap();
    assert!(r.verdicts().iter().all(|&b| b));
    let ctx2 = ModelContext::matrix_infty(2);
    let q = op(&d(&[1.0, 0.0]), 2);
    let r = op_pair_relations(&q, &q, &ctx2, &t).unwrap();
    assert!(r.verdicts().iter().all(|&b| !b));
    let r = op_pair_relations(&op(&d(&[1.0, 0.0, 0.0]), 3), &op(&d(&[1.0, 1.0, 0.0]), 3), &ctx3, &t).unwrap();
    assert_eq!(r.difference_is_projection, Some(true));

    let (inf, sup) = op_meet_join(&op(&half_ones(), 2), &q, &t).unwrap();
    assert!(close(&inf.matrix, &HermitianMatrix::zeros(2)));
    assert!(close(&sup.matrix, &HermitianMatrix::identity(2)));

    let s = s_set_closure(&op(&d(&[1.0, 1.0, 0.0]), 3), &op(&d(&[0.0, 1.0, 1.0]), 3), &ctx3, &t).unwrap();
    assert!(s.closed);
    assert!(close(
        &s.elements[s.labels.iter().position(|l| *l == "r").unwrap()],
        &d(&[1.0, 0.0, 1.0])
    ));
}

#[test]
fn ac_and_decomposition() {
    let t = tol();
    let ctx = ModelContext::matrix_infty(2);
    let p = op(&d(&[1.0, 0.0]), 2);
    let dec = p_decompose(&d(&[3.0, -1.0]), &p, &t).unwrap();
    assert!(close(&dec.c_p, &d(&[3.0, 0.0])) && dec.membership_residual < EPS);
    let dec = p_decompose(&rows(&[&[0.0, 1.0], &[1.0, 0.0]]), &p, &t).unwrap();
    assert!((dec.membership_residual - 1.0).abs() < EPS && !dec.in_ac(&t));
    assert!(!ac_membership(&half_ones(), &p, &ctx, &t).unwrap().holds);
    assert!(ac_membership(&HermitianMatrix::zeros(2), &p, &ctx, &t).unwrap().holds);
}

#[test]
fn spectral_examples() {
    let t = tol();
    let ctx = ModelContext::matrix_infty(3);
    let v = d(&[2.0, -1.0, 0.5]);
    assert!(close(
        &c_pm(&v, 0.0, Sign::Plus, &ctx, &t).unwrap().matrix,
        &d(&[1.0, 0.0, 1.0])
    ));
    assert!(close(
        &c_pm(&v, 0.0, Sign::Minus, &ctx, &t).unwrap().matrix,
        &d(&[0.0, 1.0, 0.0])
    ));

    let fam = spectral_family(&v, &ctx, &t).unwrap();
    assert!(close(&fam.at(-1.0).matrix, &d(&[0.0, 1.0, 0.0])));
    assert!(close(&fam.at(0.5).matrix, &d(&[0.0, 1.0, 1.0])));
    assert!(close(&fam.at(2.0).matrix, &HermitianMatrix::identity(3)));
    assert!(family_properties(&fam, &ctx, &[-1.0, 0.0, 0.5, 2.0], &t).unwrap().holds);

    let s = sandwich_check(&v, &op(&d(&[0.0, 1.0, 0.0]), 3), 0.0, &ctx, &t).unwrap();
    assert!(s.compression_side && s.cover_side);

    let dec = spectral_decompose(&v, 0.5, &ctx, &t).unwrap();
    assert!(dec.error < 0.5);

    let x = rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let fam = spectral_family(&x, &ModelContext::matrix_infty(2), &t).unwrap();
    let minus = rows(&[&[0.5, -0.5], &[-0.5, 0.5]]);
    assert!(close(&fam.at(-1.0).matrix, &minus));
    assert!(close(&fam.at(0.0).matrix, &minus));
    let oc = oracle_compare(&fam, &[-2.0, -1.0, 0.0, 1.0, 2.0], &t).unwrap();
    assert!(oc.max_distance < EPS, "{oc:?} {:?}", fam.breakpoints);
}

#[test]
fn generators_and_embeddings() {
    let t = tol();
    let p = generate_single(&SampleRecipe::new(SampleKind::Projection { rank: 1 }, 2, 7)).unwrap();
    assert!((&p.matmul(&p) - p.as_dense()).frobenius_norm() < 1e-10);
    let (a, b) = generate_pair(&SampleRecipe::new(SampleKind::OrthogonalSupportPair, 4, 3)).unwrap();
    assert!(a.matmul(&b).operator_norm().unwrap() <= 1e-10);
    let (a, b) = generate_pair(&SampleRecipe::new(SampleKind::CommutingPair, 3, 1)).unwrap();
    assert!(a.commutator(&b).operator_norm().unwrap() <= 1e-12);

    assert!(close(&direct_sum(&d(&[1.0]), &d(&[2.0])), &d(&[1.0, 2.0])));
    assert!(close(&diagonal_embed(&[1.0, -2.0]).unwrap(), &d(&[1.0, -2.0])));
    assert_eq!(diagonal_embed(&[4.0]).unwrap().dim(), 1);
    let m = meet(
        &diagonal_embed(&[1.0, 5.0]).unwrap(),
        &diagonal_embed(&[3.0, -1.0]).unwrap(),
        &t,
    )
    .unwrap();
    assert!(close(&m, &d(&[1.0, -1.0])));
}
