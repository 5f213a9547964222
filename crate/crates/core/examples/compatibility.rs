//! Absolute compatibility against commutation and the symmetrized product.
//!
//!     cargo run --example compatibility

use rand::Rng;

use aous::models::{commuting_pair, random_unit_interval, random_unitary, rng_from_seed};
use aous::order::{is_absolutely_compatible, symmetrized_product_check};
use aous::{HermitianMatrix, ModelContext, ToleranceProfile};

fn main() -> aous::Result<()> {
    let tol = ToleranceProfile::default();
    let ctx = ModelContext::matrix_infty(2);

    // two rank-one projections at 45 degrees
    let p = HermitianMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]])?;
    let q = HermitianMatrix::diag(&[1.0, 0.0]);
    let v = is_absolutely_compatible(&p, &q, &ctx, &tol)?;
    println!(
        "p, q: compatible={} residual={:.10} (sqrt 2 - 1 = {:.10})",
        v.holds,
        v.residual,
        2f64.sqrt() - 1.0
    );

    // the diagonal pair below is commuting but not compatible: 0.3 and 0.5 are both interior
    let a = HermitianMatrix::diag(&[0.3, 0.9]);
    let b = HermitianMatrix::diag(&[0.5, 0.2]);
    let v = is_absolutely_compatible(&a, &b, &ctx, &tol)?;
    println!(
        "diag(0.3, 0.9), diag(0.5, 0.2): compatible={} residual={:.3}",
        v.holds, v.residual
    );

    let a = HermitianMatrix::diag(&[1.0, 0.4]);
    let b = HermitianMatrix::diag(&[0.7, 0.0]);
    let check = symmetrized_product_check(&a, &b, &ctx, &tol)?;
    println!(
        "diag(1, 0.4), diag(0.7, 0): compatible={} product identity={} (agree={})",
        check.compatibility.holds,
        check.product_holds,
        check.agree()
    );

    let mut rng = rng_from_seed(5);
    let ctx4 = ModelContext::matrix_infty(4);
    let (mut agree, trials) = (0, 200);
    for _ in 0..trials {
        let (a, b) = if rng.random_bool(0.5) {
            let basis = random_unitary(&mut rng, 4);
            commuting_pair(&mut rng, &basis)
        } else {
            let b1 = random_unitary(&mut rng, 4);
            let b2 = random_unitary(&mut rng, 4);
            (random_unit_interval(&mut rng, &b1), random_unit_interval(&mut rng, &b2))
        };
        if symmetrized_product_check(&a, &b, &ctx4, &tol)?.agree() {
            agree += 1;
        }
    }
    println!("symmetrized product vs compatibility: {agree}/{trials} pairs agree");
    Ok(())
}
