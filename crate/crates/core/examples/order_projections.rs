//! Order projections: membership, covers, the lattice operations and the
//! compression `v -> (p v p, p' v p')`.
//!
//!     cargo run --example order_projections

use aous::models::{basis_projection, random_hermitian, random_unitary, rng_from_seed};
use aous::projections::{
    cover, is_order_projection, meet_compatibility_check, op_meet_join, p_decompose, range_projection,
};
use aous::{HermitianMatrix, ModelContext, OrderProjection, ToleranceProfile};

fn main() -> aous::Result<()> {
    let tol = ToleranceProfile::default();
    let ctx = ModelContext::matrix_infty(3);
    let mut rng = rng_from_seed(3);
    let basis = random_unitary(&mut rng, 3);

    let p = basis_projection(&basis, 2);
    let (is_op, _) = is_order_projection(&p, &ctx, &tol)?;
    println!("rank-2 projection in OP: {is_op}");
    let half = p.scale(0.5);
    println!("p / 2 in OP: {}", is_order_projection(&half, &ctx, &tol)?.0);

    let v = random_hermitian(&mut rng, 3).compress(&p);
    let c = cover(&v, &tol)?;
    println!("cover of p v p has rank {}", c.rank());
    println!("range projection of p has rank {}", range_projection(&p, &tol)?.rank());

    let p = OrderProjection::new(&p, &ctx, &tol)?;
    let w = random_hermitian(&mut rng, 3);
    let d = p_decompose(&w, &p, &tol)?;
    println!(
        "generic w: in AC(p)={} off-diagonal residual={:.3e}",
        d.in_ac(&tol),
        d.membership_residual
    );
    let block = &d.c_p + &d.c_p_prime;
    let d = p_decompose(&block, &p, &tol)?;
    println!(
        "p w p + p' w p': in AC(p)={} residual={:.3e}",
        d.in_ac(&tol),
        d.membership_residual
    );

    let q = OrderProjection::new(&HermitianMatrix::diag(&[1.0, 0.0, 0.0]), &ctx, &tol)?;
    let (inf, sup) = op_meet_join(&p, &q, &tol)?;
    println!("inf rank {}, sup rank {}", inf.rank(), sup.rank());
    let m = meet_compatibility_check(&p, &q, &ctx, &tol)?;
    println!(
        "p, q compatible={} commute={} (||pq - qp|| = {:.3e})",
        m.compatible, m.commute, m.commutator_norm
    );
    Ok(())
}
