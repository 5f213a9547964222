//! Orthogonality predicates on a pair with disjoint supports and on an
//! overlapping pair.
//!
//!     cargo run --example orthogonality

use aous::models::{orthogonal_support_pair, random_psd, random_unitary, rng_from_seed};
use aous::order::{
    is_abs_infty_orthogonal, is_abs_orthogonal, is_p_orthogonal, InftyMode, PNorm, DEFAULT_COEFFICIENTS,
};
use aous::{HermitianMatrix, OrthoVerdict, ToleranceProfile};

fn show(label: &str, v: &OrthoVerdict) {
    println!("  {label:<18} holds={:<5} residual={:.3e}", v.holds, v.residual);
}

fn report(name: &str, a: &HermitianMatrix, b: &HermitianMatrix, tol: &ToleranceProfile) -> aous::Result<()> {
    println!("{name}: ||ab|| = {:.3e}", a.matmul(b).operator_norm()?);
    show("absolute", &is_abs_orthogonal(a, b, tol)?);
    show("p = 1", &is_p_orthogonal(a, b, PNorm::One, &DEFAULT_COEFFICIENTS, tol)?);
    show(
        "p = infinity",
        &is_p_orthogonal(a, b, PNorm::Infinity, &DEFAULT_COEFFICIENTS, tol)?,
    );
    show(
        "abs-inf oracle",
        &is_abs_infty_orthogonal(a, b, InftyMode::Oracle, tol)?,
    );
    let sampled = InftyMode::Sampled { samples: 32, seed: 7 };
    show("abs-inf sampled", &is_abs_infty_orthogonal(a, b, sampled, tol)?);
    Ok(())
}

fn main() -> aous::Result<()> {
    let tol = ToleranceProfile::default();
    let mut rng = rng_from_seed(11);
    let basis = random_unitary(&mut rng, 4);
    let (a, b) = orthogonal_support_pair(&mut rng, &basis);
    report("orthogonal supports", &a, &b, &tol)?;

    let c = random_psd(&mut rng, 4);
    let d = random_psd(&mut rng, 4);
    report("overlapping", &c, &d, &tol)?;
    Ok(())
}
