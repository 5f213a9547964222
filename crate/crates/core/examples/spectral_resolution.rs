//! Spectral family of a Hermitian matrix and the step-function
//! approximation on a uniform grid.
//!
//!     cargo run --example spectral_resolution -- 0.1

use aous::models::{random_hermitian, rng_from_seed};
use aous::spectral::{oracle_compare, spectral_decompose, spectral_family, DecompositionReport};
use aous::{ModelContext, ToleranceProfile};

fn main() -> aous::Result<()> {
    let epsilon: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.1);
    let tol = ToleranceProfile::default();
    let ctx = ModelContext::matrix_infty(6);
    let v = random_hermitian(&mut rng_from_seed(8), 6);

    let family = spectral_family(&v, &ctx, &tol)?;
    for (b, p) in family.breakpoints.iter().zip(&family.projections) {
        println!("e({b:+.4}) has rank {}", p.rank());
    }
    let alphas: Vec<f64> = (-20..=20).map(|k| k as f64 * 0.15).collect();
    let cmp = oracle_compare(&family, &alphas, &tol)?;
    println!("max distance to eigenprojections: {:.2e}", cmp.max_distance);

    let d = spectral_decompose(&v, epsilon, &ctx, &tol)?;
    let report = DecompositionReport::new(&v, &d);
    println!(
        "epsilon={epsilon} cells={} max gap={:.4} error={:.4} increments={}",
        d.grid.cells(),
        report.max_gap,
        d.error,
        d.increments.len()
    );
    println!(
        "{}",
        serde_json::to_string_pretty(&report.increments).expect("serializes")
    );
    Ok(())
}
