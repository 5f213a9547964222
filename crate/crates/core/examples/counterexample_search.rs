//! Searches for violations of properties that hold in the lattice model but
//! fail for matrices.
//!
//!     cargo run --example counterexample_search

use aous::harness::{replay, search_counterexample, status_word, SEARCH_PROPERTIES};
use aous::{ModelContext, ToleranceProfile};

fn main() -> aous::Result<()> {
    let tol = ToleranceProfile::default();
    for ctx in [ModelContext::matrix_infty(2), ModelContext::diagonal_lattice(4)] {
        for (property, case) in SEARCH_PROPERTIES {
            let r = search_counterexample(property, 1000, 0, &ctx, &tol)?;
            println!(
                "{:<22} {:<20} {:<9} witnesses={:<4} worst={:.4}",
                property,
                r.context,
                status_word(r.status),
                r.theorem_failures,
                r.worst_residual
            );
            if let Some(w) = r.witnesses.first() {
                let again = replay(case, w, &ctx, &tol)?;
                println!("  first witness ({}) replays to {again:.6}", w.claim);
            }
        }
    }
    Ok(())
}
