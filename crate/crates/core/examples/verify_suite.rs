//! Runs the randomized verification suite and prints one line per case and
//! context. Pass a seed and a trial count to override the defaults.
//!
//!     cargo run --example verify_suite -- 0 100

use aous::harness::{run_suite, SuiteConfig};
use aous::ToleranceProfile;

fn main() -> aous::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let config = SuiteConfig {
        seed,
        trials,
        ..SuiteConfig::default()
    };
    let report = run_suite(&config, &ToleranceProfile::default())?;
    print!("{}", report.render_text());
    for r in report.reports.iter().filter(|r| r.theorem_failures > 0 || r.errors > 0) {
        for m in &r.error_messages {
            println!("  {} {}: {m}", r.case, r.context);
        }
        for w in &r.witnesses {
            println!(
                "  {} {}: claim {} residual {:.3e} ({:?})",
                r.case, r.context, w.claim, w.residual, w.class
            );
        }
    }
    if !report.passed {
        std::process::exit(1);
    }
    Ok(())
}
