//! The layer condition decides when the canonical completion is the answer.
//!
//!     cargo run --example canonical_and_condition

use bca::completions::canonical_completion;
use bca::gallery::star_beside_isolated;
use bca::solver::{bca_canonical, condition_star, CanonicalOutcome};
use bca::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    for k in 1..=4 {
        let p = star_beside_isolated(k)?;
        let report = condition_star(&p, &limits)?;
        print!(
            "k = {k}: {}, canonical {}",
            report.verdict.name(),
            canonical_completion(&p)
        );
        if let Some(w) = report.first_witness() {
            print!(
                "  (S = {}, index {} vs bound {})",
                p.ground().format_subset(w.subset),
                w.index,
                w.bound
            );
        }
        println!();

        match bca_canonical(&p, &limits)? {
            CanonicalOutcome::Applies { report, .. } => {
                println!("  certified at distance {}", report.distance)
            }
            CanonicalOutcome::NotApplicable(_) => println!("  not certified"),
        }
    }
    Ok(())
}
