//! Standard order families against their closed-form approximations.
//!
//!     cargo run --release --example families

use bca::families::FamilySpec;
use bca::solver::{bca_bruteforce, condition_star};
use bca::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let specs = [
        FamilySpec::Containment { z: 3 },
        FamilySpec::Refinement { z: 3 },
        FamilySpec::WordPrefix {
            alphabet: 2,
            k: 2,
            reverse: false,
        },
        FamilySpec::WordPrefix {
            alphabet: 2,
            k: 2,
            reverse: true,
        },
        FamilySpec::Coordinatewise { m: 2 },
        FamilySpec::Fence { k: 6 },
        FamilySpec::Crown { k: 6 },
    ];
    for spec in specs {
        let p = spec.generate()?;
        let r = bca_bruteforce(&p, &limits)?;
        let verdict = condition_star(&p, &limits)?.verdict;
        let matches = spec.expected_bca().map(|t| r.bca_set == [t]);
        println!("{spec:?}: n = {}, condition {}", p.len(), verdict.name());
        for t in &r.bca_set {
            println!("  {t}");
        }
        match matches {
            Ok(m) => println!("  closed form matches: {m}"),
            Err(_) => println!("  no closed form"),
        }
    }
    Ok(())
}
