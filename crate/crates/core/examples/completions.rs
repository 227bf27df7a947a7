//! Streaming the completions of a preorder under each filter.
//!
//!     cargo run --example completions

use bca::completions::{count_completions, enumerate_completions, CompletionFilter};
use bca::gallery::chain_with_side_branch;
use bca::{Limits, Result};

fn main() -> Result<()> {
    let p = chain_with_side_branch();
    let limits = Limits::default();
    println!("{} completions", count_completions(&p, &limits)?);
    for filter in [
        CompletionFilter::All,
        CompletionFilter::Maximal,
        CompletionFilter::Strict,
    ] {
        println!("{filter:?}:");
        for t in enumerate_completions(&p, filter, &limits)? {
            println!("  {t}");
        }
    }
    Ok(())
}
