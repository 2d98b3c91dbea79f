//! Checks the lift-count bounds on GL(2,3) at p = 3 and prints the witnesses.
//!
//! ```bash
//! cargo run --example lift_bounds
//! ```

use liftlab::harness::corpus_entry;
use liftlab::vertex::{corollary_b_verify, theorem_a_suite};

fn main() -> liftlab::Result<()> {
    let g = corpus_entry("GL23").expect("in corpus").group;
    for report in [theorem_a_suite(&g, 3)?, corollary_b_verify(&g, 3)?] {
        println!(
            "{}: {}/{} passed, {} vacuous",
            report.claim, report.passed, report.instances, report.vacuous
        );
        for w in &report.witnesses {
            let get = |k: &str| w.details.get(k).cloned().unwrap_or_default();
            println!(
                "  {:<60} |L| = {:<2} bound {:<2} {}",
                w.label,
                get("L_size"),
                get("bound"),
                if w.passed { "ok" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
