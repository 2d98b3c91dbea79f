//! Brauer characters, decomposition matrices and lifts.
//!
//! ```bash
//! cargo run --example brauer_characters
//! ```

use liftlab::brauer::{brauer_table, lifts, p_regular_classes};
use liftlab::harness::corpus_entry;

fn main() -> liftlab::Result<()> {
    for (name, p) in [("S4", 3), ("S4", 2), ("GL23", 3), ("F21", 7)] {
        let g = corpus_entry(name).expect("in corpus").group;
        let bt = brauer_table(&g, p)?;
        println!(
            "{name} at p = {p}: {} p-regular classes",
            p_regular_classes(&g, p).len()
        );
        for phi in &bt.irreducibles {
            println!("  degree {} with {} lift(s): {phi:?}", phi.degree(), lifts(phi)?.len());
        }
        for row in &bt.decomposition {
            println!("    {row:?}");
        }
    }
    Ok(())
}
