//! The ordinary character table of GL(2,3) and some Clifford theory.
//!
//! ```bash
//! cargo run --example character_table
//! ```

use liftlab::chartab::{character_table, constituents, induce, inner_product, restrict};
use liftlab::harness::corpus_entry;

fn main() -> liftlab::Result<()> {
    let g = corpus_entry("GL23").expect("in corpus").group;
    let table = character_table(&g);
    println!("GL(2,3): {} classes, degrees {:?}", table.len(), table.degrees());
    for (i, chi) in table.irreducibles().iter().enumerate() {
        println!("  X.{} {:?}", i + 1, chi);
    }

    let sl = g.derived_subgroup();
    let chi = &table.irreducibles()[7];
    println!("\nrestricting X.8 to SL(2,3):");
    for (theta, m) in constituents(chi, &sl)? {
        println!("  {m} x {theta:?}");
    }
    let theta = restrict(chi, &sl)?;
    let back = induce(&constituents(chi, &sl)?[0].0, &g)?;
    println!("<X.8|SL, X.8|SL> = {}", inner_product(&theta, &theta)?);
    println!("first constituent induced back: {back:?}");
    for (i, d) in table.determinant_orders().iter().enumerate() {
        println!("  det order of X.{} = {d}", i + 1);
    }
    Ok(())
}
