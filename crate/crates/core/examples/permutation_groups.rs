//! Classes, Sylow subgroups and the subgroup lattice of S4.
//!
//! ```bash
//! cargo run --example permutation_groups
//! ```

use liftlab::permgroup::parse_cycles;
use liftlab::Group;

fn main() -> liftlab::Result<()> {
    let gens = [parse_cycles(4, "(1,2)")?, parse_cycles(4, "(1,2,3,4)")?];
    let s4 = Group::from_generators(4, &gens)?;
    println!("|S4| = {}, exponent {}", s4.order(), s4.exponent());
    for c in s4.classes() {
        println!(
            "  class of {:<12} size {:>2}, order {}",
            c.representative.to_string(),
            c.size,
            c.element_order
        );
    }
    for p in [2, 3] {
        let sylow = s4.sylow(p)?;
        let n = s4.normalizer(&sylow)?;
        println!("Sylow {p}: order {}, normalizer order {}", sylow.order(), n.order());
    }
    let reps = s4.subgroups_up_to_conjugacy()?;
    let orders: Vec<usize> = reps.iter().map(|h| h.order()).collect();
    println!("{} subgroup classes, orders {orders:?}", reps.len());
    println!(
        "{} subgroups in all, {} normal",
        s4.all_subgroups()?.len(),
        s4.normal_subgroups()?.len()
    );
    println!("derived subgroup order {}", s4.derived_subgroup().order());
    Ok(())
}
