//! p-special characters and the factorization of factorable characters.
//!
//! ```bash
//! cargo run --example special_characters
//! ```

use liftlab::chartab::character_table;
use liftlab::harness::corpus_entry;
use liftlab::pspecial::{factorize, is_g_stable, is_p_prime_special, is_p_special, p_special_extension};

fn main() -> liftlab::Result<()> {
    let g = corpus_entry("SL23").expect("in corpus").group;
    for p in [2, 3] {
        println!("SL(2,3), p = {p}");
        for chi in character_table(&g).irreducibles() {
            let f = factorize(chi, p)?;
            println!(
                "  degree {} p-special {:<5} p'-special {:<5} factors {}",
                chi.degree(),
                is_p_special(chi, p)?,
                is_p_prime_special(chi, p)?,
                f.map_or("-".to_string(), |f| format!(
                    "{} x {}",
                    f.p_part.degree(),
                    f.p_prime_part.degree()
                ))
            );
        }
    }

    // Which characters of a Sylow 3-subgroup extend to the p-special world?
    let q = g.sylow(3)?;
    for delta in character_table(&q).irreducibles() {
        let ext = p_special_extension(delta, &g.derived_subgroup(), 3)?;
        println!(
            "delta {delta:?}: stable {}, extension {:?}",
            is_g_stable(delta, &g)?,
            ext
        );
    }
    Ok(())
}
