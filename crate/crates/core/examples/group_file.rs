//! Loads a group from the text format and prints basic data.
//!
//! ```bash
//! cargo run --example group_file -- crates/core/data/f21.txt
//! ```

use std::path::PathBuf;

use liftlab::brauer::ibr;
use liftlab::chartab::character_table;
use liftlab::numtheory::prime_divisors;
use liftlab::permgroup::{parse_group_file, write_group_text};

fn main() -> liftlab::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/s3.txt"));
    let named = parse_group_file(&path)?;
    let g = &named.group;
    println!("{}: order {}, {} classes", named.name, g.order(), g.class_count());
    println!("degrees {:?}", character_table(g).degrees());
    for p in prime_divisors(g.order() as u64) {
        match ibr(g, p) {
            Ok(b) => println!("|IBr_{p}| = {}", b.len()),
            Err(e) => println!("p = {p}: {e}"),
        }
    }
    print!("{}", write_group_text(&named.name, g));
    Ok(())
}
