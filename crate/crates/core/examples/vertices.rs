//! Nuclei and vertex pairs of ordinary characters, vertices of Brauer characters.
//!
//! ```bash
//! cargo run --example vertices
//! ```

use liftlab::brauer::ibr;
use liftlab::chartab::character_table;
use liftlab::harness::corpus_entry;
use liftlab::vertex::{brauer_vertex, describe_group, nuclei, vertex, vertex_pairs};

fn main() -> liftlab::Result<()> {
    let g = corpus_entry("GL23").expect("in corpus").group;
    let p = 3;
    for (i, chi) in character_table(&g).irreducibles().iter().enumerate() {
        let pairs = vertex_pairs(chi, p)?;
        let v = vertex(chi, p)?;
        println!(
            "X.{} (degree {}): {} nuclei, {} vertex pair(s); canonical |Q| = {}, delta linear {}",
            i + 1,
            chi.degree(),
            nuclei(chi, p, None)?.len(),
            pairs.len(),
            v.q.order(),
            v.is_linear()
        );
    }
    for phi in ibr(&g, p)? {
        let q = brauer_vertex(&phi)?;
        println!("phi of degree {} has vertex {}", phi.degree(), describe_group(&q));
    }
    Ok(())
}
