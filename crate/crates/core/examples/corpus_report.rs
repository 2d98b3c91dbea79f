//! Runs the verifier suite over part of the built-in corpus and renders markdown.
//!
//! ```bash
//! cargo run --example corpus_report -- S3 C3
//! ```

use liftlab::harness::{corpus_catalog, render_report, run_suite, Format, Selection};

fn main() -> liftlab::Result<()> {
    let groups: Vec<String> = std::env::args().skip(1).collect();
    let selection = Selection {
        groups: if groups.is_empty() {
            vec!["C3".into(), "F21".into()]
        } else {
            groups
        },
        ..Selection::all()
    };
    let report = run_suite(&corpus_catalog(), &selection, 4)?;
    println!("{}", render_report(&report, Format::Markdown));
    std::process::exit(if report.success() { 0 } else { 1 });
}
