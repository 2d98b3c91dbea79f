//! Built-in corpus, suite runner and reports.

mod corpus;
mod runner;

pub use corpus::{corpus_catalog, corpus_entry, rejection_catalog, CorpusEntry, Expected};
pub use runner::{
    golden_check, render_report, run_check, run_group, run_suite, CheckOutcome, Config, Format, Metadata, Selection,
    Status, SuiteEntry, SuiteReport, Summary, GOLDEN,
};
