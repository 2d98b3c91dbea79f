use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use liftlab::brauer::brauer_table;
use liftlab::chartab::character_table;
use liftlab::harness::{
    corpus_catalog, corpus_entry, render_report, run_group, run_suite, Config, Format, Selection, SuiteReport,
};
use liftlab::permgroup::{parse_group_file, set_order_bound, GroupRef};
use liftlab::pspecial::{factorize, is_p_prime_special, is_p_special};
use liftlab::Result;

#[derive(Parser)]
#[command(
    name = "liftlab",
    version,
    about = "Character tables, Brauer characters and lift counting for small p-solvable groups"
)]
struct Cli {
    /// TOML file with `order_bound` and `workers`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ordinary character table.
    Table {
        /// Group file, or the name of a corpus group.
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Irreducible Brauer characters, decomposition matrix and lifts.
    Ibr {
        group: String,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// p-special, p'-special and factorable irreducibles.
    Special {
        group: String,
        #[arg(short)]
        p: u64,
    },
    /// Run verifiers on one group.
    Verify {
        group: String,
        #[arg(short)]
        p: u64,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        check: Vec<String>,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run verifiers over the built-in corpus.
    Corpus {
        /// Only groups with these names.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        #[arg(short, value_delimiter = ',')]
        p: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

fn load_group(spec: &str) -> Result<(String, GroupRef)> {
    if !Path::new(spec).exists() {
        if let Some(e) = corpus_entry(spec) {
            return Ok((e.name.to_string(), e.group));
        }
    }
    let named = parse_group_file(Path::new(spec))?;
    Ok((named.name, named.group))
}

fn table(spec: &str, as_json: bool) -> Result<()> {
    let (name, g) = load_group(spec)?;
    let t = character_table(&g);
    if as_json {
        let classes: Vec<_> = g
            .classes()
            .iter()
            .map(|c| json!({"representative": c.representative.to_string(), "size": c.size, "order": c.element_order}))
            .collect();
        let rows: Vec<Vec<String>> = t
            .irreducibles()
            .iter()
            .map(|chi| chi.values().iter().map(|v| v.to_string()).collect())
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"group": name, "classes": classes, "irreducibles": rows}))
                .expect("json")
        );
        return Ok(());
    }
    let mut grid: Vec<Vec<String>> = vec![
        std::iter::once("class".to_string())
            .chain(g.classes().iter().map(|c| c.representative.to_string()))
            .collect(),
        std::iter::once("size".to_string())
            .chain(g.classes().iter().map(|c| c.size.to_string()))
            .collect(),
        std::iter::once("order".to_string())
            .chain(g.classes().iter().map(|c| c.element_order.to_string()))
            .collect(),
    ];
    for (i, chi) in t.irreducibles().iter().enumerate() {
        grid.push(
            std::iter::once(format!("X.{}", i + 1))
                .chain(chi.values().iter().map(|v| v.to_string()))
                .collect(),
        );
    }
    println!("{name}: order {}, {} classes", g.order(), g.class_count());
    print_grid(&grid);
    Ok(())
}

fn print_grid(grid: &[Vec<String>]) {
    let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            grid.iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in grid {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        println!("{}", cells.join("  ").trim_end());
    }
}

fn ibr_cmd(spec: &str, p: u64, as_json: bool) -> Result<()> {
    let (name, g) = load_group(spec)?;
    let bt = brauer_table(&g, p)?;
    let lifts: Vec<Vec<usize>> = (0..bt.irreducibles.len()).map(|j| bt.lift_indices(j)).collect();
    if as_json {
        let ibr: Vec<Vec<String>> = bt
            .irreducibles
            .iter()
            .map(|phi| phi.values().iter().map(|v| v.to_string()).collect())
            .collect();
        let lift_map: serde_json::Map<String, serde_json::Value> = lifts
            .iter()
            .enumerate()
            .map(|(j, l)| (j.to_string(), json!(l)))
            .collect();
        let out = json!({"group": name, "p": p, "ibr": ibr, "decomposition": bt.decomposition, "lifts": lift_map});
        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        return Ok(());
    }
    println!(
        "{name}: {} irreducible Brauer characters at p = {p}",
        bt.irreducibles.len()
    );
    for (j, phi) in bt.irreducibles.iter().enumerate() {
        println!(
            "phi.{}  degree {}  lifts {:?}  {:?}",
            j + 1,
            phi.degree(),
            lifts[j],
            phi
        );
    }
    println!("decomposition matrix:");
    let grid: Vec<Vec<String>> = bt
        .decomposition
        .iter()
        .enumerate()
        .map(|(i, row)| {
            std::iter::once(format!("X.{}", i + 1))
                .chain(row.iter().map(u64::to_string))
                .collect()
        })
        .collect();
    print_grid(&grid);
    Ok(())
}

fn special(spec: &str, p: u64) -> Result<()> {
    let (name, g) = load_group(spec)?;
    let mut grid = vec![vec![
        "char".to_string(),
        "degree".into(),
        format!("{p}-special"),
        format!("{p}'-special"),
        "factorable".into(),
        "factor degrees".into(),
    ]];
    for (i, chi) in character_table(&g).irreducibles().iter().enumerate() {
        let f = factorize(chi, p)?;
        grid.push(vec![
            format!("X.{}", i + 1),
            chi.degree().to_string(),
            is_p_special(chi, p)?.to_string(),
            is_p_prime_special(chi, p)?.to_string(),
            f.is_some().to_string(),
            f.map_or("-".into(), |f| {
                format!("{} x {}", f.p_part.degree(), f.p_prime_part.degree())
            }),
        ]);
    }
    println!("{name}, p = {p}");
    print_grid(&grid);
    Ok(())
}

fn finish(report: &SuiteReport, json_path: Option<&Path>) -> Result<ExitCode> {
    if let Some(path) = json_path {
        std::fs::write(path, render_report(report, Format::Json))
            .map_err(|e| liftlab::Error::Io(format!("{}: {e}", path.display())))?;
    }
    let s = &report.summary;
    for e in &report.entries {
        for c in &e.checks {
            println!(
                "{:<6} p={:<2} {:<11} {:?} {}/{} passed ({} vacuous){}",
                e.group,
                e.p,
                c.name,
                c.status,
                c.passed,
                c.instances,
                c.vacuous,
                c.note.as_ref().map(|n| format!("  [{n}]")).unwrap_or_default()
            );
            for w in c.witnesses.iter().filter(|w| !w.passed) {
                eprintln!("counterexample in {} {}: {} {:?}", e.group, c.name, w.label, w.details);
            }
        }
    }
    println!(
        "{} instances, {} passed, {} failed, {} vacuous, {} unsupported, {} errors",
        s.instances, s.passed, s.failed, s.vacuous, s.unsupported, s.errors
    );
    Ok(if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(bound) = config.order_bound {
        set_order_bound(bound);
    }
    let default_workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    match cli.command {
        Command::Table { group, json } => table(&group, json).map(|_| ExitCode::SUCCESS),
        Command::Ibr { group, p, json } => ibr_cmd(&group, p, json).map(|_| ExitCode::SUCCESS),
        Command::Special { group, p } => special(&group, p).map(|_| ExitCode::SUCCESS),
        Command::Verify { group, p, check, json } => {
            let (name, g) = load_group(&group)?;
            let report = run_group(&name, &g, p, &check, config.workers.unwrap_or(default_workers))?;
            finish(&report, json.as_deref())
        }
        Command::Corpus {
            filter,
            p,
            check,
            json,
            workers,
        } => {
            let selection = Selection {
                groups: filter,
                primes: p,
                checks: check,
            };
            let workers = workers.or(config.workers).unwrap_or(default_workers);
            let report = run_suite(&corpus_catalog(), &selection, workers)?;
            finish(&report, json.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
