use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand};
use weakcomm_core::enumerate::{enumerate, Limits};
use weakcomm_core::model::model_group;
use weakcomm_core::weak::{
    build_chi, build_nu, build_r, chi_presentation, nu_presentation, schur_multiplier,
    TripleFamily,
};
use weakcomm_core::{Error, FiniteGroupModel, PermGroup, Presentation};
use weakcomm_harness::suites::is_budget_error;
use weakcomm_harness::{catalog, lookup, run_suite, Format, RunOptions, Suite};

#[derive(Parser)]
#[command(name = "weakcomm", version, about = "Weak commutativity groups of finite presentations")]
struct Cli {
    /// Coset definitions allowed per enumeration.
    #[arg(long, global = true)]
    budget_cosets: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a group from a presentation file or catalog key.
    Build { group: String },
    /// Build chi(H).
    Chi {
        key: String,
        /// Print the presentation of chi(H).
        #[arg(long)]
        emit_presentation: bool,
        /// Print the canonical subgroups and their invariants.
        #[arg(long)]
        subgroups: bool,
    },
    /// Build nu(H) and compare with the generator-triple presentation.
    Nu { key: String },
    /// Compute the Schur multiplier both ways.
    Schur { key: String },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Comma-separated catalog keys.
        #[arg(long, value_delimiter = ',')]
        select: Option<Vec<String>>,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-entry wall time.
        #[arg(long)]
        timings: bool,
        /// Wall-time budget per catalog entry, in seconds.
        #[arg(long, default_value_t = 300)]
        budget_seconds: u64,
    },
    /// Inspect the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
}

enum Failure {
    Usage(String),
    Budget(Error),
    Other(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if is_budget_error(&e) {
            Failure::Budget(e)
        } else {
            Failure::Other(e)
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    cli.budget_cosets.map_or_else(Limits::default, Limits::cosets)
}

fn presentation(arg: &str) -> Result<Presentation, Failure> {
    if let Some(e) = lookup(arg) {
        return Ok(e.presentation.clone());
    }
    let text = fs::read_to_string(arg)
        .map_err(|e| Failure::Usage(format!("{arg} is neither a catalog key nor a readable file: {e}")))?;
    Presentation::parse(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}

fn model(arg: &str, limits: Limits) -> Result<Arc<FiniteGroupModel>, Failure> {
    Ok(Arc::new(model_group(&presentation(arg)?, limits)?))
}

fn describe(name: &str, g: &PermGroup) {
    println!("{name:<10} order {:<8} abelian invariants {}", g.order(), g.abelian_invariants());
}

fn run(cli: &Cli) -> Result<i32, Failure> {
    let limits = limits(cli);
    match &cli.command {
        Command::Build { group } => {
            let p = presentation(group)?;
            let table = enumerate(&p, &[], limits).map_err(Error::from)?;
            println!("order: {}", table.len());
            println!("elements: {}", table.len());
        }
        Command::Chi { key, emit_presentation, subgroups } => {
            let m = model(key, limits)?;
            if *emit_presentation {
                print!("{}", chi_presentation(&m));
                println!();
            }
            let c = build_chi(&m, limits)?;
            println!("|H| = {}", m.order());
            println!("|chi(H)| = {}", c.order());
            if *subgroups {
                let r = build_r(&c)?;
                describe("L", c.l());
                describe("D", c.d());
                describe("W", c.w());
                describe("DL", c.dl());
                describe("L'", c.l_derived());
                describe("L' ∩ W", c.l_derived_cap_w());
                describe("R", &r);
            }
        }
        Command::Nu { key } => {
            let m = model(key, limits)?;
            let n = build_nu(&m, limits)?;
            println!("|nu(H)| = {}", n.order());
            describe("tau", n.tau());
            describe("Delta", n.delta());
            describe("J", n.nu_j());
            let m_inv = n.nu_j().quotient(n.delta()).map_err(Error::from)?.into_group();
            println!("M(H) via J/Delta: {}", m_inv.abelian_invariants());
            let small = nu_presentation(&m, TripleFamily::Generators)?;
            match enumerate(&small, &[], limits) {
                Ok(t) => println!(
                    "generator triples only: order {} ({})",
                    t.len(),
                    if t.len() as u128 == n.order() { "same group" } else { "different group" }
                ),
                Err(e) => println!("generator triples only: not enumerated ({e})"),
            }
        }
        Command::Schur { key } => {
            let m = model(key, limits)?;
            let c = build_chi(&m, limits)?;
            let r = build_r(&c)?;
            let n = build_nu(&m, limits)?;
            let s = schur_multiplier(&c, &r, &n)?;
            println!("W/R:     {}", s.via_chi);
            println!("J/Delta: {}", s.via_nu);
            println!("agree:   {}", s.agree);
            if !s.agree {
                return Ok(1);
            }
        }
        Command::Verify { suite, select, format, out, timings, budget_seconds } => {
            let suites = Suite::parse_selection(suite)
                .ok_or_else(|| Failure::Usage(format!("unknown suite {suite:?}")))?;
            if let Some(keys) = select {
                if let Some(bad) = keys.iter().find(|k| lookup(k).is_none()) {
                    return Err(Failure::Usage(format!("unknown catalog key {bad:?}")));
                }
            }
            let opts = RunOptions {
                max_cosets: cli.budget_cosets,
                time_budget: Some(Duration::from_secs(*budget_seconds)),
                timings: *timings,
                select: select.clone(),
            };
            let report = run_suite(suite, &suites, &opts);
            let text = report.emit(*format);
            match out {
                Some(path) => fs::write(path, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            return Ok(report.exit_code());
        }
        Command::Catalog { action: CatalogAction::List } => {
            for e in catalog() {
                let order = e.order().map_or("?".into(), |o| o.to_string());
                let note = e.note.as_deref().unwrap_or("");
                println!("{:<8} {:<11} order {:<4} {note}", e.key, e.family, order);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Budget(e)) => {
            eprintln!("budget exhausted: {e}");
            3
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            1
        }
    };
    ExitCode::from(code as u8)
}
