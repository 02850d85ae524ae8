use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ringcodes::oracle::{EnumBudget, DEFAULT_BUDGET};
use ringcodes_cli::sweep::{self, SweepKind};
use ringcodes_cli::{tables, Input, Report};

#[derive(Parser)]
#[command(name = "ringcodes", version, about = "Cyclic codes over F_p[u,v,w]/<u^2,v^2,w^2>")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Characteristic of the base field.
    #[arg(short)]
    p: u32,
    /// Code length.
    #[arg(short)]
    n: usize,
    /// Generators, separated by ',' or ';' or given as separate arguments.
    #[arg(required = true)]
    generators: Vec<String>,
    /// Binds a free constant, e.g. `--set c1=2`.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
    /// Evaluate over all bindings of the free constants.
    #[arg(long)]
    sweep: bool,
    /// Maximum number of codewords to enumerate exactly.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical generators and tower polynomials.
    Canon(Common),
    /// Check the structural conditions on the canonical generators.
    Verify(Common),
    /// Formula rank and its spanning set.
    Rank(Common),
    /// Hamming distance, by theorem where it applies and by enumeration.
    Distance(Common),
    /// Parameters of the Gray image.
    Gray(Common),
    /// Brute-force weights, module rank and freeness.
    Oracle(Common),
    /// Recompute the bundled example tables.
    Tables {
        /// Restrict to a single table id, e.g. T3.
        #[arg(long)]
        table: Option<String>,
        /// Read the expected values from this file instead.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, conflicts_with = "json")]
        tsv: bool,
    },
}

fn input(c: &Common) -> anyhow::Result<Input> {
    let mut input = Input::new(c.p, c.n, c.generators.clone())?;
    input.bindings = ringcodes_cli::parse_bindings(c.set.iter().map(String::as_str))?;
    input.budget = EnumBudget::new(c.budget);
    Ok(input)
}

enum Format {
    Text,
    Json,
    Tsv(String),
}

fn run(cli: Cli) -> anyhow::Result<(Report, Format)> {
    let with = |c: &Common, f: fn(&Input) -> ringcodes::Result<Report>, kind: Option<SweepKind>| {
        let input = input(c)?;
        let report = match (c.sweep, kind) {
            (true, Some(k)) => sweep::sweep_report(&input, k)?,
            (true, None) => anyhow::bail!("--sweep is only supported by rank, distance and gray"),
            (false, _) => f(&input)?,
        };
        Ok((report, if c.json { Format::Json } else { Format::Text }))
    };
    match cli.command {
        Command::Canon(c) => with(&c, ringcodes_cli::canon, None),
        Command::Verify(c) => with(&c, ringcodes_cli::verify, None),
        Command::Rank(c) => with(&c, ringcodes_cli::rank, Some(SweepKind::Rank)),
        Command::Distance(c) => with(&c, ringcodes_cli::distance, Some(SweepKind::Distance)),
        Command::Gray(c) => with(&c, ringcodes_cli::gray, Some(SweepKind::Gray)),
        Command::Oracle(c) => with(&c, ringcodes_cli::oracle_report, None),
        Command::Tables {
            table,
            file,
            budget,
            json,
            tsv,
        } => {
            let text = match &file {
                Some(path) => std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                None => tables::EXPECTED.to_string(),
            };
            let (rows, report) = tables::run(&text, EnumBudget::new(budget), table.as_deref())?;
            let format = if tsv {
                Format::Tsv(tables::to_tsv(&rows))
            } else if json {
                Format::Json
            } else {
                Format::Text
            };
            Ok((report, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, format)) => {
            match format {
                Format::Json => println!("{}", report.json),
                Format::Text => print!("{}", report.text),
                Format::Tsv(s) => print!("{s}"),
            }
            if report.budget_exceeded {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let kind = match e.downcast_ref::<ringcodes::Error>() {
                Some(ringcodes::Error::Parse { .. }) => "parse",
                Some(ringcodes::Error::UnboundConstants(_)) => "unbound-constants",
                Some(ringcodes::Error::BudgetExceeded { .. }) => "budget-exceeded",
                Some(_) => "invalid-input",
                None => "io",
            };
            eprintln!("{}", json!({ "error": kind, "message": format!("{e:#}") }));
            if kind == "budget-exceeded" {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
