use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jacdual_cli::*;

#[derive(Parser, Debug)]
#[command(name = "jacdual", version, about = "Verify Jacobian dual statements on concrete ideals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Override the characteristic of the input.
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    #[arg(long, value_enum, default_value_t = OrderChoice::Grevlex, global = true)]
    order: OrderChoice,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Largest power for the stabilization index (default: n).
    #[arg(long = "t-max", global = true)]
    t_max: Option<u32>,
    /// Step limit per Groebner computation.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, value_enum, value_delimiter = ',', global = true)]
    skip: Vec<Skip>,
    /// Random trials: row subsets for `check`/`corpus`, matrices for `lemmas`.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Suppress per-instance output.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run the battery on one input file (`-` for stdin).
    Check { file: String },
    /// Run the built-in corpus, optionally filtered (e.g. `monomial n=3 d=2`).
    Corpus { filter: Vec<String> },
    /// Random tests of the determinantal identities on `(n-1) x n` matrices.
    Lemmas {
        #[arg(long)]
        n: usize,
    },
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn run_config(cli: &Cli) -> RunConfig {
    let mut cfg = RunConfig {
        characteristic: cli.characteristic,
        order: cli.order,
        seed: cli.seed,
        t_max: cli.t_max,
        budget: cli.budget,
        skip: cli.skip.clone(),
        ..RunConfig::default()
    };
    if let Some(t) = cli.trials {
        cfg.trials = t;
    }
    cfg
}

fn write(cli: &Cli, value: &impl serde::Serialize) -> Result<(), ExitCode> {
    if let Some(path) = &cli.json {
        write_json_atomic(path, value).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(1)
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Check { file } => {
            let src = if file == "-" {
                let mut s = String::new();
                if let Err(e) = std::io::stdin().read_to_string(&mut s) {
                    return input_error(e);
                }
                s
            } else {
                match std::fs::read_to_string(file) {
                    Ok(s) => s,
                    Err(e) => return input_error(format!("{file}: {e}")),
                }
            };
            let mut desc = match parse_ideal(&src) {
                Ok(d) => d,
                Err(e) => return input_error(format!("{file}:{e}")),
            };
            if desc.label == "input" && file != "-" {
                desc.label = PathBuf::from(file).file_stem().map_or(desc.label.clone(), |s| s.to_string_lossy().into_owned());
            }
            let rep = match run_instance(&desc, &run_config(&cli)) {
                Ok(r) => r,
                Err(e) => return input_error(e),
            };
            if !cli.quiet {
                print!("{}", rep.summary());
            }
            if let Err(c) = write(&cli, &rep) {
                return c;
            }
            ExitCode::from(rep.outcome().exit_code() as u8)
        }
        Cmd::Corpus { filter } => {
            let f = match Filter::parse(&filter.join(" ")) {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let run = match corpus_run(&f, &run_config(&cli)) {
                Ok(r) => r,
                Err(e) => return input_error(e),
            };
            if !cli.quiet {
                for rep in &run.reports {
                    print!("{}", rep.summary());
                }
            }
            let s = &run.summary;
            println!(
                "{} instances, {} not applicable, {} hard failures, {} budget-exceeded checks",
                s.instances,
                s.not_applicable.len(),
                s.hard_failures.len(),
                s.budget_exceeded.len()
            );
            for h in &s.hard_failures {
                println!("  hard failure: {h}");
            }
            if let Err(c) = write(&cli, &run) {
                return c;
            }
            ExitCode::from(run.outcome().exit_code() as u8)
        }
        Cmd::Lemmas { n } => {
            let cfg = LemmaConfig {
                n: *n,
                trials: cli.trials.unwrap_or(50),
                seed: cli.seed,
                characteristic: cli.characteristic.unwrap_or(32003),
            };
            let s = match run_lemmas(&cfg) {
                Ok(s) => s,
                Err(e) => return input_error(e),
            };
            println!(
                "n={} char={} trials={}: {}/{} matrices pass the adjugate identities, {} cofactor identities, {} failures ({:.2}s)",
                s.n,
                s.char,
                s.trials,
                s.adjugate_passed,
                s.trials,
                s.cofactor_identities,
                s.failures.len(),
                s.seconds
            );
            for f in &s.failures {
                println!("  {f}");
            }
            if let Err(c) = write(&cli, &s) {
                return c;
            }
            ExitCode::from(if s.all_hold() { 0 } else { 1 })
        }
    }
}
