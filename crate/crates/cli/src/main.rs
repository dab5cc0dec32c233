//! `pbq`: parity biquandle invariants from the command line.
//!
//! Exit codes: 0 success, 1 bad input, 2 internal failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use pbq_core::batch::{load_table, run_batch, BatchError, BatchOptions, LoadOptions};
use pbq_core::diagram::{Diagram, ParseOptions};
use pbq_core::engine::{compute_invariant, EngineError, Options};
use pbq_core::parity::classify;
use pbq_core::ring::RingError;
use pbq_core::switches::{verify_ruleset, Family, QuaternionUnits};

#[derive(Parser)]
#[command(
    name = "pbq",
    version,
    about = "Parity biquandle invariants of virtual knots and links"
)]
struct Cli {
    /// Read real passes without a sign as positive.
    #[arg(long, global = true)]
    permissive_signs: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Gauss code and print its canonical form.
    Parse { code: String },
    /// Even/odd/link label of every real crossing, as JSON.
    Parity { code: String },
    /// Invariant polynomial, bounds and flags, as JSON.
    Invariant {
        code: String,
        #[arg(long)]
        family: Family,
        /// Quaternion units `U,V` for the quaternionic families.
        #[arg(long, default_value = "i,j")]
        quaternion_units: QuaternionUnits,
    },
    /// Crossing-number lower bounds, as JSON.
    Bounds {
        code: String,
        #[arg(long)]
        family: Family,
        #[arg(long, default_value = "i,j")]
        quaternion_units: QuaternionUnits,
    },
    /// Check the switch axioms and Yang-Baxter identities of a family.
    VerifyAxioms {
        #[arg(long)]
        family: Family,
        /// Number of link components the rule set is built for.
        #[arg(long, default_value_t = 1)]
        components: usize,
        #[arg(long, default_value = "i,j")]
        quaternion_units: QuaternionUnits,
    },
    /// Evaluate families over a knot table.
    Batch {
        table: PathBuf,
        /// Comma-separated family names.
        #[arg(long, value_delimiter = ',', default_value = "sawollek,z-parity")]
        families: Vec<Family>,
        /// Report path; `.csv` writes CSV, anything else JSON. Defaults to
        /// JSON on stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fail on the first bad table line instead of skipping it.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value = "i,j")]
        quaternion_units: QuaternionUnits,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Ring(RingError::Parse(_))
            | EngineError::Diagram(_)
            | EngineError::Switch(_) => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<BatchError> for Failure {
    fn from(e: BatchError) -> Self {
        match e {
            BatchError::Io(_) | BatchError::Table(_) => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let parse_opts = ParseOptions {
        permissive_signs: cli.permissive_signs,
    };
    let diagram = |code: &str| {
        Diagram::parse_with(code, parse_opts).map_err(|e| Failure::Input(e.to_string()))
    };
    match cli.command {
        Command::Parse { code } => {
            let d = diagram(&code)?;
            log::info!(
                "{} component(s), {} real, {} virtual crossing(s), writhe {}",
                d.component_count(),
                d.real_crossing_count(),
                d.virtual_crossing_count(),
                d.writhe()
            );
            println!("{d}");
        }
        Command::Parity { code } => print_json(&classify(&diagram(&code)?))?,
        Command::Invariant {
            code,
            family,
            quaternion_units,
        } => {
            let opts = Options {
                units: quaternion_units,
            };
            print_json(&compute_invariant(&diagram(&code)?, family, &opts)?)?;
        }
        Command::Bounds {
            code,
            family,
            quaternion_units,
        } => {
            let opts = Options {
                units: quaternion_units,
            };
            print_json(&compute_invariant(&diagram(&code)?, family, &opts)?.bounds)?;
        }
        Command::VerifyAxioms {
            family,
            components,
            quaternion_units,
        } => {
            let input = |e: pbq_core::switches::SwitchError| Failure::Input(e.to_string());
            let report = if family.is_quaternionic() {
                verify_ruleset(
                    &family
                        .quaternion_rules(components, &quaternion_units)
                        .map_err(input)?,
                )
            } else {
                verify_ruleset(&family.int_rules(components).map_err(input)?)
            };
            print_json(&report)?;
            if !report.passed() {
                return Err(Failure::Internal(format!(
                    "failed: {}",
                    report.failures().join(", ")
                )));
            }
        }
        Command::Batch {
            table,
            families,
            out,
            strict,
            jobs,
            quaternion_units,
        } => {
            let loaded = load_table(
                &table,
                LoadOptions {
                    strict,
                    parse: parse_opts,
                },
            )?;
            for e in &loaded.errors {
                log::warn!("skipped {e}");
            }
            log::info!(
                "{} entries, families {:?}",
                loaded.entries.len(),
                families.iter().map(|f| f.name()).collect::<Vec<_>>()
            );
            let opts = BatchOptions {
                eval: Options {
                    units: quaternion_units,
                },
                jobs,
            };
            let report = run_batch(&loaded.entries, &families, &opts)?;
            match out {
                Some(path) if path.extension().is_some_and(|e| e == "csv") => {
                    report.write_csv(BufWriter::new(File::create(path)?))?;
                }
                Some(path) => {
                    let mut f = BufWriter::new(File::create(path)?);
                    writeln!(f, "{}", report.to_json()?)?;
                    f.flush()?;
                }
                None => println!("{}", report.to_json()?),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
