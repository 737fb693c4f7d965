use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use heegner_cli::commands;
use heegner_cli::selftest;
use heegner_cli::{Emitter, Format, Record, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "heegner", version, about = "Unit identity for pure cubic fields and Heegner points on y² = x³ + D")]
struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, env = "HEEGNER_PRECISION", default_value_t = 384)]
    precision: usize,
    /// Guard bits added on top of the working precision.
    #[arg(long, global = true, default_value_t = 16)]
    guard: usize,
    /// Denominator digit budget for rational recognition (grows with precision).
    #[arg(long, global = true, default_value_t = 80)]
    max_digits: u32,
    /// Ceiling for automatic precision doubling.
    #[arg(long, global = true, default_value_t = 16384)]
    max_precision: usize,
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::JsonLines)]
    format: Format,
    /// Report wall_time_ms as 0 so that reruns are byte-identical.
    #[arg(long, global = true)]
    reproducible: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check |N(U)|² = 3^{f(n)}·u^{3hσ(n/n′)} for one n.
    UnitIdentity {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Build the rational point on y² = x³ + εD for D = a/b.
    Construct {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
    /// Run unit-identity or construct over a range, one record per admissible parameter.
    #[command(group(ArgGroup::new("what").required(true).args(["unit", "points"])))]
    Scan {
        /// unit-identity for each admissible n in [min, max]
        #[arg(long)]
        unit: bool,
        /// construct for each admissible a with min ≤ |a| ≤ max
        #[arg(long)]
        points: bool,
        #[arg(long, default_value_t = 1)]
        min: i64,
        #[arg(long)]
        max: i64,
        /// Denominator b used with --points
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        b: i64,
    },
    /// Golden q-expansions, matrix invariants and combinatorial oracles.
    Selftest {
        /// Skip the class-group and unit oracles.
        #[arg(long)]
        quick: bool,
        /// Golden q-expansion file to use instead of the built-in one.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

fn emit_all(cfg: &RunConfig, records: &[Record]) -> io::Result<()> {
    let stdout = io::stdout();
    let mut em = Emitter::new(stdout.lock(), cfg.format);
    for r in records {
        em.emit(r)?;
    }
    em.into_inner().flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        precision_bits: cli.precision,
        guard_bits: cli.guard,
        max_digits: cli.max_digits,
        max_precision_bits: cli.max_precision,
        thread_count: cli.threads,
        format: cli.format,
        reproducible: cli.reproducible,
    };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if cfg.thread_count > 0 {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cfg.thread_count).build_global();
    }

    let records = match cli.cmd {
        Cmd::UnitIdentity { n } => vec![commands::unit_identity(n, &cfg)],
        Cmd::Construct { a, b } => vec![commands::construct(a, b, &cfg)],
        Cmd::Scan { unit, max, min, b, .. } => {
            if unit {
                commands::scan_units(min, max, &cfg)
            } else {
                commands::scan_points(min, max, b, &cfg)
            }
        }
        Cmd::Selftest { quick, golden } => {
            let text = match golden {
                None => selftest::GOLDEN.to_string(),
                Some(p) => match std::fs::read_to_string(&p) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("error: cannot read {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                },
            };
            selftest::run(&cfg, quick, &text)
        }
    };
    if let Err(e) = emit_all(&cfg, &records) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(commands::batch_exit(&records) as u8)
}
