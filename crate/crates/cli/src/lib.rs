//! Command-line front end: parses system documents, dispatches to the solver
//! and verification routines, and renders human-readable or JSON reports with
//! stable exit codes.
//!
//! Exit codes: 0 success/holds, 1 infeasible or check failed, 2 usage or
//! parse error, 3 bound or budget exceeded.

use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use dioph_core::system::DEFAULT_D_CAP;
use dioph_core::verify::{CampaignMode, CheckConfig, GenParams, DEFAULT_ENUM_BUDGET};
use dioph_core::Error as CoreError;

pub mod document;
mod output;

pub use document::SystemDocument;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dioph",
    version,
    about = "Exact toolkit for linear Diophantine systems Ax = b, x >= 0",
    after_help = "Input documents are JSON: {\"format\": 1, \"A\": [[..]], \"b\": [..], \"name\": \"..\"};\n\
                  integers may be numbers or decimal strings and are always emitted as strings."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Path to a system document; stdin is read when absent.
    #[arg(long)]
    input: Option<String>,
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minor bound d of the augmented matrix (A b).
    Bound {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Find a nonnegative solution with every coordinate at most d.
    Solve {
        #[command(flatten)]
        io: InputArgs,
        /// Refuse to search when d exceeds this cap.
        #[arg(long, default_value_t = DEFAULT_D_CAP)]
        cap: u64,
    },
    /// Check the per-coordinate bound on the given system.
    Check {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value_t = DEFAULT_D_CAP)]
        cap: u64,
        /// Point budget for the confirmation oracle.
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
    },
    /// Check the complementary-minor duality for the system matrix
    /// (requires gcd-1 maximal minors).
    Lemma {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Enumerate all nonnegative solutions inside a box by brute force.
    Oracle {
        #[command(flatten)]
        io: InputArgs,
        /// Box bound; defaults to the minor bound d.
        #[arg(long)]
        cap: Option<u64>,
        /// Enumeration point budget.
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
    },
    /// Run a seeded verification campaign.
    Fuzz {
        /// What to check on each generated instance.
        #[arg(long, value_enum)]
        mode: FuzzMode,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Equations per generated system.
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Unknowns per generated system.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Matrix entries are drawn from [-entry-bound, entry-bound].
        #[arg(long = "entry-bound", default_value_t = 5)]
        entry_bound: u32,
        /// Witness entries are drawn from [0, witness-bound].
        #[arg(long = "witness-bound", default_value_t = 4)]
        witness_bound: u32,
        /// Solver cap on the minor bound d.
        #[arg(long, default_value_t = DEFAULT_D_CAP)]
        cap: u64,
        /// Point budget for brute-force enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FuzzMode {
    Theorem,
    Lemma,
    Oracle,
    Saturation,
}

impl From<FuzzMode> for CampaignMode {
    fn from(mode: FuzzMode) -> Self {
        match mode {
            FuzzMode::Theorem => CampaignMode::Theorem,
            FuzzMode::Lemma => CampaignMode::Lemma,
            FuzzMode::Oracle => CampaignMode::Oracle,
            FuzzMode::Saturation => CampaignMode::Saturation,
        }
    }
}

/// Parses `args` and runs the selected subcommand; reports go to `stdout`,
/// diagnostics to `stderr`. Returns the process exit code.
pub fn run(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the same error path
            let benign = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if benign {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn from_core(err: CoreError) -> Self {
        let code = match err {
            CoreError::BoundTooLarge { .. }
            | CoreError::BudgetExceeded { .. }
            | CoreError::TooManySolutions { .. } => EXIT_LIMIT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, Failure> {
    match command {
        Command::Bound { io } => {
            let sys = load_system(&io, stdin)?;
            let d = dioph_core::system::minor_bound(&sys);
            emit(stdout, output::bound_report(&d, io.json));
            Ok(EXIT_OK)
        }
        Command::Solve { io, cap } => {
            let sys = load_system(&io, stdin)?;
            let certificate = dioph_core::system::find_bounded_solution_with_cap(&sys, cap)
                .map_err(Failure::from_core)?;
            let d = dioph_core::system::minor_bound(&sys);
            let feasible = certificate.is_some();
            emit(
                stdout,
                output::solve_report(&d, certificate.as_ref(), io.json),
            );
            Ok(if feasible { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Check { io, cap, budget } => {
            let sys = load_system(&io, stdin)?;
            let config = CheckConfig {
                d_cap: cap,
                enum_budget: budget,
                ..CheckConfig::default()
            };
            let report = dioph_core::verify::check_theorem_with_config(&sys, &config)
                .map_err(Failure::from_core)?;
            emit(stdout, output::theorem_report(&report, io.json));
            Ok(if report.holds { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Lemma { io } => {
            let sys = load_system(&io, stdin)?;
            let report = dioph_core::verify::check_lemma(sys.a()).map_err(Failure::from_core)?;
            emit(stdout, output::lemma_report(&report, io.json));
            Ok(if report.holds { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Oracle { io, cap, budget } => {
            let sys = load_system(&io, stdin)?;
            let cap = match cap {
                Some(cap) => cap,
                None => {
                    let d = dioph_core::system::minor_bound(&sys);
                    u64::try_from(&d).map_err(|_| {
                        Failure::from_core(CoreError::BoundTooLarge {
                            bound: d.clone(),
                            cap: u64::MAX,
                        })
                    })?
                }
            };
            let solutions =
                dioph_core::verify::brute_force_box_search_with_budget(&sys, cap, budget)
                    .map_err(Failure::from_core)?;
            emit(stdout, output::oracle_report(cap, &solutions, io.json));
            Ok(EXIT_OK)
        }
        Command::Fuzz {
            mode,
            trials,
            seed,
            m,
            n,
            entry_bound,
            witness_bound,
            cap,
            budget,
            json,
        } => {
            let params = GenParams {
                m,
                n,
                entry_bound,
                witness_bound,
                seed,
            };
            let config = CheckConfig {
                d_cap: cap,
                enum_budget: budget,
                ..CheckConfig::default()
            };
            let report = dioph_core::verify::fuzz_campaign_with_config(
                &params,
                trials,
                mode.into(),
                &config,
            )
            .map_err(Failure::from_core)?;
            // wall-clock time is a diagnostic: it must not perturb the
            // reproducible stdout report
            let _ = writeln!(stderr, "elapsed: {} ms", report.elapsed_ms);
            emit(stdout, output::campaign_report(&report, json));
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

fn emit(stdout: &mut dyn Write, report: String) {
    let _ = writeln!(stdout, "{report}");
}

fn load_system(
    io: &InputArgs,
    stdin: &mut dyn Read,
) -> Result<dioph_core::DiophantineSystem, Failure> {
    let bytes = match &io.input {
        Some(path) => {
            std::fs::read(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?
        }
        None => {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let doc = SystemDocument::parse(&bytes).map_err(|e| Failure::usage(e.to_string()))?;
    doc.to_system().map_err(Failure::from_core)
}
