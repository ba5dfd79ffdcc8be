//! `chromsym`: expansions of chromatic symmetric functions and exact checks of
//! their hook coefficients.
//!
//! Exit status is 0 when every check passes, 1 on a mathematical mismatch and
//! 2 on bad input. Output on stdout depends only on the inputs and flags;
//! timings go to stderr under `--timing`.

mod commands;
mod input;
mod report;
mod sweep;
mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

pub use report::{Outcome, Status};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "chromsym", version, about = "Chromatic symmetric functions and hook-coefficient checks")]
pub struct Cli {
    /// Emit a JSON run report instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Refuse inputs with more vertices than this
    #[arg(long, global = true, default_value_t = 10, value_name = "N")]
    max_n: usize,

    /// Print elapsed time to stderr
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand X_G in the monomial, elementary or Schur basis
    Expand {
        /// Graph file (JSON or edge list); `-` reads stdin
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::S)]
        basis: BasisArg,
    },
    /// Compute X_{G,ζ}(x,t) in the fundamental basis by both routes
    Cqf {
        file: PathBuf,
        /// `identity` or a comma list giving the label of each vertex
        #[arg(long)]
        labeling: Option<String>,
        /// Also report the expansion with t set to this integer
        #[arg(long, value_name = "INT", allow_negative_numbers = true, value_parser = parse_bigint)]
        t_eval: Option<BigInt>,
        /// List every acyclic orientation with its labeling and extensions
        #[arg(long, short)]
        verbose: bool,
    },
    /// Run one comparison on a graph file, or a poset file for `ptableaux`
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long)]
        labeling: Option<String>,
    },
    /// Run checks over every labeled graph (or poset) up to a size
    Sweep {
        #[arg(long, value_name = "N")]
        n_max: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "hook-1")]
        check: Vec<Check>,
        /// Worker threads; defaults to the number of cores
        #[arg(long)]
        jobs: Option<usize>,
        /// Continue past the first failure
        #[arg(long)]
        keep_going: bool,
        /// For hook-t, try every labeling of every graph
        #[arg(long)]
        all_labelings: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    M,
    E,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
enum Check {
    #[value(name = "hook-t")]
    HookT,
    #[value(name = "hook-1")]
    Hook1,
    ESink,
    Chrompoly,
    Ptableaux,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::HookT => "hook-t",
            Check::Hook1 => "hook-1",
            Check::ESink => "e-sink",
            Check::Chrompoly => "chrompoly",
            Check::Ptableaux => "ptableaux",
        }
    }
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("{s:?} is not an integer"))
}

/// Problems with the input rather than the mathematics.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let start = Instant::now();
    let result = dispatch(&cli);
    let elapsed = start.elapsed();
    let code = match result {
        Ok(outcome) => {
            let body = if cli.json { &outcome.json } else { &outcome.text };
            let _ = stdout.write_all(body.as_bytes());
            match outcome.status {
                Status::Pass => EXIT_PASS,
                Status::Fail => EXIT_MISMATCH,
            }
        }
        Err(InputError(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INPUT
        }
    };
    if cli.timing {
        let _ = writeln!(stderr, "elapsed: {:.3}s", elapsed.as_secs_f64());
    }
    code
}

fn dispatch(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Expand { file, basis } => commands::expand(file, *basis, cli.max_n),
        Command::Cqf {
            file,
            labeling,
            t_eval,
            verbose,
        } => commands::cqf(file, labeling.as_deref(), t_eval.as_ref(), *verbose, cli.max_n),
        Command::Verify { file, check, labeling } => {
            commands::verify(file, *check, labeling.as_deref(), cli.max_n)
        }
        Command::Sweep {
            n_max,
            check,
            jobs,
            keep_going,
            all_labelings,
        } => sweep::sweep(&sweep::SweepOptions {
            n_max: *n_max,
            checks: check.clone(),
            jobs: *jobs,
            keep_going: *keep_going,
            all_labelings: *all_labelings,
        }),
    }
}
