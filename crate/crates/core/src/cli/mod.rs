//! The `tightloc` command line: argument parsing, size caps from a TOML
//! file, and a JSON [`VerificationReport`] per invocation.
//!
//! Exit status is 0 when every check passes, 2 when some check fails and 1
//! for usage or configuration errors.

mod commands;
mod config;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

pub use config::{Config, CONFIG_ENV};
pub use report::{Check, Status, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tightloc", version, about = "Exact characteristic-2 checks for the quartic family z^4 + xyz^2 + x^3z + y^3z + a*x^2y^2")]
pub struct Cli {
    /// Indentation of the JSON report; 0 prints a single line.
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
    /// Overrides the configured size cap for this command.
    #[arg(long, global = true)]
    pub max_q: Option<u32>,
    /// Include per-check wall time in the report.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteMode {
    Direct,
    Matrix,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Non-inclusion at an algebraic α of Artin–Schreier degree d, and inclusion on the generic fiber.
    Counterexample {
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = RouteMode::Both)]
        mode: RouteMode,
    },
    /// Colength of (x^q, y^q, z^q, g) with the per-degree table.
    Hk {
        /// f2, f2m:<m>[:<modulus hex>] or ratfunc.
        #[arg(long, default_value = "ratfunc")]
        field: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Local cohomology H^2 of the quartic: dimensions, Frobenius action, socle.
    Cohomology {
        #[arg(long, default_value = "f2")]
        field: String,
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        kmin: i64,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Ideal membership in a graded quotient of k[x,y,z].
    Member {
        #[arg(long, default_value = "f2")]
        field: String,
        /// Relation defining the ambient ring, if any.
        #[arg(long)]
        relation: Option<String>,
        /// Comma-separated generators.
        #[arg(long)]
        gens: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        multiplier: Option<String>,
        /// Test multiplier * element^frobenius against the bracket power of the ideal.
        #[arg(long)]
        frobenius: Option<u64>,
        /// Value substituted for `a` in the polynomials.
        #[arg(long)]
        alpha: Option<String>,
        /// Expected answer; a mismatch fails the check.
        #[arg(long)]
        expect: Option<bool>,
    },
    /// The special matrix M[Q, α] with its B and C rows.
    Matrix {
        #[arg(long)]
        degree: u32,
    },
    /// Inclusion and bijectivity checks on the generic fiber.
    GenericFiber {
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("configuration: {0}")]
    Config(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

/// Runs an already-parsed command.
pub fn execute(cli: &Cli, config: &Config) -> Result<VerificationReport, CliError> {
    commands::dispatch(cli, config)
}

/// Parses `args` (including the program name) and runs the command, writing
/// the report to `out` and the summary to `err`. Returns the exit status.
pub fn run<I, T>(args: I, config: Result<Config, String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = config
        .map_err(CliError::Config)
        .and_then(|c| execute(&cli, &c));
    match result {
        Ok(report) => {
            let _ = writeln!(out, "{}", report.to_json(cli.json_indent));
            let _ = write!(err, "{}", report.summary());
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary: process arguments, configuration from
/// [`CONFIG_ENV`], standard streams.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        Config::from_env(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
