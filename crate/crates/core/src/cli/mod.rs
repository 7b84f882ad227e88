//! The `skein` command line: argument parsing, dispatch and exit codes.
//!
//! Exit status is 0 on success, 1 when a check or an `--expect`ed verdict
//! fails, and 2 for malformed input or configuration.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Version of the JSON report layout; bumped on incompatible changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "skein", version, about = "Skein module relations from handle slides")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// List the shipped scenarios and exit.
    #[arg(long)]
    pub list_scenarios: bool,
    /// Directory searched for `<name>.json` before the shipped scenarios.
    #[arg(long, global = true, value_name = "DIR")]
    pub scenario_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Qa,
    Za,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the four-strand identities and the glued consequences.
    Verify(VerifyArgs),
    /// Evaluate an expression in TL_k and print its normal form.
    Eval(EvalArgs),
    /// Print w(Id_k), or a slide image with --variant.
    W(WArgs),
    /// List slide relations of TL_k.
    Relations(RelationsArgs),
    /// Glue an element into a scenario.
    Glue(GlueArgs),
    /// Compare the full slide module with the one from smaller bundles.
    Conjecture(ConjectureArgs),
    /// Decide membership of a glued element in the slide ideal.
    IdealCheck(IdealArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run only the named checks (repeat or separate with commas).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Strand count; inferred from the expression when omitted.
    #[arg(long)]
    pub k: Option<usize>,
    /// Print raw pairings instead of normal words.
    #[arg(long)]
    pub raw: bool,
    pub expression: String,
}

#[derive(Args, Debug)]
pub struct WArgs {
    #[arg(long)]
    pub k: usize,
    /// Print the slide image φ_v(Id_k) (lower+, upper+, lower-, upper-).
    #[arg(long)]
    pub variant: Option<String>,
}

#[derive(Args, Debug)]
pub struct RelationsArgs {
    #[arg(long)]
    pub k: usize,
    /// Comma-separated variants, or `all`.
    #[arg(long, default_value = "all")]
    pub variants: String,
    /// Smallest through-degree considered (never below 2).
    #[arg(long, default_value_t = 2)]
    pub min_through: usize,
}

#[derive(Args, Debug)]
pub struct GlueArgs {
    /// Shipped scenario name or path to a scenario file.
    #[arg(long)]
    pub scenario: String,
    #[arg(long)]
    pub expr: String,
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    #[arg(long)]
    pub k: usize,
    /// Scenarios for the glued level; defaults to the shipped h1h1 ones.
    #[arg(long)]
    pub scenario: Vec<String>,
    /// Box level only.
    #[arg(long)]
    pub no_glue: bool,
    /// Required verdict of every glued Q(A) comparison (the box one when
    /// nothing is glued).
    #[arg(long)]
    pub expect: Option<String>,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    #[arg(long)]
    pub scenario: String,
    #[arg(long, default_value_t = 4)]
    pub kmax: usize,
    /// Element to glue and test; defaults to the two-strand reduction.
    #[arg(long)]
    pub expr: Option<String>,
    /// Ring whose decision is reported as the verdict.
    #[arg(long, value_enum, default_value_t = RingArg::Za)]
    pub ring: RingArg,
    /// Required decision: member, non_member or undecided.
    #[arg(long)]
    pub expect: Option<String>,
}

/// How a command ended.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or configuration: exit 2.
    Input(String),
    /// A check or expectation failed: exit 1. The report was printed.
    Check(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit status. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
