//! Command-line front end: check documents or catalog instances.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed, 2 the
//! input could not be parsed or built, 3 nothing failed but at least one
//! case went unverified (for example, fuel ran out).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfforge::dsl::{self, DslError};
use hopfforge::report::Report;
use hopfforge::runner::{
    build_workspace, builtin_workspace, run_checks, RunOptions, Workspace, BUILTIN_NAMES,
    KNOWN_SUITES,
};
use hopfforge::scalar::{FieldDescriptor, ScalarError};

#[derive(Parser)]
#[command(
    name = "hopfforge",
    version,
    about = "Exact checks for finitely presented Hopf-algebra structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Parser, Debug)]
struct CommonFlags {
    /// Run only these suites (repeatable); `all` runs every declared check.
    #[arg(long = "suite", value_name = "NAME")]
    suites: Vec<String>,

    /// Maximum degree of randomly sampled elements.
    #[arg(long = "max-degree", default_value_t = 6)]
    max_degree: usize,

    /// Number of random samples per law.
    #[arg(long, default_value_t = 100)]
    samples: usize,

    /// Seed for the deterministic sampler.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Rewriting fuel (maximum reduction steps per element).
    #[arg(long, default_value_t = 1_000_000)]
    fuel: u64,

    /// Ground field: `rational`, `gf:P`, or `ratfunc`.
    #[arg(long, value_name = "FIELD")]
    field: Option<String>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and run the checks it declares.
    Check {
        /// Path to a `.hopf` document.
        file: PathBuf,

        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Run the canonical checks for a catalog instance.
    Builtin {
        /// One of: axb-universal, axb-q, axb-qn, laurent.
        name: String,

        /// Twist parameter (an expression such as `2`, `1/3`, or `q`).
        #[arg(long, value_name = "EXPR")]
        q: Option<String>,

        /// Twist period.
        #[arg(long, value_name = "INT")]
        n: Option<i64>,

        #[command(flatten)]
        flags: CommonFlags,
    },
}

fn parse_field(s: &str) -> Result<FieldDescriptor, String> {
    s.parse().map_err(|e: ScalarError| e.to_string())
}

fn validate_suites(suites: &[String]) -> Result<(), String> {
    for s in suites {
        if s != "all" && !KNOWN_SUITES.contains(&s.as_str()) {
            return Err(format!(
                "unknown suite `{s}` (known: all, {})",
                KNOWN_SUITES.join(", ")
            ));
        }
    }
    Ok(())
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(report: &Report, format: ReportFormat) -> ExitCode {
    match format {
        ReportFormat::Text => print!("{}", report.to_text()),
        ReportFormat::Json => println!("{}", report.to_json()),
    }
    match report.exit_code() {
        0 => ExitCode::SUCCESS,
        code => ExitCode::from(code as u8),
    }
}

fn run(ws: &Workspace, flags: &CommonFlags) -> ExitCode {
    if let Err(e) = validate_suites(&flags.suites) {
        return input_error(e);
    }
    let opts = RunOptions {
        max_degree: flags.max_degree,
        samples: flags.samples,
        seed: flags.seed,
        fuel: flags.fuel,
    };
    let report = run_checks(ws, &flags.suites, &opts);
    emit(&report, flags.report)
}

fn check_command(file: &PathBuf, flags: &CommonFlags) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return input_error(format!("cannot read {}: {e}", file.display())),
    };
    let doc = match dsl::parse_document(&text) {
        Ok(d) => d,
        Err(e) => return input_error(format!("{}: {e}", file.display())),
    };
    let field = match &flags.field {
        Some(s) => match parse_field(s) {
            Ok(f) => Some(f),
            Err(e) => return input_error(e),
        },
        None => None,
    };
    let ws = match build_workspace(&doc, field, flags.fuel) {
        Ok(ws) => ws,
        Err(e) => return input_error(format!("{}: {e}", file.display())),
    };
    run(&ws, flags)
}

fn builtin_command(name: &str, q: Option<&str>, n: Option<i64>, flags: &CommonFlags) -> ExitCode {
    if !BUILTIN_NAMES.contains(&name) {
        return input_error(format!(
            "unknown builtin `{name}` (available: {})",
            BUILTIN_NAMES.join(", ")
        ));
    }
    let field = match &flags.field {
        Some(s) => match parse_field(s) {
            Ok(f) => f,
            Err(e) => return input_error(e),
        },
        None => match name {
            "laurent" => FieldDescriptor::Rationals,
            _ => FieldDescriptor::RationalFunctions,
        },
    };
    let q = match q {
        Some(text) => {
            let value = dsl::parse_expr(text).and_then(|e| dsl::eval_scalar(&e, field));
            match value {
                Ok(v) => Some(v),
                Err(e) => return input_error(format!("--q: {e}")),
            }
        }
        None => None,
    };
    let ws = match builtin_workspace(name, field, q, n) {
        Ok(ws) => ws,
        Err(e @ DslError { .. }) => return input_error(e),
    };
    run(&ws, flags)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check { file, flags } => check_command(file, flags),
        Command::Builtin { name, q, n, flags } => builtin_command(name, q.as_deref(), *n, flags),
    }
}
