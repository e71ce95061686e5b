//! Command-line front end of the Lawrence-Krammer toolkit.
//!
//! Every command builds a JSON report whose object keys are sorted and whose
//! field elements are printed in canonical form, so the same command line
//! always produces the same bytes. [`run`] parses arguments, executes the
//! command, optionally compares the report with a stored fixture and returns
//! the text to print together with the process exit code.

pub mod commands;
pub mod error;
pub mod golden;
pub mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exact_rings::{cyclotomic, parse_element, Specialization};

pub use error::CliError;

#[derive(Parser, Debug, Clone)]
#[command(name = "lk", version, about = "Exact computations with the Lawrence-Krammer representation of the BMW algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,
    /// Compare the JSON report with this fixture and exit with status 2 on
    /// any difference.
    #[arg(long, global = true, value_name = "PATH")]
    pub golden: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Where the parameter l lives.
#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Value of l: a rational expression in r such as "-r^3" or "1/r^5", or
    /// "generic" for the indeterminate l.
    #[arg(long, default_value = "generic", allow_hyphen_values = true, value_name = "EXPR")]
    pub l: String,
    /// Reduce r modulo a cyclotomic polynomial, given as "cyclotomic:M".
    #[arg(long, value_name = "cyclotomic:M")]
    pub modulus: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    G,
    E,
    Ginv,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builder {
    /// Closed-form action on each basis vector.
    Direct,
    /// Recursive block construction from smaller rank.
    Recursive,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Single-coefficient rules.
    Direct,
    /// Conjugation of E_i by the generators.
    Conjugation,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Matrices of the generators g_i, e_i and g_i^{-1}.
    Matrices {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Builder::Direct)]
        builder: Builder,
    },
    /// Check the defining relations on the generator matrices.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Builder::Direct)]
        builder: Builder,
    },
    /// The sum matrix T(n) of all X_ij operators.
    SumMatrix {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Determinant of T(n).
    Det {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        /// Ignore the size guard on symbolic determinants.
        #[arg(long)]
        force: bool,
    },
    /// Values of l at which det T(n) vanishes, with multiplicities.
    Locus {
        #[arg(long)]
        n: usize,
        /// Ignore the size guard on symbolic determinants.
        #[arg(long)]
        force: bool,
    },
    /// Kernel of T(n) at a specialized l.
    Kernel {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Check that a built-in family of vectors lies in the kernel of T(n).
    CheckVectors {
        #[arg(long)]
        n: usize,
        /// Family label; see `lk check-vectors --case list`.
        #[arg(long)]
        case: String,
        /// Reduce r modulo a cyclotomic polynomial, given as "cyclotomic:M".
        #[arg(long, value_name = "cyclotomic:M")]
        modulus: Option<String>,
    },
    /// Lexicographically first invertible square submatrix of T(n).
    RankWitness {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        /// Side length of the submatrix.
        #[arg(long)]
        size: usize,
        /// Candidate rows, 1-based and comma-separated; all rows by default.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        /// Candidate columns, 1-based and comma-separated; all columns by
        /// default.
        #[arg(long, value_delimiter = ',')]
        cols: Vec<usize>,
    },
    /// Hook-length dimensions of the Specht modules of Sym(n).
    Specht {
        #[arg(long)]
        n: usize,
        /// Report dimensions up to (n-1)(n-2)/2 outside the expected list.
        #[arg(long)]
        gap_check: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Matrices { .. } => "matrices",
            Command::Verify { .. } => "verify",
            Command::SumMatrix { .. } => "sum-matrix",
            Command::Det { .. } => "det",
            Command::Locus { .. } => "locus",
            Command::Kernel { .. } => "kernel",
            Command::CheckVectors { .. } => "check-vectors",
            Command::RankWitness { .. } => "rank-witness",
            Command::Specht { .. } => "specht",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Command::Matrices { n, .. }
            | Command::Verify { n, .. }
            | Command::SumMatrix { n, .. }
            | Command::Det { n, .. }
            | Command::Locus { n, .. }
            | Command::Kernel { n, .. }
            | Command::CheckVectors { n, .. }
            | Command::RankWitness { n, .. }
            | Command::Specht { n, .. } => *n,
        }
    }
}

/// Parses a modulus of the form "cyclotomic:M" with M >= 1.
pub fn parse_modulus(s: &str) -> Result<exact_rings::UPoly, CliError> {
    let m = s
        .strip_prefix("cyclotomic:")
        .ok_or_else(|| CliError::Parse(format!("modulus {s:?} is not of the form cyclotomic:M")))?;
    match m.trim().parse::<u32>() {
        Ok(k) if k >= 1 => Ok(cyclotomic(k)),
        _ => Err(CliError::Parse(format!("cyclotomic index {m:?} is not a positive integer"))),
    }
}

/// Turns the `--l` / `--modulus` pair into a specialization.
pub fn parse_specialization(l: &str, modulus: Option<&str>) -> Result<Specialization, CliError> {
    let spec = if l.trim() == "generic" {
        if modulus.is_some() {
            return Err(CliError::Input("a modulus requires a specialized l".into()));
        }
        Specialization::Generic
    } else {
        let value = parse_element(l)?;
        match modulus {
            None => Specialization::LTo(value),
            Some(m) => Specialization::LToAndQuotient(value, parse_modulus(m)?),
        }
    };
    spec.validate()?;
    Ok(spec)
}

/// Result of one invocation: what to print and how to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    let report = match commands::report(&cli.command) {
        Ok(r) => r,
        Err(e) => return Outcome { code: e.exit_code(), stdout: String::new(), stderr: e.to_line() + "\n" },
    };
    let stdout = match cli.output {
        OutputFormat::Json => serde_json::to_string_pretty(&report.value).expect("reports serialize") + "\n",
        OutputFormat::Text => render::text(&report.value),
    };
    let failure = match &cli.golden {
        Some(path) => golden::check(path, &report.value).err(),
        None => None,
    }
    .or(report.failure);
    match failure {
        Some(e) => Outcome { code: e.exit_code(), stdout, stderr: e.to_line() + "\n" },
        None => Outcome { code: error::EXIT_OK, stdout, stderr: String::new() },
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: error::EXIT_OK, stdout: e.to_string(), stderr: String::new() }
                }
                _ => {
                    let rendered = e.to_string();
                    let first = rendered.lines().next().unwrap_or("invalid arguments");
                    let msg = first.trim_start_matches("error: ").to_string();
                    let err = CliError::Parse(msg);
                    Outcome { code: err.exit_code(), stdout: String::new(), stderr: err.to_line() + "\n" }
                }
            }
        }
    }
}
