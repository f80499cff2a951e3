//! `macpoly`: compute, enumerate and validate from the command line.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when two routes that
//! must agree do not, or a validation property fails.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod compute;
mod listing;
mod suites;

#[derive(Debug, Parser)]
#[command(
    name = "macpoly",
    version,
    about = "Exact combinatorial formulas for Macdonald polynomials"
)]
struct Cli {
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "MACPOLY_JOBS")]
    jobs: Option<usize>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a polynomial.
    Compute(ComputeArgs),
    /// List fillings or tableaux with their statistics, one per line.
    Enumerate(EnumerateArgs),
    /// Show the family containing a filling.
    Family(FamilyArgs),
    /// Check a suite of identities over all small cases.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Polynomial {
    /// Modified Macdonald polynomial of a partition.
    Htilde,
    /// Integral form of a partition.
    J,
    /// Monic symmetric Macdonald polynomial, as a quotient.
    P,
    /// Integral nonsymmetric form of a weak composition.
    #[value(alias = "e-integral")]
    E,
    /// Integral quasisymmetric Macdonald polynomial of a strong composition.
    G,
    /// Quasisymmetric Schur function of a strong composition.
    Qs,
    /// Demazure t-atom of a weak composition.
    Atom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Compact,
    Brute,
    /// Run both routes and fail unless they agree.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum, ignore_case = true)]
    pub polynomial: Polynomial,

    /// Partition or composition, e.g. `2,1,1`.
    #[arg(long)]
    pub shape: String,

    /// Number of x-variables. Defaults to the size of a partition or
    /// strong composition and to the length of a weak composition.
    #[arg(long)]
    pub nvars: Option<usize>,

    #[arg(long, value_enum, default_value_t = Method::Compact)]
    pub method: Method,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Largest diagram size accepted by brute-force routes.
    #[arg(long, default_value_t = 8)]
    pub brute_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Every filling of a partition diagram.
    Fillings,
    /// Sorted tableaux of a partition diagram.
    Sorted,
    /// Nonattacking fillings of a composition diagram.
    Nonattacking,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecordFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub kind: Kind,

    #[arg(long)]
    pub shape: String,

    /// Entries range over `1..=nvars`.
    #[arg(long)]
    pub nvars: usize,

    /// Permutation basement for nonattacking fillings, e.g. `2,1,3`.
    #[arg(long)]
    pub basement: Option<String>,

    /// Only ordered nonattacking fillings (weakly increasing shapes).
    #[arg(long)]
    pub ordered: bool,

    /// Only fillings whose entries are exactly `1..=k` for some `k`.
    #[arg(long)]
    pub packed: bool,

    #[arg(long, value_enum, default_value_t = RecordFormat::Json)]
    pub format: RecordFormat,

    /// Largest diagram size accepted.
    #[arg(long, default_value_t = 8)]
    pub brute_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyFormat {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Rows separated by `/`, top row first, e.g. `2,1,1/1,1,3`.
    #[arg(long)]
    pub filling: String,

    #[arg(long, value_enum, default_value_t = FamilyFormat::Json)]
    pub format: FamilyFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    CompactVsBrute,
    OperatorLemmas,
    FamilyPartition,
    Pds,
    Reverse,
    JForms,
    PSpecializations,
    Qsym,
    Tatom,
    Hecke,
    All,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,

    /// Largest size checked.
    #[arg(long, default_value_t = 4)]
    pub max: usize,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Mismatch(String),
    Io(io::Error),
}

impl From<macpoly::Error> for Failure {
    fn from(e: macpoly::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

pub type Outcome = Result<(), Failure>;

fn run(cli: Cli) -> Outcome {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = match &cli.command {
        Command::Compute(args) => compute::run(args, &mut out),
        Command::Enumerate(args) => listing::enumerate(args, &mut out),
        Command::Family(args) => listing::family(args, &mut out),
        Command::Validate(args) => suites::run(args, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("identity failure: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
