//! `ratbound`: eigenvalue-modulus bounds for rational matrices.
//!
//! Exit codes: 0 success, 1 table mismatch or unsound bench bound, 2 parse or
//! input error, 3 validation error, 4 suspected non-regular instance,
//! 5 numerical failure.

mod bench;
mod commands;
mod output;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ratbound_core::{Error, Mode, Norm};

#[derive(Parser)]
#[command(name = "ratbound", version, about = "Upper bounds on eigenvalue moduli of rational matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every applicable bound for an instance and check it against
    /// the computed spectrum.
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = NormArg::Spectral)]
        norm: NormArg,
        /// Override the representation mode stored in the file.
        #[arg(long, value_parser = parse_mode)]
        mode: Option<Mode>,
        /// Comma-separated method names to keep.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Eigenvalues of the instance.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = ratbound_core::spectrum::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_parser = parse_mode)]
        mode: Option<Mode>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Dump the block companion matrix.
    Companion {
        file: PathBuf,
        #[arg(long, value_parser = parse_mode)]
        mode: Option<Mode>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
    },
    /// Reproduce one of the reference tables and compare cell by cell.
    Report {
        #[arg(long, value_parser = ["1", "3", "4"])]
        table: String,
    },
    /// Tightness and soundness statistics over a seeded random stream.
    Bench {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Fix the instance size instead of drawing it from 1..=3.
        #[arg(long)]
        p: Option<usize>,
        /// Fix the degree instead of drawing it from 1..=3.
        #[arg(long)]
        m: Option<usize>,
        /// Fix the number of poles instead of drawing it from 0..=2.
        #[arg(long)]
        poles: Option<usize>,
        #[arg(long, value_enum, default_value_t = NormArg::Spectral)]
        norm: NormArg,
        #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
        format: BenchFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NormArg {
    Spectral,
    One,
    Inf,
    All,
}

impl NormArg {
    fn norms(self) -> Vec<Norm> {
        match self {
            NormArg::Spectral => vec![Norm::Spectral],
            NormArg::One => vec![Norm::One],
            NormArg::Inf => vec![Norm::Inf],
            NormArg::All => Norm::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Json,
    Mtx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchFormat {
    Csv,
    Table,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
    /// Computed values disagree with the expected ones.
    Mismatch(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Input(_) | CliError::Core(Error::Parse(_)) => 2,
            CliError::Core(Error::NonRegularSuspected) => 4,
            CliError::Core(e) if e.is_validation() => 3,
            CliError::Core(_) => 5,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(s) | CliError::Mismatch(s) => f.write_str(s),
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bounds {
            file,
            norm,
            mode,
            methods,
            format,
        } => commands::bounds(&file, &norm.norms(), mode, &methods, format),
        Command::Spectrum { file, tol, mode, format } => commands::spectrum(&file, tol, mode, format),
        Command::Companion { file, mode, format } => commands::companion(&file, mode, format),
        Command::Report { table } => report::run(&table),
        Command::Bench {
            count,
            seed,
            p,
            m,
            poles,
            norm,
            format,
        } => bench::run(&bench::BenchArgs {
            count: count as usize,
            seed,
            p,
            m,
            poles,
            norms: norm.norms(),
            format,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ratbound: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
