//! `gabidulin`: recognize, construct and verify generalized Gabidulin codes.

mod load;
mod make;
mod recognize;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gabidulin", version, about = "Generalized Gabidulin codes over finite field towers")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Records,
}

/// Where the field comes from: a field file, or `--q`/`--m` with searched
/// moduli.
#[derive(Args, Debug, Clone, Default)]
pub struct FieldArgs {
    /// Field description file (`p`, `e`, `m`, moduli).
    #[arg(long)]
    field: Option<PathBuf>,
    /// Base field size, used with `--m` when no field file is given.
    #[arg(long)]
    q: Option<u32>,
    /// Extension degree, used with `--q`.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the row space of a generator matrix is a generalized
    /// Gabidulin code.
    Recognize {
        #[command(flatten)]
        field: FieldArgs,
        /// Generator matrix file (`rows cols` header, one row per line).
        #[arg(long)]
        generator: PathBuf,
        #[arg(long, conflicts_with = "all_s", required_unless_present = "all_s")]
        s: Option<i64>,
        /// Try every s in 1..m coprime to m.
        #[arg(long)]
        all_s: bool,
    },
    /// Construct codes and write X, parameters and evaluation points.
    Make {
        #[command(subcommand)]
        what: MakeCommand,
    },
    /// Run a self-check suite.
    Verify(verify::VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum MakeCommand {
    /// Hankel X from consecutive zero-trace powers.
    Hankel(make::StructuredArgs),
    /// Toeplitz X from consecutive zero-trace powers.
    Toeplitz(make::StructuredArgs),
    /// X from evaluation points in a code spec file (`g`, `k`, `s`).
    FromPoints(make::FromFileArgs),
    /// X from a parameter file (`alpha`, `beta`, `B`, `s`, `gamma`).
    FromParams(make::FromFileArgs),
}

/// A failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure {
            code: 1,
            message: format!("error: {e:#}"),
        }
    }
}

pub type CmdResult = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Recognize {
            field,
            generator,
            s,
            all_s,
        } => recognize::run(&field, &generator, s, all_s, cli.format),
        Command::Make { what } => make::run(what, cli.format),
        Command::Verify(args) => verify::run(&args, cli.format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            println!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
