//! `hindman`: batch front end for the bounded-sum Hindman workbench.
//!
//! Exit codes: 0 on success, 1 on input or domain errors, 2 on usage errors.

mod commands;
mod demo;
mod inputs;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use inputs::UsageError;

#[derive(Parser)]
#[command(
    name = "hindman",
    version,
    about = "Colorings, solvers and decoders for bounded-sum Hindman's theorem"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Base-b expansion of each number, with lambda, mu, first digit and gaps
    Decompose(DecomposeArgs),
    /// Dump a coloring over an interval as CSV
    Color(ColorArgs),
    /// Lexicographically least set with monochromatic bounded-sum closure
    Search(SearchArgs),
    /// Check a set's bounded-sum closure for monochromaticity
    Verify(VerifyArgs),
    /// Thin a set to a chain, to one first-digit class, or both
    Thin(ThinArgs),
    /// Construct a guaranteed solution from privileged knowledge
    Synth(SynthArgs),
    /// Decide range membership from a chain using bounded queries only
    DecodeRange(DecodeRangeArgs),
    /// Decode limit values from a solution for the delta2 coloring
    DecodeDelta2(DecodeDelta2Args),
    /// End-to-end limit-decoding pipeline with a checked transcript
    DemoDelta2(DemoDelta2Args),
    /// End-to-end range-decoding pipeline with a checked transcript
    DemoRange(DemoRangeArgs),
    /// PRIVILEGED ground-truth range membership (for comparison only)
    RangeOracle(RangeOracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    Delta2,
    Four,
    Three,
    Parity,
    Const,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ThinMode {
    Chain,
    Digit,
    Both,
}

#[derive(Args)]
pub struct Output {
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SchemeArgs {
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    /// Enumerated function file (four, three)
    #[arg(long = "enum", value_name = "PATH")]
    pub enum_path: Option<PathBuf>,
    /// Limit approximation file (delta2)
    #[arg(long = "approx", value_name = "PATH")]
    pub approx_path: Option<PathBuf>,
}

#[derive(Args)]
pub struct DecomposeArgs {
    #[arg(long, default_value_t = 3)]
    pub base: u64,
    /// Also report short and very short gap counts under this function
    #[arg(long = "enum", value_name = "PATH")]
    pub enum_path: Option<PathBuf>,
    #[arg(required = true)]
    pub numbers: Vec<u64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Inclusive interval A..B
    #[arg(long, value_name = "A..B")]
    pub range: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Search within [1, N]
    #[arg(long = "N", value_name = "HORIZON")]
    pub horizon: u64,
    #[arg(long = "sum-len", default_value_t = 2)]
    pub sum_len: usize,
    #[arg(long)]
    pub size: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[arg(long = "set", value_name = "PATH")]
    pub set_path: PathBuf,
    #[arg(long = "sum-len", default_value_t = 2)]
    pub sum_len: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct ThinArgs {
    #[arg(long = "set", value_name = "PATH")]
    pub set_path: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub base: u64,
    #[arg(long, value_enum, default_value_t = ThinMode::Chain)]
    pub mode: ThinMode,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct SynthArgs {
    /// Power-chain solution from an enumerated function
    #[arg(long = "enum", value_name = "PATH", conflicts_with = "approx_path")]
    pub enum_path: Option<PathBuf>,
    /// Delta2 solution from a limit approximation
    #[arg(long = "approx", value_name = "PATH")]
    pub approx_path: Option<PathBuf>,
    #[arg(long, default_value_t = 7)]
    pub base: u64,
    /// Number of elements
    #[arg(long, default_value_t = 4)]
    pub size: usize,
    #[arg(long = "sum-len", default_value_t = 3)]
    pub sum_len: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct DecodeRangeArgs {
    #[arg(long = "enum", value_name = "PATH")]
    pub enum_path: PathBuf,
    #[arg(long = "set", value_name = "PATH")]
    pub set_path: PathBuf,
    #[arg(long, default_value_t = 7)]
    pub base: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct DecodeDelta2Args {
    #[arg(long = "approx", value_name = "PATH")]
    pub approx_path: PathBuf,
    #[arg(long = "set", value_name = "PATH")]
    pub set_path: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct DemoDelta2Args {
    /// Limit approximation file; a built-in one with mind changes otherwise
    #[arg(long = "approx", value_name = "PATH")]
    pub approx_path: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    pub size: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct DemoRangeArgs {
    /// Enumerated function file; the built-in reference function otherwise
    #[arg(long = "enum", value_name = "PATH")]
    pub enum_path: Option<PathBuf>,
    #[arg(long, default_value_t = 7)]
    pub base: u64,
    #[arg(long, default_value_t = 6)]
    pub size: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
pub struct RangeOracleArgs {
    #[arg(long = "enum", value_name = "PATH")]
    pub enum_path: PathBuf,
    /// Inclusive interval A..B of queries
    #[arg(long, value_name = "A..B", conflicts_with = "set_path")]
    pub range: Option<String>,
    /// Use the decodable range of this chain instead of --range
    #[arg(long = "set", value_name = "PATH")]
    pub set_path: Option<PathBuf>,
    #[arg(long, default_value_t = 7)]
    pub base: u64,
    #[command(flatten)]
    out: Output,
}

fn run(cli: Cli) -> anyhow::Result<(String, Option<PathBuf>, bool)> {
    let (text, out) = match cli.command {
        Command::Decompose(a) => (commands::decompose(&a)?, a.out.out),
        Command::Color(a) => (commands::color(&a)?, a.out.out),
        Command::Search(a) => (commands::search(&a)?, a.out.out),
        Command::Verify(a) => (commands::verify(&a)?, a.out.out),
        Command::Thin(a) => (commands::thin(&a)?, a.out.out),
        Command::Synth(a) => (commands::synth(&a)?, a.out.out),
        Command::DecodeRange(a) => (commands::decode_range(&a)?, a.out.out),
        Command::DecodeDelta2(a) => (commands::decode_delta2(&a)?, a.out.out),
        Command::RangeOracle(a) => (commands::range_oracle(&a)?, a.out.out),
        Command::DemoDelta2(a) => {
            let t = demo::delta2(&a)?;
            return Ok((t.text, a.out.out, t.passed));
        }
        Command::DemoRange(a) => {
            let t = demo::range(&a)?;
            return Ok((t.text, a.out.out, t.passed));
        }
    };
    Ok((text, out, true))
}

fn emit(text: &str, out: Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => r,
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, out, passed)) => match emit(&text, out) {
            Ok(()) if passed => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            eprintln!("For more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
