//! Command-line front end. Every command returns a [`output::Report`] that is
//! rendered as a JSON envelope or as CSV; the exit code carries the verdict.

mod commands;
mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::hypotest::Mode;
use crate::numerics::{parse_rational, Rational};

pub use output::Report;

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hyponorm", version, about = "Hyponormality tests and commutator spectra for Bergman-space Toeplitz operators")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "HYPONORM_THREADS")]
    pub threads: Option<usize>,
    /// Add wall-clock time to the JSON envelope (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate sigma_k, omega_k, delta_k and their leading asymptotics.
    Seq(SeqArgs),
    /// Hyponormality of T_phi for phi = z^n |z|^{2s} + a zbar^m |z|^{2t}.
    Hypo {
        #[command(subcommand)]
        action: HypoAction,
    },
    /// Self-commutator of T_{z^m zbar^n}.
    Comm {
        #[command(subcommand)]
        action: CommAction,
    },
    /// Sign of d(m, n) over a grid, as a bitmap and CSV.
    Region(RegionArgs),
    /// Necessary bounds on |a|.
    Bounds(BoundsArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SymbolArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    /// Rational ("p/q") or decimal.
    #[arg(long, value_parser = parse_number)]
    pub s: Number,
    #[arg(long, value_parser = parse_number)]
    pub t: Number,
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    #[arg(long, value_parser = parse_number)]
    pub a: Option<Number>,
    #[arg(long)]
    pub kmax: u64,
}

#[derive(Subcommand, Debug)]
pub enum HypoAction {
    /// Certify or refute at one coefficient.
    Check(CheckArgs),
    /// Bracket the largest |a| giving a hyponormal operator.
    Sweep(SweepArgs),
    /// Search window vectors for a(t) = c / t.
    Window(WindowArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    #[arg(long, value_parser = parse_number, conflicts_with = "c", required_unless_present = "c")]
    pub a: Option<Number>,
    /// Use |a| = c / t.
    #[arg(long, value_parser = parse_number)]
    pub c: Option<Number>,
    /// Largest truncation tried.
    #[arg(long = "K", default_value_t = 1 << 15)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    #[arg(long, value_parser = parse_number, default_value = "1/1000")]
    pub tol: Number,
    #[arg(long = "K", default_value_t = 1 << 15)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct WindowArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long, value_parser = parse_number)]
    pub s: Number,
    #[arg(long, value_parser = parse_number)]
    pub c: Number,
}

#[derive(Subcommand, Debug)]
pub enum CommAction {
    /// Norm and the index where it is attained.
    Norm(PairArgs),
    /// Monotone decreasing tail or a single interior maximum.
    Classify(PairArgs),
    /// Check that every eigenvalue is below 1/2.
    Halfbound(PairArgs),
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
}

#[derive(Args, Debug)]
pub struct RegionArgs {
    #[arg(long)]
    pub mmax: u64,
    /// Defaults to mmax - 1.
    #[arg(long)]
    pub nmax: Option<u64>,
    /// Plain P1 bitmap output.
    #[arg(long)]
    pub bitmap: Option<PathBuf>,
    /// `m,n,d_sign` for every cell.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Bound for z^m zbar^{m-1} + a zbar^{m-q} z^{m-q-1} instead.
    #[arg(long)]
    pub kl: bool,
    #[arg(long, required_unless_present = "kl")]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: u64,
    #[arg(long, value_parser = parse_number, required_unless_present = "kl")]
    pub s: Option<Number>,
    #[arg(long, value_parser = parse_number, required_unless_present = "kl")]
    pub t: Option<Number>,
    #[arg(long, required_if_eq("kl", "true"))]
    pub q: Option<u64>,
    /// Number of basis vectors scanned.
    #[arg(long, default_value_t = 1 << 16)]
    pub kmax: u64,
}

/// A parsed numeric flag; `float` marks decimal input taken as binary64.
#[derive(Clone, Debug, PartialEq)]
pub struct Number {
    pub value: Rational,
    pub float: bool,
    pub text: String,
}

fn parse_number(s: &str) -> Result<Number, String> {
    parse_rational(s)
        .map(|(value, float)| Number { value, float, text: s.to_string() })
        .ok_or_else(|| format!("'{s}' is not a rational (p/q) or finite decimal"))
}

/// Outcome of one command: a report and the exit code it implies.
pub struct Outcome {
    pub report: Report,
    pub code: i32,
    pub mode: Mode,
}

/// Parses `args`, runs the command, writes the report and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_POSITIVE };
            let _ = e.print();
            return code;
        }
    };
    if let Some(threads) = cli.threads {
        // Only the first call in a process can set the global pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let start = Instant::now();
    let outcome = match commands::dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::Io(_) | Error::BudgetExhausted(_) => EXIT_INCONCLUSIVE,
                Error::CoefficientSign { .. } => EXIT_NEGATIVE,
                _ => EXIT_USAGE,
            };
        }
    };
    let elapsed = cli.timing.then(|| start.elapsed().as_millis());
    if let Err(e) = emit(&cli, &outcome, elapsed) {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn emit(cli: &Cli, outcome: &Outcome, elapsed: Option<u128>) -> io::Result<()> {
    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(sink);
    match cli.format {
        Format::Json => {
            let env = output::envelope(&outcome.report, outcome.mode, elapsed);
            serde_json::to_writer_pretty(&mut w, &env)?;
            writeln!(w)?;
        }
        Format::Csv => output::write_csv(&outcome.report, &mut w).map_err(io::Error::other)?,
    }
    w.flush()
}
