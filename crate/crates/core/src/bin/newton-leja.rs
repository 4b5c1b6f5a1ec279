use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use newton_leja::error::Error;
use newton_leja::library::{load_library, precompute_library};
use newton_leja::nodes::{chebyshev_ascending, chebyshev_leja, fast_leja, Family, Interval};
use newton_leja::report::{decimal, emit_csv, emit_plot_script, write_csv};
use newton_leja::sweep::{default_degrees, run_sweep, SweepConfig};
use newton_leja::testbed::TestFunction;

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

/// Newton interpolation on Fast Leja and Leja-ordered Chebyshev nodes.
#[derive(Parser)]
#[command(name = "newton-leja", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure interpolation errors over functions, node families and node counts.
    Sweep(SweepArgs),
    /// Build, store and inspect node sets.
    #[command(subcommand)]
    Nodes(NodesCommand),
    /// Write a gnuplot script plotting a sweep CSV.
    Plot {
        /// Sweep CSV to plot.
        csv: PathBuf,
        /// Script path; images are written next to it.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum NodesCommand {
    /// Compute Fast Leja points and store them as a node library.
    Precompute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Print a node sequence, one value per line.
    Show {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "fast-leja")]
        family: Family,
        /// Read Fast Leja points from this library instead of computing them.
        #[arg(long)]
        library: Option<PathBuf>,
        #[command(flatten)]
        interval: IntervalArg,
    },
}

#[derive(Args)]
struct IntervalArg {
    /// Interpolation interval.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    interval: Option<Vec<f64>>,
}

impl IntervalArg {
    fn resolve(&self) -> Result<Interval, Error> {
        match self.interval.as_deref() {
            Some(&[lo, hi]) => Interval::new(lo, hi),
            Some(_) => Err(Error::InvalidArgument("--interval takes LO HI".into())),
            None => Ok(Interval::STANDARD),
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "runge,heaviside,sawtooth,sqrtabs")]
    functions: Vec<TestFunction>,
    #[arg(long, value_delimiter = ',', default_value = "chebyshev-leja,fast-leja")]
    families: Vec<Family>,
    /// Node counts; defaults to 8, 16, ..., 16384.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    #[command(flatten)]
    interval: IntervalArg,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fast Leja node library to read instead of computing the points.
    #[arg(long)]
    library: Option<PathBuf>,
    /// Write zero wall times so repeated runs give identical files.
    #[arg(long)]
    no_timing: bool,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidArgument(_) => EXIT_USAGE,
        Error::Io { .. } | Error::Parse { .. } => EXIT_IO,
        Error::DuplicateNode(_) => EXIT_NUMERICAL,
    }
}

fn stdout_error(e: io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn sweep(args: SweepArgs) -> Result<(), Error> {
    let config = SweepConfig {
        functions: args.functions,
        families: args.families,
        degrees: args.degrees.unwrap_or_else(default_degrees),
        interval: args.interval.resolve()?,
        library: args.library,
        record_timing: !args.no_timing,
    };
    let records = run_sweep(&config)?;
    match args.out {
        Some(path) => emit_csv(&records, &path),
        None => {
            let mut out = BufWriter::new(io::stdout().lock());
            write_csv(&records, &mut out)
                .and_then(|_| out.flush())
                .map_err(stdout_error)
        }
    }
}

fn nodes(command: NodesCommand) -> Result<(), Error> {
    match command {
        NodesCommand::Precompute { n, out, interval } => {
            precompute_library(interval.resolve()?, n, &out)?;
            Ok(())
        }
        NodesCommand::Show {
            n,
            family,
            library,
            interval,
        } => {
            let interval = interval.resolve()?;
            let seq = match (family, library) {
                (Family::FastLeja, Some(path)) => load_library(&path, n, interval)?,
                (_, Some(_)) => {
                    return Err(Error::InvalidArgument(
                        "--library only provides fast-leja nodes".into(),
                    ))
                }
                (Family::FastLeja, None) => fast_leja(interval, n)?,
                (Family::ChebyshevLeja, None) => chebyshev_leja(interval, n)?,
                (Family::ChebyshevAscending, None) => chebyshev_ascending(interval, n)?,
                (other, None) => {
                    return Err(Error::InvalidArgument(format!(
                        "cannot show family `{other}`"
                    )))
                }
            };
            let mut out = BufWriter::new(io::stdout().lock());
            for &x in seq.values() {
                writeln!(out, "{}", decimal(x)).map_err(stdout_error)?;
            }
            out.flush().map_err(stdout_error)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Nodes(command) => nodes(command),
        Command::Plot { csv, out } => emit_plot_script(&csv, &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("newton-leja: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
