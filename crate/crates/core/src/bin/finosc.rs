use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use finosc::frft::SignalSpec;
use finosc::report::{self, Cell, Method, Plot, Series, Table};
use finosc::spectral::BasisKind;
use finosc::verify::{self, Severity};
use finosc::{Error, Lattice};

#[derive(Parser)]
#[command(name = "finosc", version, about = "Finite quantum oscillator and discrete fractional Fourier transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant suite at --d and at d = 5, 7.
    Verify(Common),
    /// Discrete vs continuous coherent states on the 4 x 4 grid.
    Table1(Common),
    /// Eigenvalues and labels of an oscillator basis.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = BasisArg::Frame)]
        method: BasisArg,
    },
    /// Deviations of four finite Hermite bases from the sampled Hermite-Gaussians.
    Compare {
        #[command(flatten)]
        common: Common,
        /// Normalise the ladder states before comparing.
        #[arg(long)]
        normalize_ladder: bool,
    },
    /// Fractional Fourier transform of a test signal.
    Frft {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        alpha: f64,
        /// `rect` or `gauss:<kappa>`.
        #[arg(long, default_value = "rect")]
        signal: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Frame)]
        method: MethodArg,
        /// Add the continuous transform sampled on the grid.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Odd dimension, at least 5.
    #[arg(long, default_value_t = 21)]
    d: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Frame,
    Harper,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Frame,
    Harper,
    Both,
}

enum Failure {
    Usage(String),
    Verification,
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EvenDimension(_)
            | Error::DimensionTooSmall(_)
            | Error::UnknownSignal(_)
            | Error::InvalidParameter { .. }
            | Error::IndexOutOfRange { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn emit(common: &Common, table: &Table, plot: impl FnOnce(&Table) -> Result<Plot, Error>) -> Result<(), Failure> {
    let text = match common.format {
        Format::Csv => table.to_csv(),
        Format::Svg => plot(table)?.to_svg(),
    };
    match &common.out {
        Some(path) => report::write_atomic(path, &text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn table1_plot(t: &Table) -> Result<Plot, Error> {
    let mut plot = Plot::new("coherent-state deviation", "beta_idx", true);
    for a in report::TABLE1_INDICES {
        let points = t
            .rows
            .iter()
            .filter(|r| r[0] == Cell::Int(a))
            .filter_map(|r| Some((r[1].as_f64()?, r[2].as_f64()?)))
            .collect();
        plot.series.push(Series {
            name: format!("alpha_idx = {a}"),
            points,
        });
    }
    Ok(plot)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify(common) => {
            let lat = Lattice::new(common.d)?;
            let suite = verify::run(lat.d())?;
            for c in &suite.checks {
                println!("{c}");
            }
            let gating = suite.checks.iter().filter(|c| c.severity == Severity::Gate).count();
            let failed = suite.failures().count();
            println!("{} checks, {} gating, {failed} failed", suite.checks.len(), gating);
            if common.out.is_some() {
                let mut t = Table::new(&["index", "name", "value", "bound", "status"]);
                for (i, c) in suite.checks.iter().enumerate() {
                    let status = match (c.severity, c.passed()) {
                        (Severity::Gate, true) => "pass",
                        (Severity::Gate, false) => "fail",
                        (Severity::Info, _) => "info",
                    };
                    t.push(vec![
                        Cell::Int(i as i64),
                        Cell::Text(format!("\"{}\"", c.name.replace('"', "'"))),
                        Cell::Real(c.value),
                        Cell::Real(c.bound),
                        Cell::Text(status.into()),
                    ]);
                }
                emit(&common, &t, |t| {
                    let mut p = t.plot("check values", "index", &["value", "bound"], true)?;
                    p.title = "verification".into();
                    Ok(p)
                })?;
            }
            if suite.all_passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Table1(common) => {
            let lat = Lattice::new(common.d)?;
            if lat.d() != 21 {
                eprintln!("warning: the reference coherent-state values are for d = 21");
            }
            let t = report::table1(lat)?;
            emit(&common, &t, table1_plot)
        }
        Command::Spectrum { common, method } => {
            let lat = Lattice::new(common.d)?;
            let kind = match method {
                BasisArg::Frame => BasisKind::Frame,
                BasisArg::Harper => BasisKind::Harper,
            };
            let t = report::spectrum(&report::basis_for(lat, kind)?);
            emit(&common, &t, |t| t.plot(&format!("{kind} spectrum"), "m", &["eigenvalue"], false))
        }
        Command::Compare { common, normalize_ladder } => {
            let lat = Lattice::new(common.d)?;
            let t = report::compare(lat, normalize_ladder)?;
            emit(&common, &t, |t| {
                t.plot("deviation from Hermite-Gaussians", "m", &["delta_f", "delta_h", "delta_m", "delta_r"], true)
            })
        }
        Command::Frft {
            common,
            alpha,
            signal,
            method,
            oracle,
        } => {
            let lat = Lattice::new(common.d)?;
            let spec: SignalSpec = signal.parse()?;
            let method = match method {
                MethodArg::Frame => Method::Frame,
                MethodArg::Harper => Method::Harper,
                MethodArg::Both => Method::Both,
            };
            let run = report::frft_run(lat, alpha, spec, method, oracle)?;
            if let Some(errs) = run.errors() {
                for (kind, e) in errs {
                    eprintln!("{kind}: max-abs deviation from continuous transform {e:.6e}");
                }
            }
            let t = run.table();
            let ys: Vec<String> = t.headers.iter().filter(|h| h.ends_with("_re")).cloned().collect();
            emit(&common, &t, |t| {
                let refs: Vec<&str> = ys.iter().map(String::as_str).collect();
                t.plot(&format!("FrFT order {alpha} of {spec}"), "n", &refs, false)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
