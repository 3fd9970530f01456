//! Flag definitions and dispatch.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use schroder_core::report::{CheckValue, VerificationReport};
use schroder_core::schroder::SCHRODER_ORDER;
use schroder_core::series::DEFAULT_ORDER;

use crate::commands::{self, PotentialRequest, TrajectoryRequest};
use crate::error::{LabError, LabResult};
use crate::parse::{format_rational, parse_rational};
use crate::table::{report_table, Table};
use crate::verify;

/// Environment variable naming the default output directory.
pub const OUT_DIR_VAR: &str = "SCHRODER_LAB_OUT";

#[derive(Debug, Parser)]
#[command(
    name = "schroder-lab",
    version,
    about = "Potentials of the logistic map: curve data and verification reports"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Output file. Without it, output goes to $SCHRODER_LAB_OUT/<default name> if set, else stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// The map parameter, as `p/q` or a decimal.
#[derive(Debug, Args)]
pub struct SArg {
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub s: BigRational,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients a_n of the potential series.
    Coeffs {
        #[command(flatten)]
        s: SArg,
        /// Highest index.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        n: usize,
    },
    /// One potential branch V_n^(m) sampled on a grid.
    Potential {
        #[command(flatten)]
        s: SArg,
        /// Family m (0 = V, 1 = W, 2 = X, ...).
        #[arg(long, default_value_t = 0)]
        family: usize,
        /// Sequence index n.
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Left end; defaults to the lower turning point.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        xmin: Option<BigRational>,
        /// Right end; defaults to the upper turning point.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        xmax: Option<BigRational>,
        #[arg(long, default_value_t = 201)]
        samples: usize,
        /// Series order.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        n: usize,
    },
    /// Transit times along the potential path, as a report.
    Transit {
        #[command(flatten)]
        s: SArg,
        /// Number of unit-time groups, counting the lead-in.
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Series order.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        n: usize,
    },
    /// The continuous orbit x(t) and its velocity.
    Trajectory {
        #[command(flatten)]
        s: SArg,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x0: BigRational,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t0: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        t1: f64,
        #[arg(long, default_value_t = 0.05)]
        dt: f64,
        /// Order of the Schröder and Poincaré series.
        #[arg(long, default_value_t = SCHRODER_ORDER)]
        n: usize,
    },
    /// Branches of Ψ sampled on [0, s/4].
    Branches {
        #[command(flatten)]
        s: SArg,
        #[arg(long, default_value_t = 8)]
        count: usize,
        #[arg(long, default_value_t = 401)]
        samples: usize,
        /// Order of the Schröder and Poincaré series.
        #[arg(long, default_value_t = SCHRODER_ORDER)]
        n: usize,
    },
    /// Run the acceptance checks; exit status 0 iff all pass.
    Verify {
        /// Restrict to criteria by key or number; repeatable or comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Output {
    Table(Table),
    Report(VerificationReport),
}

fn tag(s: &BigRational) -> String {
    format_rational(s).replace('/', "_").replace('-', "m")
}

/// Runs one invocation and returns the process exit code.
pub fn execute(cli: Cli) -> LabResult<i32> {
    let (output, name, default_format) = match &cli.command {
        Command::Coeffs { s, n } => (
            Output::Table(commands::coeffs(&s.s, *n)?),
            format!("coeffs_s{}", tag(&s.s)),
            Format::Csv,
        ),
        Command::Potential {
            s,
            family,
            index,
            xmin,
            xmax,
            samples,
            n,
        } => {
            let req = PotentialRequest {
                s: s.s.clone(),
                family: *family,
                index: *index,
                xmin: xmin.clone(),
                xmax: xmax.clone(),
                samples: *samples,
                order: *n,
            };
            let name = format!("potential_s{}_m{family}_n{index}", tag(&s.s));
            (Output::Table(commands::potential(&req)?), name, Format::Csv)
        }
        Command::Transit { s, depth, n } => {
            let report = commands::transit(&s.s, *depth, *n)?;
            (Output::Report(report), format!("transit_s{}", tag(&s.s)), Format::Json)
        }
        Command::Trajectory { s, x0, t0, t1, dt, n } => {
            let req = TrajectoryRequest {
                s: s.s.clone(),
                x0: x0.clone(),
                t0: *t0,
                t1: *t1,
                dt: *dt,
                order: *n,
            };
            let name = format!("trajectory_s{}_x{}", tag(&s.s), tag(x0));
            (Output::Table(commands::trajectory(&req)?), name, Format::Csv)
        }
        Command::Branches { s, count, samples, n } => {
            let table = commands::branches(&s.s, *count, *samples, *n)?;
            (Output::Table(table), format!("branches_s{}", tag(&s.s)), Format::Csv)
        }
        Command::Verify { only, json } => {
            if let Some(bad) = only.iter().find(|o| verify::select(std::slice::from_ref(o)).is_empty()) {
                let keys: Vec<&str> = verify::criteria().iter().map(|c| c.key).collect();
                return Err(LabError::Usage(format!(
                    "unknown criterion {bad:?}; known: {}",
                    keys.join(", ")
                )));
            }
            let report = verify::run(only);
            if let Some(path) = json {
                write_json(path, &serde_json::to_value(&report)?)?;
            }
            let code = i32::from(!report.all_passed());
            if cli.format.is_none() && cli.out.is_none() {
                print_summary(&report)?;
                return Ok(code);
            }
            emit(&cli, &Output::Report(report), "verify", Format::Json)?;
            return Ok(code);
        }
    };
    emit(&cli, &output, &name, default_format)?;
    Ok(match &output {
        Output::Report(r) => i32::from(!r.all_passed()),
        Output::Table(_) => 0,
    })
}

fn print_summary(report: &VerificationReport) -> io::Result<()> {
    let stdout = io::stdout();
    let mut w = stdout.lock();
    let show = |v: &CheckValue| match v {
        CheckValue::Number(x) => format!("{x:.10e}"),
        CheckValue::Text(t) => t.clone(),
    };
    for c in &report.checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        let (e, g) = (show(&c.expected), show(&c.computed));
        writeln!(
            w,
            "{verdict}  {}  (expected {e}, computed {g}, tol {:e})",
            c.check, c.tolerance
        )?;
    }
    writeln!(w, "{}/{} checks passed", report.summary.passed, report.summary.total)
}

fn destination(cli: &Cli, name: &str, format: Format) -> Option<PathBuf> {
    if let Some(p) = &cli.out {
        return Some(p.clone());
    }
    let dir = std::env::var_os(OUT_DIR_VAR)?;
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    Some(Path::new(&dir).join(format!("{name}.{ext}")))
}

fn emit(cli: &Cli, output: &Output, name: &str, default_format: Format) -> LabResult<()> {
    let format = cli.format.unwrap_or(default_format);
    let path = destination(cli, name, format);
    let sink: Box<dyn Write> = match &path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            Box::new(BufWriter::new(File::create(p)?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match (output, format) {
        (Output::Table(t), Format::Csv) => t.write_csv(sink)?,
        (Output::Report(r), Format::Csv) => report_table(r).write_csv(sink)?,
        (Output::Table(t), Format::Json) => write_json_to(sink, &t.to_json())?,
        (Output::Report(r), Format::Json) => write_json_to(sink, &serde_json::to_value(r)?)?,
    }
    Ok(())
}

fn write_json(path: &Path, value: &serde_json::Value) -> LabResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    write_json_to(BufWriter::new(File::create(path)?), value)
}

fn write_json_to<W: Write>(mut w: W, value: &serde_json::Value) -> LabResult<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}
