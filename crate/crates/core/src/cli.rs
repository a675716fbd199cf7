//! The `stefan3` command line.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! with the text destined for standard output and standard error, so the
//! whole front end can be exercised in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::equivalence::equivalence_report;
use crate::error::{Error, Result};
use crate::field::FieldGrid;
use crate::model::{BoundaryKind, ParameterSet};
use crate::solver::{solve_parameters, thresholds, ThreePhaseSolution};
use crate::transcendental::ProblemContext;
use crate::verify::{verify, VerifyOptions, DEFAULT_REL_STEP};

/// Environment variable selecting the diagnostic level.
pub const LOG_ENV: &str = "STEFAN3_LOG";

/// Exit code when a residual check fails.
pub const EXIT_VERIFICATION: i32 = 6;

#[derive(Debug, Parser)]
#[command(name = "stefan3", version, about = "Explicit three-phase melting solutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve the configured problem and print its fronts.
    Solve {
        #[arg(long)]
        config: PathBuf,
    },
    /// Print z0 and the regime thresholds.
    Thresholds {
        #[arg(long)]
        config: PathBuf,
    },
    /// Map the configured problem to an equivalent one of another kind.
    Equiv {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        to: BoundaryKind,
        /// Bulk temperature of a convective target.
        #[arg(long = "a-inf", allow_hyphen_values = true)]
        a_inf: Option<f64>,
        #[arg(long = "perturb-inner", hide = true, allow_hyphen_values = true)]
        perturb_inner: Option<f64>,
    },
    /// Write the temperature field and the fronts as CSV.
    Map {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        xmax: f64,
        #[arg(long, allow_hyphen_values = true)]
        tmax: f64,
        #[arg(long, default_value_t = 200)]
        nx: usize,
        #[arg(long, default_value_t = 200)]
        nt: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the solution against the governing equations.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long = "rel-step", default_value_t = DEFAULT_REL_STEP, allow_hyphen_values = true)]
        rel_step: f64,
        #[arg(long, hide = true, allow_hyphen_values = true)]
        perturb: Option<f64>,
        #[arg(long = "perturb-inner", hide = true, allow_hyphen_values = true)]
        perturb_inner: Option<f64>,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Installs the stderr logger according to [`LOG_ENV`]. Safe to call more
/// than once.
pub fn init_logging() {
    let level = match std::env::var(LOG_ENV).as_deref() {
        Ok("quiet") => log::LevelFilter::Off,
        Ok("info") => log::LevelFilter::Info,
        Ok("debug") => log::LevelFilter::Debug,
        _ => log::LevelFilter::Warn,
    };
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = Outcome::default();
    match execute(cli.command, &mut out) {
        Ok(code) => out.code = code,
        Err(err) => {
            out.code = err.exit_code();
            report_error(&err, &mut out.stderr);
        }
    }
    out
}

fn report_error(err: &Error, stderr: &mut String) {
    match err {
        Error::Validation(violations) => {
            for v in violations {
                writeln!(stderr, "error: {}: {}", v.code, v.message).unwrap();
            }
        }
        other => writeln!(stderr, "error: {other}").unwrap(),
    }
}

fn load(path: &Path) -> Result<ParameterSet> {
    let text = fs::read_to_string(path)?;
    Ok(ParameterSet::from_json(&text)?)
}

fn validated(path: &Path) -> Result<ParameterSet> {
    let set = load(path)?;
    let violations = set.validate();
    if violations.is_empty() {
        Ok(set)
    } else {
        Err(Error::Validation(violations))
    }
}

fn solved(path: &Path, d_coef1: Option<f64>, d_coef2: Option<f64>) -> Result<ThreePhaseSolution> {
    let sol = solve_parameters(&validated(path)?)?;
    Ok(match (d_coef1, d_coef2) {
        (None, None) => sol,
        (d1, d2) => {
            log::warn!("perturbing front coefficients by ({:?}, {:?})", d1, d2);
            sol.perturbed(d1.unwrap_or(0.0), d2.unwrap_or(0.0))
        }
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types always serialize");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct MapSummary<'a> {
    field: &'a Path,
    fronts: &'a Path,
    nx: usize,
    nt: usize,
}

fn execute(command: Command, out: &mut Outcome) -> Result<i32> {
    match command {
        Command::Solve { config } => {
            let sol = solved(&config, None, None)?;
            out.stdout = json(&sol.report());
        }
        Command::Thresholds { config } => {
            let set = validated(&config)?;
            let ctx = ProblemContext::new(set.props, set.temps)?;
            out.stdout = json(&thresholds(&ctx, set.boundary.a_inf()));
        }
        Command::Equiv {
            config,
            to,
            a_inf,
            perturb_inner,
        } => {
            let sol = solved(&config, None, perturb_inner)?;
            let report = equivalence_report(&sol, to, a_inf)?;
            out.stdout = json(&report);
        }
        Command::Map {
            config,
            xmax,
            tmax,
            nx,
            nt,
            out: path,
        } => {
            let sol = solved(&config, None, None)?;
            let grid = FieldGrid::sample(&sol, xmax, tmax, nx, nt)?;
            let (field, fronts) = grid.write_csv(&path)?;
            out.stdout = json(&MapSummary {
                field: &field,
                fronts: &fronts,
                nx,
                nt,
            });
        }
        Command::Verify {
            config,
            rel_step,
            perturb,
            perturb_inner,
        } => {
            let sol = solved(&config, perturb, perturb_inner)?;
            let options = VerifyOptions {
                rel_step,
                ..VerifyOptions::default()
            };
            let report = verify(&sol, &options)?;
            out.stdout = json(&report);
            let rows = [
                ("heat", report.heat.max(), options.tolerances.heat),
                ("interface", report.interface.max(), options.tolerances.interface),
                ("stefan", report.stefan.max(), options.tolerances.stefan),
                ("boundary", report.boundary, options.tolerances.boundary),
                ("far_field", report.far_field, options.tolerances.far_field),
            ];
            for (name, value, limit) in rows {
                let verdict = if report.failures.contains(&name) {
                    "FAIL"
                } else {
                    "pass"
                };
                writeln!(out.stderr, "{verdict:4}  {name:<10} {value:<24e} <= {limit:e}").unwrap();
            }
            if !report.passed {
                return Ok(EXIT_VERIFICATION);
            }
        }
    }
    Ok(0)
}
