//! The `quasibell` command line: single-point reports, parameter sweeps and
//! self-verification.

pub mod args;
pub mod grid;
pub mod table;
pub mod verify;

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::path::Path;

use quasibell::{Error, Family, NoiseKind};
use rayon::prelude::*;

use args::{Cli, Command, FamilySelection, ReportArgs, ReportFormat, SweepArgs, TableFormat, VerifyArgs};
use grid::{parse_angle, GridParam};
use table::{evaluate, Point, Row};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BAD_PARAMETERS: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Degenerate or out-of-domain parameters.
    Parameters(String),
    Io(String),
    VerifyFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parameters(_) => EXIT_BAD_PARAMETERS,
            CliError::Io(_) => EXIT_IO,
            CliError::VerifyFailed => EXIT_VERIFY_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parameters(m) | CliError::Io(m) => f.write_str(m),
            CliError::VerifyFailed => f.write_str("verification failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Parameters(e.to_string())
    }
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Report(a) => report(&a, out),
        Command::Sweep(a) => sweep(&a, out),
        Command::Verify(a) => verify_cmd(&a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            if !matches!(e, CliError::VerifyFailed) {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

fn emit(bytes: &[u8], path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(bytes)
            .map_err(|e| CliError::Io(format!("cannot write output: {e}"))),
    }
}

fn report(a: &ReportArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let point = Point {
        family: a.family,
        r: a.r,
        theta: parse_angle(&a.theta, a.radians).map_err(CliError::Parameters)?,
        kind: a.noise,
        eta: a.eta,
        exposure: a.exposure,
    };
    let row = evaluate(&point)?;
    if let Some(d) = &row.diagnostic {
        return Err(CliError::Parameters(d.clone()));
    }
    let rows = [row];
    let bytes = match a.format {
        ReportFormat::Text => table::to_text(&rows[0]).into_bytes(),
        ReportFormat::Csv => table::to_csv(&rows),
        ReportFormat::Json => table::to_json(&rows),
    };
    emit(&bytes, a.out.as_deref(), out)
}

/// Expands the sweep arguments into points in output order: family, then
/// r, θ, η and exposure.
pub fn sweep_points(a: &SweepArgs) -> Result<Vec<Point>, CliError> {
    let mut families: Vec<Family> = Vec::new();
    for sel in &a.family {
        match sel {
            FamilySelection::All => families.extend(Family::ALL),
            FamilySelection::One(f) => families.push(*f),
        }
    }
    let families: Vec<Family> = Family::ALL.into_iter().filter(|f| families.contains(f)).collect();

    let angle_unit = if a.radians { 1.0 } else { PI };
    let mut rs = vec![a.r];
    let mut thetas = vec![parse_angle(&a.theta, a.radians).map_err(CliError::Parameters)?];
    let mut etas = vec![a.eta];
    for g in &a.grid {
        match g.param {
            GridParam::R => rs = g.points(1.0),
            GridParam::Theta => thetas = g.points(angle_unit),
            GridParam::Eta => etas = g.points(1.0),
        }
    }
    let mut exposures = Vec::new();
    for e in &a.exposure {
        if !exposures.contains(e) {
            exposures.push(*e);
        }
    }
    if a.noise == NoiseKind::None {
        etas = vec![0.0];
        exposures.truncate(1);
    }

    let mut points = Vec::with_capacity(families.len() * rs.len() * thetas.len() * etas.len() * exposures.len());
    for &family in &families {
        for &r in &rs {
            for &theta in &thetas {
                for &eta in &etas {
                    for &exposure in &exposures {
                        points.push(Point {
                            family,
                            r,
                            theta,
                            kind: a.noise,
                            eta,
                            exposure,
                        });
                    }
                }
            }
        }
    }
    Ok(points)
}

pub fn sweep_rows(points: &[Point]) -> Result<Vec<Row>, CliError> {
    let rows: Result<Vec<Row>, Error> = points.par_iter().map(evaluate).collect();
    Ok(rows?)
}

fn sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = sweep_rows(&sweep_points(a)?)?;
    let bytes = match a.format {
        TableFormat::Csv => table::to_csv(&rows),
        TableFormat::Json => table::to_json(&rows),
    };
    emit(&bytes, a.out.as_deref(), out)
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let names: Vec<&str> = if a.suite.is_empty() {
        verify::SUITES.to_vec()
    } else {
        a.suite.iter().map(String::as_str).collect()
    };
    if let Some(bad) = names.iter().find(|n| !verify::SUITES.contains(n)) {
        return Err(CliError::Parameters(format!(
            "unknown suite `{bad}` (expected one of {})",
            verify::SUITES.join(", ")
        )));
    }
    let results: Vec<_> = names.iter().filter_map(|n| verify::run_suite(n)).collect();
    out.write_all(verify::render(&results).as_bytes())
        .map_err(|e| CliError::Io(format!("cannot write output: {e}")))?;
    if results.iter().all(verify::SuiteResult::passed) {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}
