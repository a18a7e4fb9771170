//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! [`run`] is pure: it returns the rendered report and whether every check in
//! it passed. The `ncg` binary only parses flags, prints, and sets the exit code.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::Error;
use crate::fock::{Basis, Cutoffs, OperatorMatrix};
use crate::format::{sig15, Fixed, FixedComplex};
use crate::ladder::SymmetricGaugeOperators;
use crate::landau_gauge::{
    convergence_study, projected_commutator_landau, ConvergenceRow, KGrid, LANDAU_REL_TOL,
};
use crate::projection::{
    projected_commutator_matrix, projected_commutator_xy, sweep, sweep_parallel, CommutatorReport,
};
use crate::spectrum::{verify_spectrum, SpectrumReport};
use crate::units::PhysicalUnits;

/// Environment variable that supplies the default `--output` format.
pub const OUTPUT_ENV: &str = "NCG_DEFAULT_OUTPUT";

#[derive(Debug, Parser)]
#[command(
    name = "ncg",
    version,
    about = "Coordinate commutator on truncated Landau-level spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Landau cutoff: levels n = 0..=N are retained.
    #[arg(long = "N", global = true, default_value_t = 4)]
    pub landau_cutoff: usize,

    /// Degeneracy cutoff: quanta j = 0..=J are retained.
    #[arg(long = "J", global = true, default_value_t = 8)]
    pub degeneracy_cutoff: usize,

    /// Highest kept Landau level (defaults to N).
    #[arg(long, global = true)]
    pub keep: Option<usize>,

    /// Number of Landau-gauge momentum grid points.
    #[arg(long = "grid-M", global = true, default_value_t = 128)]
    pub grid_m: usize,

    /// Half-width of the momentum grid in units of hbar/l.
    #[arg(
        long = "k-range",
        global = true,
        allow_negative_numbers = true,
        default_value_t = 8.0
    )]
    pub k_range: f64,

    /// Grid refinements (each halves dk) for the landau-gauge study.
    #[arg(long, global = true, default_value_t = 1)]
    pub refinements: usize,

    /// Operator for dump-matrix: a, b, alpha, x, y, px, py, H, L, commutator, projected-commutator.
    #[arg(long, global = true, default_value = "x")]
    pub operator: String,

    /// TOML file with any of e, B, c, hbar, m.
    #[arg(long = "units-file", global = true)]
    pub units_file: Option<PathBuf>,

    #[arg(long, global = true, allow_negative_numbers = true)]
    pub e: Option<f64>,
    #[arg(long = "B", global = true, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub m: Option<f64>,

    #[arg(long, global = true, value_enum, env = OUTPUT_ENV, default_value = "table")]
    pub output: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long = "out", global = true)]
    pub out_path: Option<PathBuf>,

    /// Evaluate sweep entries in parallel (output order is unchanged).
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Projected commutator for a single kept level set.
    Commutator,
    /// Projected commutator for keep = 0..=N.
    Sweep,
    /// Landau-level spectrum of the ladder Hamiltonian.
    Spectrum,
    /// Landau-gauge grid-refinement study.
    LandauGauge,
    /// Compare the two gauges at one kept level set.
    Crosscheck,
    /// Serialize an operator matrix.
    DumpMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

/// Validated run parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub cutoffs: Cutoffs,
    pub keep: usize,
    pub grid_m: usize,
    pub k_range: f64,
    pub refinements: usize,
    pub operator: String,
    pub units: PhysicalUnits,
    pub output: OutputFormat,
    pub out_path: Option<PathBuf>,
    pub parallel: bool,
}

/// Problems with the command line itself.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("invalid value for {flag}: {message}")]
pub struct UsageError {
    pub flag: &'static str,
    pub message: String,
}

fn usage(flag: &'static str, message: impl Into<String>) -> UsageError {
    UsageError {
        flag,
        message: message.into(),
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, UsageError> {
        let cutoffs = Cutoffs::new(cli.landau_cutoff, cli.degeneracy_cutoff)
            .map_err(|e| usage("--N/--J", e.to_string()))?;
        let keep = cli.keep.unwrap_or(cli.landau_cutoff);
        if keep > cli.landau_cutoff {
            return Err(usage(
                "--keep",
                format!("{keep} exceeds the Landau cutoff --N {}", cli.landau_cutoff),
            ));
        }
        let needs_grid = matches!(cli.command, Command::LandauGauge | Command::Crosscheck);
        if needs_grid && cli.grid_m < 3 {
            return Err(usage(
                "--grid-M",
                format!("needs at least 3 points, got {}", cli.grid_m),
            ));
        }
        if needs_grid && !(cli.k_range.is_finite() && cli.k_range > 0.0) {
            return Err(usage(
                "--k-range",
                format!("must be positive, got {}", cli.k_range),
            ));
        }
        Ok(Self {
            command: cli.command,
            cutoffs,
            keep,
            grid_m: cli.grid_m,
            k_range: cli.k_range,
            refinements: cli.refinements,
            operator: cli.operator.clone(),
            units: resolve_units(cli)?,
            output: cli.output,
            out_path: cli.out_path.clone(),
            parallel: cli.parallel,
        })
    }
}

fn resolve_units(cli: &Cli) -> Result<PhysicalUnits, UsageError> {
    let base = match &cli.units_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage("--units-file", format!("{}: {e}", path.display())))?;
            toml::from_str::<PhysicalUnits>(&text)
                .map_err(|e| usage("--units-file", e.to_string()))?
        }
        None => PhysicalUnits::natural(),
    };
    PhysicalUnits::new(
        cli.e.unwrap_or(base.charge()),
        cli.b.unwrap_or(base.field()),
        cli.c.unwrap_or(base.speed_of_light()),
        cli.hbar.unwrap_or(base.hbar()),
        cli.m.unwrap_or(base.mass()),
    )
    .map_err(|e| match e {
        Error::InvalidConstant { name, .. } => usage(constant_flag(name), e.to_string()),
        other => usage("--units-file", other.to_string()),
    })
}

fn constant_flag(name: &str) -> &'static str {
    match name {
        "e" => "--e",
        "B" => "--B",
        "c" => "--c",
        "hbar" => "--hbar",
        _ => "--m",
    }
}

/// Rendered report plus the aggregate pass/fail flag.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub text: String,
    pub ok: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("serialization failed: {0}")]
    Serialize(String),
}

pub fn run(config: &RunConfig) -> Result<RunOutput, RunError> {
    match config.command {
        Command::Commutator => {
            let report = projected_commutator_xy(config.cutoffs, config.keep, &config.units)?;
            render_reports(std::slice::from_ref(&report), false, config.output)
        }
        Command::Sweep => {
            let reports = if config.parallel {
                sweep_parallel(config.cutoffs, &config.units)?
            } else {
                sweep(config.cutoffs, &config.units)?
            };
            render_reports(&reports, true, config.output)
        }
        Command::Spectrum => {
            let report = verify_spectrum(config.cutoffs, &config.units)?;
            render_spectrum(&report, config.output)
        }
        Command::LandauGauge => {
            let grid = KGrid::for_units(config.grid_m, config.k_range, &config.units)?;
            let rows = convergence_study(grid, config.keep, config.refinements, &config.units)?;
            render_convergence(&rows, &config.units, config.output)
        }
        Command::Crosscheck => crosscheck(config),
        Command::DumpMatrix => dump_matrix(config),
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String, RunError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| RunError::Serialize(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, RunError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let ser = |e: csv::Error| RunError::Serialize(e.to_string());
    w.write_record(header).map_err(ser)?;
    for r in rows {
        w.write_record(&r).map_err(ser)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| RunError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| RunError::Serialize(e.to_string()))
}

fn render_reports(
    reports: &[CommutatorReport],
    as_list: bool,
    output: OutputFormat,
) -> Result<RunOutput, RunError> {
    let ok = reports.iter().all(|r| r.ok);
    let text = match output {
        OutputFormat::Json if as_list => to_json(&reports)?,
        OutputFormat::Json => to_json(&reports[0])?,
        OutputFormat::Csv => csv_string(
            &["keep", "re", "im", "residual"],
            reports
                .iter()
                .map(|r| {
                    vec![
                        r.keep.to_string(),
                        sig15(r.top_coefficient.re),
                        sig15(r.top_coefficient.im),
                        sig15(r.max_offtop_residual),
                    ]
                })
                .collect(),
        )?,
        OutputFormat::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>4} {:>4} {:>4}  {:>22} {:>22}  {:>22}  {:>5}",
                "N", "J", "keep", "Re top", "Im top", "off-top residual", "ok"
            );
            for r in reports {
                let _ = writeln!(
                    out,
                    "{:>4} {:>4} {:>4}  {:>22} {:>22}  {:>22}  {:>5}",
                    r.cutoffs.landau_cutoff(),
                    r.cutoffs.degeneracy_cutoff(),
                    r.keep,
                    sig15(r.top_coefficient.re),
                    sig15(r.top_coefficient.im),
                    sig15(r.max_offtop_residual),
                    r.ok
                );
            }
            out
        }
    };
    Ok(RunOutput { text, ok })
}

fn render_spectrum(report: &SpectrumReport, output: OutputFormat) -> Result<RunOutput, RunError> {
    let text = match output {
        OutputFormat::Json => to_json(report)?,
        OutputFormat::Csv => csv_string(
            &["index", "eigenvalue", "expected", "abs_error"],
            report
                .eigenvalues
                .iter()
                .zip(&report.expected)
                .enumerate()
                .map(|(i, (e, x))| vec![i.to_string(), sig15(*e), sig15(*x), sig15((e - x).abs())])
                .collect(),
        )?,
        OutputFormat::Table => report.to_table(),
    };
    Ok(RunOutput {
        text,
        ok: report.ok,
    })
}

#[derive(Serialize)]
struct ConvergenceJson {
    #[serde(rename = "M")]
    points: usize,
    dk: Fixed,
    keep: usize,
    coefficient: FixedComplex,
    abs_error: Fixed,
    observed_order: Option<Fixed>,
}

fn row_ok(r: &ConvergenceRow, u: &PhysicalUnits) -> bool {
    r.abs_error <= LANDAU_REL_TOL * (r.keep + 1) as f64 * u.magnetic_length_sq()
}

fn render_convergence(
    rows: &[ConvergenceRow],
    u: &PhysicalUnits,
    output: OutputFormat,
) -> Result<RunOutput, RunError> {
    let ok = rows.iter().all(|r| row_ok(r, u));
    let order = |r: &ConvergenceRow| r.observed_order.map(sig15).unwrap_or_default();
    let text = match output {
        OutputFormat::Json => to_json(
            &rows
                .iter()
                .map(|r| ConvergenceJson {
                    points: r.points,
                    dk: Fixed(r.dk),
                    keep: r.keep,
                    coefficient: FixedComplex(r.coefficient),
                    abs_error: Fixed(r.abs_error),
                    observed_order: r.observed_order.map(Fixed),
                })
                .collect::<Vec<_>>(),
        )?,
        OutputFormat::Csv => csv_string(
            &[
                "M",
                "dk",
                "keep",
                "re_coeff",
                "im_coeff",
                "abs_error",
                "observed_order",
            ],
            rows.iter()
                .map(|r| {
                    vec![
                        r.points.to_string(),
                        sig15(r.dk),
                        r.keep.to_string(),
                        sig15(r.coefficient.re),
                        sig15(r.coefficient.im),
                        sig15(r.abs_error),
                        order(r),
                    ]
                })
                .collect(),
        )?,
        OutputFormat::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>6} {:>22} {:>4}  {:>22} {:>22}  {:>22}  {:>22}",
                "M", "dk", "keep", "Re coeff", "Im coeff", "abs error", "order"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>6} {:>22} {:>4}  {:>22} {:>22}  {:>22}  {:>22}",
                    r.points,
                    sig15(r.dk),
                    r.keep,
                    sig15(r.coefficient.re),
                    sig15(r.coefficient.im),
                    sig15(r.abs_error),
                    order(r)
                );
            }
            let _ = writeln!(out, "ok = {ok}");
            out
        }
    };
    Ok(RunOutput { text, ok })
}

#[derive(Serialize)]
struct CrosscheckJson<'a> {
    keep: usize,
    symmetric: &'a CommutatorReport,
    landau: &'a CommutatorReport,
    relative_difference: Fixed,
    ok: bool,
}

fn crosscheck(config: &RunConfig) -> Result<RunOutput, RunError> {
    let keep = config.keep;
    let j = config.cutoffs.degeneracy_cutoff().max(1);
    let symmetric = projected_commutator_xy(Cutoffs::new(keep, j)?, keep, &config.units)?;
    let grid = KGrid::for_units(config.grid_m, config.k_range, &config.units)?;
    let landau = projected_commutator_landau(grid, keep, &config.units)?;
    let rel = (landau.top_coefficient - symmetric.top_coefficient).norm()
        / symmetric.top_coefficient.norm();
    let ok = symmetric.ok && landau.ok && rel <= LANDAU_REL_TOL;
    let text = match config.output {
        OutputFormat::Json => to_json(&CrosscheckJson {
            keep,
            symmetric: &symmetric,
            landau: &landau,
            relative_difference: Fixed(rel),
            ok,
        })?,
        OutputFormat::Csv => csv_string(
            &[
                "keep",
                "sym_re",
                "sym_im",
                "landau_re",
                "landau_im",
                "relative_difference",
            ],
            vec![vec![
                keep.to_string(),
                sig15(symmetric.top_coefficient.re),
                sig15(symmetric.top_coefficient.im),
                sig15(landau.top_coefficient.re),
                sig15(landau.top_coefficient.im),
                sig15(rel),
            ]],
        )?,
        OutputFormat::Table => {
            let mut out = String::new();
            let row = |out: &mut String, name: &str, z: Complex64| {
                let _ = writeln!(out, "{name:<10} {:>22} {:>22}", sig15(z.re), sig15(z.im));
            };
            let _ = writeln!(out, "keep = {keep}, grid M = {}", config.grid_m);
            row(&mut out, "symmetric", symmetric.top_coefficient);
            row(&mut out, "landau", landau.top_coefficient);
            let _ = writeln!(out, "relative difference = {}", sig15(rel));
            let _ = writeln!(out, "ok = {ok}");
            out
        }
    };
    Ok(RunOutput { text, ok })
}

fn dump_matrix(config: &RunConfig) -> Result<RunOutput, RunError> {
    let c = config.cutoffs;
    let matrix: OperatorMatrix = match config.operator.as_str() {
        "commutator" => {
            let ops = SymmetricGaugeOperators::build(c, config.units)?;
            ops.x.commutator(&ops.y)?
        }
        "projected-commutator" => projected_commutator_matrix(c, config.keep, &config.units)?,
        name => SymmetricGaugeOperators::build(c, config.units)?
            .by_name(name)?
            .clone(),
    };
    let ok = matrix.is_finite();
    let text = match config.output {
        OutputFormat::Json => to_json(&matrix)?,
        OutputFormat::Csv => {
            let d = matrix.dim();
            csv_string(
                &["row", "col", "re", "im"],
                (0..d * d)
                    .map(|k| {
                        let z = matrix.get(k / d, k % d);
                        vec![
                            (k / d).to_string(),
                            (k % d).to_string(),
                            sig15(z.re),
                            sig15(z.im),
                        ]
                    })
                    .collect(),
            )?
        }
        OutputFormat::Table => {
            let mut out = String::new();
            if let Basis::Landau(c) = matrix.basis() {
                for (r, ri) in c.indices().enumerate() {
                    for (s, si) in c.indices().enumerate() {
                        let z = matrix.get(r, s);
                        if z.norm() > 0.0 {
                            let _ = writeln!(out, "{ri} {si}  {} {}", sig15(z.re), sig15(z.im));
                        }
                    }
                }
            }
            out
        }
    };
    Ok(RunOutput { text, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, UsageError> {
        let mut full = vec!["ncg"];
        full.extend_from_slice(args);
        RunConfig::from_cli(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn defaults() {
        let cfg = parse(&["--output", "table", "commutator"]).unwrap();
        assert_eq!(cfg.cutoffs, Cutoffs::new(4, 8).unwrap());
        assert_eq!(cfg.keep, 4);
        assert_eq!(cfg.units, PhysicalUnits::natural());
    }

    #[test]
    fn keep_above_cutoff_names_the_flag() {
        let err = parse(&["commutator", "--N", "2", "--keep", "3"]).unwrap_err();
        assert_eq!(err.flag, "--keep");
    }

    #[test]
    fn small_grid_names_the_flag() {
        let err = parse(&["crosscheck", "--grid-M", "2"]).unwrap_err();
        assert_eq!(err.flag, "--grid-M");
        // Grid size is irrelevant for commands without a grid.
        assert!(parse(&["sweep", "--grid-M", "2"]).is_ok());
    }

    #[test]
    fn bad_constant_names_the_flag() {
        let err = parse(&["spectrum", "--B", "-1"]).unwrap_err();
        assert_eq!(err.flag, "--B");
    }

    #[test]
    fn unit_overrides() {
        let cfg = parse(&["spectrum", "--B", "2", "--hbar", "3"]).unwrap();
        assert_eq!(cfg.units.field(), 2.0);
        assert_eq!(cfg.units.hbar(), 3.0);
    }

    #[test]
    fn unknown_operator_is_an_engine_error() {
        let cfg = parse(&["dump-matrix", "--operator", "zz", "--N", "1", "--J", "1"]).unwrap();
        assert!(matches!(
            run(&cfg),
            Err(RunError::Engine(Error::UnknownOperator(_)))
        ));
    }

    #[test]
    fn failing_checks_clear_ok() {
        // J = 0 leaves no interior degeneracy states to read the coefficient from.
        let cfg = parse(&["commutator", "--N", "2", "--J", "0", "--output", "json"]).unwrap();
        let out = run(&cfg).unwrap();
        assert!(!out.ok);
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["ok"], false);
    }
}
