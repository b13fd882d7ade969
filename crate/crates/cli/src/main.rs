//! `chordfan`: verification runs, swept-area estimates, P-grid sweeps and SVG figures.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or output
//! cannot be written, 2 on usage errors.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use chordfan::svg::{render_svg, RenderOptions};
use chordfan::sweep::{sweep_integral, swept_measure_multiplicity, AreaEstimate};
use chordfan::verify::{boundary_stress, format_f64, run_suite, to_json, MAX_SUITE_N};
use chordfan::{Circle, ChordFan, Error, SweptRegion, Vec2};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Tolerance for the 1024-segment polygon estimate, per unit of r².
const POLYGON_TOL: f64 = 1e-4;
/// Monte Carlo estimates must land within this many standard errors.
const MC_SIGMAS: f64 = 4.0;
/// Largest residual `sweep` accepts at any grid point.
const GRID_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(name = "chordfan", version, about = "Chord fans, swept areas and their numerical verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the randomized identity and area checks and emit a JSON report.
    Verify(VerifyArgs),
    /// Estimate the swept area four ways and compare with n·θ·r².
    Area(AreaArgs),
    /// Quadrature area over a polar grid of points P (CSV).
    Sweep(SweepArgs),
    /// Draw the swept region as a standalone SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, env = "CRUX_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    /// Append near-boundary checks with |P| = 0.999.
    #[arg(long)]
    stress: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Geometry {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    px: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    py: f64,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phase: f64,
    #[arg(long)]
    theta: f64,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Read --phase and --theta in degrees.
    #[arg(long)]
    degrees: bool,
}

impl Geometry {
    fn angles(&self) -> (f64, f64) {
        if self.degrees {
            (self.phase.to_radians(), self.theta.to_radians())
        } else {
            (self.phase, self.theta)
        }
    }

    fn circle(&self) -> Result<Circle, Error> {
        Circle::new(Vec2::ZERO, self.radius)
    }

    fn fan_at(&self, p: Vec2) -> Result<ChordFan, Error> {
        ChordFan::new(self.circle()?, p, self.n, self.angles().0)
    }

    fn fan(&self) -> Result<ChordFan, Error> {
        self.fan_at(Vec2::try_new(self.px, self.py)?)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct AreaArgs {
    #[command(flatten)]
    geometry: Geometry,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, env = "CRUX_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Arc subdivisions for the polygon estimate.
    #[arg(long, default_value_t = 1024)]
    segments: usize,
    /// Allow θ > π/n and report the measure counted with multiplicity.
    #[arg(long)]
    multiplicity: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    geometry: Geometry,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Number of grid radii, evenly spaced up to --r-max.
    #[arg(long, default_value_t = 8)]
    radii: usize,
    /// Number of grid angles per radius.
    #[arg(long, default_value_t = 16)]
    angles: usize,
    #[arg(long, default_value_t = 0.9)]
    r_max: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    geometry: Geometry,
    /// Label P, C and the chord endpoints.
    #[arg(long)]
    labels: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// How a command ended, mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    /// I/O trouble, or a computation that could not reach its tolerance.
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ToleranceNotMet { .. } => Failure::Runtime(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Runtime(format!("cannot write to stdout: {e}"))),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    if args.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    if args.n_min < 1 || args.n_max > MAX_SUITE_N || args.n_min > args.n_max {
        return Err(Failure::Usage(format!(
            "--n-min/--n-max must satisfy 1 <= n-min <= n-max <= {MAX_SUITE_N}"
        )));
    }
    let mut report = run_suite(args.trials, args.seed, args.n_min..=args.n_max)?;
    if args.stress {
        report.checks.extend(boundary_stress(args.seed));
    }
    for failure in report.failures() {
        eprintln!(
            "FAIL {} residual {:e} > {:e} at {:?}",
            failure.name, failure.residual, failure.tolerance, failure.config
        );
    }
    emit(args.output.as_ref(), &(report.to_json() + "\n"))?;
    Ok(report.passed())
}

#[derive(Serialize)]
struct EstimateRow {
    method: &'static str,
    value: f64,
    std_error: f64,
    samples: u64,
    residual: f64,
    tolerance: f64,
    passed: bool,
}

impl EstimateRow {
    fn new(estimate: AreaEstimate, expected: f64, tolerance: f64) -> Self {
        let residual = (estimate.value - expected).abs();
        EstimateRow {
            method: estimate.method.as_str(),
            value: estimate.value,
            std_error: estimate.std_error,
            samples: estimate.samples,
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }
}

#[derive(Serialize)]
struct AreaReport {
    px: f64,
    py: f64,
    n: usize,
    phase: f64,
    theta: f64,
    radius: f64,
    multiplicity: bool,
    expected: f64,
    estimates: Vec<EstimateRow>,
}

fn cmd_area(args: &AreaArgs) -> Outcome {
    let g = &args.geometry;
    let fan = g.fan()?;
    let theta = g.angles().1;
    let r2 = g.radius * g.radius;
    // rounding slack for comparisons against n·θ·r² at the tiling angle
    let slack = 1e-12 * r2 * (1.0 + fan.n() as f64 * theta.abs());

    let in_range = SweptRegion::new(fan, theta);
    let (expected, estimates) = match in_range {
        Ok(region) => {
            let expected = region.area_exact();
            let mc = region.area_monte_carlo(args.samples, args.seed)?;
            let rows = vec![
                EstimateRow::new(region.exact_estimate(), expected, slack),
                EstimateRow::new(region.area_quadrature(args.tol)?, expected, args.tol + slack),
                EstimateRow::new(mc, expected, MC_SIGMAS * mc.std_error + slack),
                EstimateRow::new(region.area_polygon(args.segments)?, expected, POLYGON_TOL * r2),
            ];
            (expected, rows)
        }
        Err(Error::ThetaOutOfRange { theta, max }) if !args.multiplicity || theta < 0.0 || !theta.is_finite() => {
            return Err(Failure::Usage(format!(
                "theta {theta} exceeds pi/n = {max}; pass --multiplicity for the measure counted with multiplicity"
            )));
        }
        Err(Error::ThetaOutOfRange { .. }) => {
            let measure = swept_measure_multiplicity(&fan, theta)?;
            let quad = sweep_integral(&fan, theta, args.tol)?;
            let exact = AreaEstimate {
                value: measure,
                std_error: 0.0,
                samples: 0,
                method: chordfan::AreaMethod::Exact,
            };
            let quad = AreaEstimate {
                value: quad,
                method: chordfan::AreaMethod::Quadrature,
                ..exact
            };
            let rows = vec![
                EstimateRow::new(exact, measure, slack),
                EstimateRow::new(quad, measure, args.tol + slack),
            ];
            (measure, rows)
        }
        Err(e) => return Err(e.into()),
    };

    let passed = estimates.iter().all(|e| e.passed);
    let text = match args.format {
        Format::Json => {
            let report = AreaReport {
                px: fan.p().x,
                py: fan.p().y,
                n: fan.n(),
                phase: fan.phase(),
                theta,
                radius: g.radius,
                multiplicity: args.multiplicity,
                expected,
                estimates,
            };
            to_json(&report) + "\n"
        }
        Format::Csv => {
            let mut out = String::from("method,value,std_error,samples,residual,tolerance,passed\n");
            for e in &estimates {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    e.method,
                    format_f64(e.value),
                    format_f64(e.std_error),
                    e.samples,
                    format_f64(e.residual),
                    format_f64(e.tolerance),
                    e.passed
                )
                .unwrap();
            }
            out
        }
    };
    emit(args.output.as_ref(), &text)?;
    Ok(passed)
}

fn cmd_sweep(args: &SweepArgs) -> Outcome {
    let g = &args.geometry;
    if args.radii == 0 || args.angles == 0 {
        return Err(Failure::Usage("--radii and --angles must be at least 1".into()));
    }
    if !(args.r_max >= 0.0 && args.r_max < g.radius) {
        return Err(Failure::Usage("--r-max must lie in [0, radius)".into()));
    }
    let theta = g.angles().1;
    let mut out = String::from("p_x,p_y,n,theta,area_quadrature,abs_residual_vs_ntheta\n");
    let mut passed = true;
    for i in 1..=args.radii {
        let r = args.r_max * i as f64 / args.radii as f64;
        for j in 0..args.angles {
            let p = Vec2::from_angle(2.0 * PI * j as f64 / args.angles as f64) * r;
            let region = SweptRegion::new(g.fan_at(p)?, theta)?;
            let area = region.area_quadrature(args.tol)?.value;
            let residual = (area - region.area_exact()).abs();
            passed &= residual <= GRID_TOL;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                format_f64(p.x),
                format_f64(p.y),
                g.n,
                format_f64(theta),
                format_f64(area),
                format_f64(residual)
            )
            .unwrap();
        }
    }
    emit(args.output.as_ref(), &out)?;
    Ok(passed)
}

fn cmd_render(args: &RenderArgs) -> Outcome {
    let g = &args.geometry;
    let region = SweptRegion::new(g.fan()?, g.angles().1)?;
    let svg = render_svg(&region, RenderOptions { labels: args.labels });
    emit(args.output.as_ref(), &svg)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Area(args) => cmd_area(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Render(args) => cmd_render(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
