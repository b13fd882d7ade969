//! Randomized verification of every identity and area law, collected into a report.

use std::f64::consts::PI;
use std::io;
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::ser::Formatter;

use crate::error::{Error, Result};
use crate::fan::{diameter_fan, doubled_cos_squared_sum, roots_of_unity_cos_sum, ChordFan};
use crate::geom::{Circle, Vec2};
use crate::sweep::{
    sweep_additivity_residual, sweep_integral, sweep_integral_closed_form, sweep_rate, GENERATOR_NAME,
};

/// Largest chord count a suite may draw.
pub const MAX_SUITE_N: usize = 64;

/// Radius cap for randomly drawn points.
pub const TRIAL_RADIUS: f64 = 0.95;

/// Distance from the center used by [`boundary_stress`].
pub const STRESS_RADIUS: f64 = 0.999;

pub mod tolerance {
    pub const SQUARED_SUM: f64 = 1e-10;
    pub const SWEEP_RATE: f64 = 1e-10;
    /// Tolerance requested from the quadrature itself.
    pub const QUADRATURE_REQUEST: f64 = 1e-9;
    pub const QUADRATURE: f64 = 1e-8;
    pub const MIDPOINT: f64 = 1e-12;
    pub const PAIRING: f64 = 1e-12;
    pub const EXPANSION: f64 = 1e-10;
    /// Scaled by `n`.
    pub const COS_SUM_PER_N: f64 = 1e-12;
    pub const ADDITIVITY: f64 = 5e-9;
    pub const STRESS: f64 = 1e-7;
}

/// Parameters of the configuration a check ran on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheckConfig {
    pub px: f64,
    pub py: f64,
    pub n: usize,
    pub phase: f64,
    pub theta: f64,
}

impl CheckConfig {
    fn of(fan: &ChordFan, theta: f64) -> Self {
        CheckConfig {
            px: fan.p().x,
            py: fan.p().y,
            n: fan.n(),
            phase: fan.phase(),
            theta,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
    pub config: CheckConfig,
}

impl CheckResult {
    /// A failed computation becomes an infinite residual.
    fn new(name: &str, residual: Result<f64>, tolerance: f64, config: CheckConfig) -> Self {
        let residual = residual.unwrap_or(f64::INFINITY);
        CheckResult {
            name: name.to_owned(),
            passed: residual <= tolerance,
            residual,
            tolerance,
            config,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub trials: usize,
    pub generator: String,
    pub checks: Vec<CheckResult>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Single-line JSON with fixed field order and 17 significant digits per float.
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// Compact JSON in struct field order, every float written with 17 significant digits.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SignificantDigits);
    value.serialize(&mut ser).expect("serializing plain data cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// A float with 17 significant digits, as used in JSON and CSV output.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// Writes every float as `d.dddddddddddddddde±x`; non-finite values clamp to `±f64::MAX`.
struct SignificantDigits;

impl Formatter for SignificantDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        let value = if value.is_nan() {
            f64::MAX
        } else {
            value.clamp(f64::MIN, f64::MAX)
        };
        writer.write_all(format_f64(value).as_bytes())
    }
}

/// The eight checks run on each drawn configuration.
struct Trial {
    fan: ChordFan,
    theta: f64,
    split: f64,
}

impl Trial {
    fn draw(rng: &mut ChaCha8Rng, n_range: &RangeInclusive<usize>) -> Self {
        let radius = TRIAL_RADIUS * rng.random::<f64>().sqrt();
        let p = Vec2::from_angle(rng.random_range(-PI..PI)) * radius;
        let n = rng.random_range(n_range.clone());
        let phase = rng.random_range(0.0..PI);
        let fan = ChordFan::unit(p, n, phase).expect("drawn points are interior");
        let theta = rng.random::<f64>() * fan.spacing();
        let split = rng.random::<f64>();
        Trial { fan, theta, split }
    }

    fn checks(&self) -> Vec<CheckResult> {
        use tolerance::*;
        let fan = &self.fan;
        let n = fan.n();
        let config = CheckConfig::of(fan, self.theta);
        // n = 1 is not constant in the phase; its closed forms carry the phase term
        let expected_sum = fan.sum_squared_closed_form();
        let anchored = diameter_fan(*fan.circle(), fan.p(), n);
        let anchored_config = anchored
            .as_ref()
            .map(|f| CheckConfig::of(f, self.theta))
            .unwrap_or(config);
        let theta1 = self.split * self.theta;
        let theta2 = self.theta - theta1;
        // Σcos(2πk/n) is 0 for n ≥ 2 and 1 for n = 1; Σ2cos²(kπ/n) = n + that
        let cos_expected = if n == 1 { 1.0 } else { 0.0 };

        vec![
            CheckResult::new(
                "sum_squared_distances",
                Ok((fan.sum_squared_distances() - expected_sum).abs()),
                SQUARED_SUM,
                config,
            ),
            CheckResult::new(
                "sweep_rate",
                Ok((sweep_rate(fan) - 0.5 * expected_sum).abs()),
                SWEEP_RATE,
                config,
            ),
            CheckResult::new(
                "area_quadrature",
                sweep_integral(fan, self.theta, QUADRATURE_REQUEST)
                    .map(|q| (q - sweep_integral_closed_form(fan, self.theta)).abs()),
                QUADRATURE,
                config,
            ),
            CheckResult::new(
                "midpoint_identity",
                anchored.as_ref().map_err(Clone::clone).map(ChordFan::midpoint_identity_residual),
                MIDPOINT * fan.circle().radius(),
                anchored_config,
            ),
            CheckResult::new(
                "diameter_pairing",
                anchored
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(ChordFan::diameter_pairing_residual),
                PAIRING * fan.circle().radius(),
                anchored_config,
            ),
            CheckResult::new(
                "expansion_identity",
                anchored
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(ChordFan::expansion_identity_residual),
                EXPANSION,
                anchored_config,
            ),
            CheckResult::new(
                "roots_of_unity_cos_sum",
                Ok((roots_of_unity_cos_sum(n) - cos_expected)
                    .abs()
                    .max((doubled_cos_squared_sum(n) - (n as f64 + cos_expected)).abs())),
                COS_SUM_PER_N * n as f64,
                config,
            ),
            CheckResult::new(
                "sweep_additivity",
                sweep_additivity_residual(fan, theta1, theta2),
                ADDITIVITY,
                config,
            ),
        ]
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Run `trials` randomized configurations with chord counts drawn from `n_range`.
///
/// Trial `i` draws from stream `i` of a ChaCha8 generator seeded with `seed`,
/// so reports do not depend on how trials are scheduled. Failed checks are
/// recorded in the report; only invalid arguments are errors.
pub fn run_suite(trials: usize, seed: u64, n_range: RangeInclusive<usize>) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::InvalidInput("trials must be at least 1".into()));
    }
    if n_range.is_empty() || *n_range.start() < 1 || *n_range.end() > MAX_SUITE_N {
        return Err(Error::InvalidInput(format!(
            "chord-count range {}..={} must lie within 1..={MAX_SUITE_N}",
            n_range.start(),
            n_range.end()
        )));
    }
    let started = Instant::now();
    let per_trial: Vec<Vec<CheckResult>> = (0..trials)
        .into_par_iter()
        .map(|i| Trial::draw(&mut trial_rng(seed, i), &n_range).checks())
        .collect();

    Ok(VerificationReport {
        seed,
        trials,
        generator: GENERATOR_NAME.to_owned(),
        checks: per_trial.into_iter().flatten().collect(),
        wall_time_ms: started.elapsed().as_millis() as u64,
    })
}

/// Squared-sum and quadrature checks with `P` at [`STRESS_RADIUS`] from the center.
///
/// Near-boundary rays are nearly degenerate, so the tolerance is
/// [`tolerance::STRESS`].
pub fn boundary_stress(seed: u64) -> Vec<CheckResult> {
    let mut rng = trial_rng(seed, usize::MAX);
    [2usize, 3, 5, 8]
        .iter()
        .flat_map(|&n| {
            let p = Vec2::from_angle(rng.random_range(-PI..PI)) * STRESS_RADIUS;
            let fan = ChordFan::new(Circle::unit(), p, n, rng.random_range(0.0..PI))
                .expect("stress point is interior");
            let theta = rng.random::<f64>() * fan.spacing();
            let config = CheckConfig::of(&fan, theta);
            [
                CheckResult::new(
                    "stress_sum_squared_distances",
                    Ok((fan.sum_squared_distances() - 2.0 * n as f64).abs()),
                    tolerance::STRESS,
                    config,
                ),
                CheckResult::new(
                    "stress_area_quadrature",
                    sweep_integral(&fan, theta, 1e-9).map(|q| (q - n as f64 * theta).abs()),
                    tolerance::STRESS,
                    config,
                ),
            ]
        })
        .collect()
}
