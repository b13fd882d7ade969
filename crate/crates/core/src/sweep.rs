//! Area swept when every chord of a fan turns counterclockwise about `P`.
//!
//! The exact law is `n·θ·r²`. Three independent estimates check it: adaptive
//! quadrature of the sweep rate, Monte Carlo sampling of the membership
//! predicate, and a shoelace sum over polygonal sectors.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::ChordFan;
use crate::geom::{line_circle_roots, wrap_angle, Vec2};
use crate::quad::{adaptive_simpson, MAX_INTERVALS};

/// Accepted disk samples drawn from each ChaCha stream.
pub const MONTE_CARLO_BLOCK: u64 = 8192;

/// Name of the Monte Carlo generator, as recorded in reports.
pub const GENERATOR_NAME: &str = "ChaCha8Rng";

/// Tolerance used by [`sweep_additivity_residual`] for each quadrature run.
pub const ADDITIVITY_QUAD_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaMethod {
    Exact,
    Quadrature,
    MonteCarlo,
    Polygon,
}

impl AreaMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            AreaMethod::Exact => "exact",
            AreaMethod::Quadrature => "quadrature",
            AreaMethod::MonteCarlo => "monte_carlo",
            AreaMethod::Polygon => "polygon",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AreaEstimate {
    pub value: f64,
    /// Zero for deterministic methods.
    pub std_error: f64,
    /// Disk samples drawn; zero unless Monte Carlo.
    pub samples: u64,
    pub method: AreaMethod,
}

impl AreaEstimate {
    fn deterministic(value: f64, method: AreaMethod) -> Self {
        AreaEstimate {
            value,
            std_error: 0.0,
            samples: 0,
            method,
        }
    }
}

/// A fan together with a rotation angle `θ ∈ [0, π/n]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweptRegion {
    fan: ChordFan,
    theta: f64,
}

impl SweptRegion {
    pub fn new(fan: ChordFan, theta: f64) -> Result<Self> {
        let max = fan.spacing();
        if !(theta.is_finite() && (0.0..=max).contains(&theta)) {
            return Err(Error::ThetaOutOfRange { theta, max });
        }
        Ok(SweptRegion { fan, theta })
    }

    pub fn fan(&self) -> &ChordFan {
        &self.fan
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `n·θ·r²`.
    pub fn area_exact(&self) -> f64 {
        self.fan.n() as f64 * self.theta * self.fan.circle().radius().powi(2)
    }

    pub fn exact_estimate(&self) -> AreaEstimate {
        AreaEstimate::deterministic(self.area_exact(), AreaMethod::Exact)
    }

    /// Whether `x` lies in one of the `2n` swept sectors.
    ///
    /// Both edges of each angular band count as inside.
    pub fn contains(&self, x: Vec2) -> bool {
        let circle = self.fan.circle();
        if (x - circle.center()).norm() >= circle.radius() {
            return false;
        }
        let d = x - self.fan.p();
        if d == Vec2::ZERO {
            return self.theta > 0.0;
        }
        wrap_angle(d.angle() - self.fan.phase(), self.fan.spacing()) <= self.theta
    }

    /// Integrates the sweep rate over `[phase, phase + θ]` by adaptive Simpson.
    pub fn area_quadrature(&self, tol: f64) -> Result<AreaEstimate> {
        let value = sweep_integral(&self.fan, self.theta, tol)?;
        Ok(AreaEstimate::deterministic(value, AreaMethod::Quadrature))
    }

    /// Rejection-samples `samples` points uniformly in the disk and counts hits.
    ///
    /// Samples are drawn in blocks of [`MONTE_CARLO_BLOCK`]; block `i` uses
    /// stream `i` of a ChaCha8 generator seeded with `seed`, so the result is
    /// the same however the blocks are scheduled across threads.
    pub fn area_monte_carlo(&self, samples: u64, seed: u64) -> Result<AreaEstimate> {
        if samples == 0 {
            return Err(Error::InvalidInput("Monte Carlo needs at least one sample".into()));
        }
        let circle = *self.fan.circle();
        let (center, r) = (circle.center(), circle.radius());
        let blocks = samples.div_ceil(MONTE_CARLO_BLOCK);

        let hits: u64 = (0..blocks)
            .into_par_iter()
            .map(|block| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(block);
                let quota = MONTE_CARLO_BLOCK.min(samples - block * MONTE_CARLO_BLOCK);
                let mut drawn = 0;
                let mut hits = 0;
                while drawn < quota {
                    let u = 2.0 * rng.random::<f64>() - 1.0;
                    let v = 2.0 * rng.random::<f64>() - 1.0;
                    if u * u + v * v >= 1.0 {
                        continue;
                    }
                    drawn += 1;
                    if self.contains(center + Vec2::new(u, v) * r) {
                        hits += 1;
                    }
                }
                hits
            })
            .sum();

        let n = samples as f64;
        let fraction = hits as f64 / n;
        let disk = circle.area();
        Ok(AreaEstimate {
            value: disk * fraction,
            std_error: disk * (fraction * (1.0 - fraction) / n).sqrt(),
            samples,
            method: AreaMethod::MonteCarlo,
        })
    }

    /// Sum of shoelace areas of the `2n` sectors, each arc cut into `segments_per_arc` chords.
    pub fn area_polygon(&self, segments_per_arc: usize) -> Result<AreaEstimate> {
        if segments_per_arc == 0 {
            return Err(Error::InvalidInput("segments_per_arc must be at least 1".into()));
        }
        let value = self
            .sector_polygons(segments_per_arc)
            .iter()
            .map(|poly| shoelace_area(poly))
            .sum();
        Ok(AreaEstimate::deterministic(value, AreaMethod::Polygon))
    }

    /// The `2n` swept sectors, apex first.
    pub fn sectors(&self) -> Vec<Sector> {
        if self.theta == 0.0 {
            return Vec::new();
        }
        let circle = self.fan.circle();
        let p = self.fan.p();
        (0..2 * self.fan.n())
            .map(|ray| {
                let start_dir = self.fan.direction_angle(0) + ray as f64 * self.fan.spacing();
                let start = ray_endpoint(&self.fan, start_dir);
                let end = ray_endpoint(&self.fan, start_dir + self.theta);
                let start_angle = (start - circle.center()).angle();
                let mut sweep = wrap_angle((end - circle.center()).angle() - start_angle, 2.0 * PI);
                // a vanishing arc can wrap to a full turn under rounding
                if sweep > 2.0 * PI - 1e-12 {
                    sweep = 0.0;
                }
                Sector {
                    apex: p,
                    start,
                    end,
                    start_angle,
                    arc_angle: sweep,
                }
            })
            .collect()
    }

    /// Each sector as a closed polygon `[apex, arc points...]`.
    pub fn sector_polygons(&self, segments_per_arc: usize) -> Vec<Vec<Vec2>> {
        let circle = self.fan.circle();
        self.sectors()
            .iter()
            .map(|s| {
                let mut poly = Vec::with_capacity(segments_per_arc + 2);
                poly.push(s.apex);
                poly.push(s.start);
                for i in 1..segments_per_arc {
                    let t = i as f64 / segments_per_arc as f64;
                    poly.push(circle.point_at(s.start_angle + t * s.arc_angle));
                }
                poly.push(s.end);
                poly
            })
            .collect()
    }
}

/// One swept piece: apex `P`, and the circular arc its ray traced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    pub apex: Vec2,
    pub start: Vec2,
    pub end: Vec2,
    /// Central angle of `start`.
    pub start_angle: f64,
    /// Counterclockwise central angle from `start` to `end`.
    pub arc_angle: f64,
}

fn ray_endpoint(fan: &ChordFan, angle: f64) -> Vec2 {
    let dir = Vec2::from_angle(angle);
    let (_, t_plus) = line_circle_roots(fan.circle(), fan.p(), dir).expect("fan invariants hold");
    fan.p() + dir * t_plus
}

/// Signed area, positive for counterclockwise vertex order.
pub fn shoelace_area(poly: &[Vec2]) -> f64 {
    let n = poly.len();
    0.5 * (0..n).map(|i| poly[i].cross(poly[(i + 1) % n])).sum::<f64>()
}

/// `½ Σ (t₋² + t₊²)` over the fan turned to start at `angle`.
fn half_squared_ray_sum(fan: &ChordFan, angle: f64) -> f64 {
    let spacing = fan.spacing();
    0.5 * (0..fan.n())
        .map(|k| {
            let dir = Vec2::from_angle(angle + k as f64 * spacing);
            let (lo, hi) = line_circle_roots(fan.circle(), fan.p(), dir).expect("fan invariants hold");
            lo * lo + hi * hi
        })
        .sum::<f64>()
}

/// Instantaneous `dA/dθ`: half the fan's sum of squared distances.
///
/// Constant at `n·r²` for `n ≥ 2`; for a single chord it depends on the phase.
pub fn sweep_rate(fan: &ChordFan) -> f64 {
    0.5 * fan.sum_squared_distances()
}

/// Area swept counted with multiplicity: `n·θ·r²` for any `θ ≥ 0`.
pub fn swept_measure_multiplicity(fan: &ChordFan, theta: f64) -> Result<f64> {
    if !(theta.is_finite() && theta >= 0.0) {
        return Err(Error::InvalidInput(format!("theta must be finite and non-negative, got {theta}")));
    }
    Ok(fan.n() as f64 * theta * fan.circle().radius().powi(2))
}

/// `∫ dA/dθ` from the fan's phase over `theta` radians, by adaptive Simpson.
///
/// No range restriction on `theta`; beyond `π/n` this is the multiplicity measure.
pub fn sweep_integral(fan: &ChordFan, theta: f64, tol: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::InvalidInput(format!("theta must be finite, got {theta}")));
    }
    if theta == 0.0 {
        return Ok(0.0);
    }
    let start = fan.phase();
    let q = adaptive_simpson(
        |phi| half_squared_ray_sum(fan, phi),
        start,
        start + theta,
        tol,
        MAX_INTERVALS,
    )?;
    Ok(q.value)
}

/// Closed form of [`sweep_integral`].
///
/// `n·θ·r²` for `n ≥ 2`. A single chord adds the integral of its
/// phase-dependent term `|q|²·cos 2β`.
pub fn sweep_integral_closed_form(fan: &ChordFan, theta: f64) -> f64 {
    let r2 = fan.circle().radius().powi(2);
    let base = fan.n() as f64 * theta * r2;
    if fan.n() >= 2 {
        return base;
    }
    let q = fan.p() - fan.circle().center();
    let start = fan.phase() - q.angle();
    base + 0.5 * q.norm_sq() * ((2.0 * (start + theta)).sin() - (2.0 * start).sin())
}

/// `|A(φ₀, θ₁+θ₂) - A(φ₀, θ₁) - A(φ₀+θ₁, θ₂)|` with each area by quadrature.
pub fn sweep_additivity_residual(fan: &ChordFan, theta1: f64, theta2: f64) -> Result<f64> {
    let max = fan.spacing();
    if !(theta1 >= 0.0 && theta2 >= 0.0) {
        return Err(Error::InvalidInput("sweep angles must be non-negative".into()));
    }
    if theta1 + theta2 > max {
        return Err(Error::ThetaOutOfRange {
            theta: theta1 + theta2,
            max,
        });
    }
    let whole = sweep_integral(fan, theta1 + theta2, ADDITIVITY_QUAD_TOL)?;
    let first = sweep_integral(fan, theta1, ADDITIVITY_QUAD_TOL)?;
    let second = sweep_integral(&fan.with_phase(fan.phase() + theta1), theta2, ADDITIVITY_QUAD_TOL)?;
    Ok((whole - first - second).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Circle;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn region(p: (f64, f64), n: usize, phase: f64, theta: f64) -> SweptRegion {
        SweptRegion::new(ChordFan::unit(Vec2::new(p.0, p.1), n, phase).unwrap(), theta).unwrap()
    }

    #[test]
    fn exact_area_examples() {
        assert_abs_diff_eq!(region((0.5, 0.0), 2, 0.0, 0.3).area_exact(), 0.6, epsilon = 1e-15);
        assert_eq!(region((0.2, 0.1), 4, 1.0, 0.0).area_exact(), 0.0);
        assert_abs_diff_eq!(region((0.0, 0.0), 5, 0.0, PI / 5.0).area_exact(), PI, epsilon = 1e-15);
    }

    #[test]
    fn theta_range_is_enforced() {
        let fan = ChordFan::unit(Vec2::new(0.1, 0.0), 3, 0.0).unwrap();
        assert!(matches!(
            SweptRegion::new(fan, PI / 3.0 + 1e-6),
            Err(Error::ThetaOutOfRange { .. })
        ));
        assert!(SweptRegion::new(fan, -0.1).is_err());
        assert!(SweptRegion::new(fan, f64::NAN).is_err());
        assert!(SweptRegion::new(fan, PI / 3.0).is_ok());
    }

    #[test]
    fn multiplicity_examples() {
        let fan = ChordFan::unit(Vec2::new(0.5, 0.0), 2, 0.0).unwrap();
        assert_abs_diff_eq!(swept_measure_multiplicity(&fan, PI).unwrap(), 2.0 * PI, epsilon = 1e-15);
        // twice the disk, integrating the rate over a half turn
        assert_abs_diff_eq!(sweep_integral(&fan, PI, 1e-10).unwrap(), 2.0 * PI, epsilon = 1e-9);
        assert_eq!(swept_measure_multiplicity(&fan, 0.0).unwrap(), 0.0);
        let fan = ChordFan::unit(Vec2::new(0.5, 0.0), 3, 0.0).unwrap();
        let m = swept_measure_multiplicity(&fan, 0.1).unwrap();
        assert_abs_diff_eq!(m, 0.3, epsilon = 1e-15);
        assert_eq!(m, SweptRegion::new(fan, 0.1).unwrap().area_exact());
        assert!(swept_measure_multiplicity(&fan, -1.0).is_err());
    }

    #[test]
    fn sweep_rate_examples() {
        let fan = ChordFan::unit(Vec2::new(0.5, 0.0), 2, 0.0).unwrap();
        assert_abs_diff_eq!(sweep_rate(&fan), 2.0, epsilon = 1e-12);
        let fan = ChordFan::unit(Vec2::ZERO, 6, 0.0).unwrap();
        assert_abs_diff_eq!(sweep_rate(&fan), 6.0, epsilon = 1e-12);
        for phase in [0.0, 0.5, 2.5] {
            let fan = ChordFan::unit(Vec2::new(0.7, -0.1), 4, phase).unwrap();
            assert_abs_diff_eq!(sweep_rate(&fan), 4.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn contains_examples() {
        let r = region((0.0, 0.0), 2, 0.0, 0.5);
        assert!(r.contains(Vec2::from_angle(0.25) * 0.5));
        assert!(!r.contains(Vec2::new(2.0, 0.0)));
        assert!(!r.contains(Vec2::from_angle(0.75) * 0.5));
        // opposite arm of the same chord
        assert!(r.contains(Vec2::from_angle(PI + 0.25) * 0.5));
        // second chord's arms
        assert!(r.contains(Vec2::from_angle(PI / 2.0 + 0.1) * 0.9));

        let r = region((0.5, 0.0), 2, 0.0, 0.3);
        let x = Vec2::new(0.5 + 0.4 * 0.15f64.cos(), 0.4 * 0.15f64.sin());
        assert!(x.norm() < 1.0);
        assert!(r.contains(x));
    }

    #[test]
    fn apex_membership() {
        let r = region((0.3, 0.2), 3, 0.4, 0.1);
        assert!(r.contains(Vec2::new(0.3, 0.2)));
        let r = region((0.3, 0.2), 3, 0.4, 0.0);
        assert!(!r.contains(Vec2::new(0.3, 0.2)));
    }

    #[test]
    fn quadrature_examples() {
        let q = region((0.5, 0.0), 2, 0.0, 0.3).area_quadrature(1e-10).unwrap();
        assert_eq!(q.method, AreaMethod::Quadrature);
        assert_eq!(q.std_error, 0.0);
        assert_abs_diff_eq!(q.value, 0.6, epsilon = 1e-10);
        assert_eq!(region((0.5, 0.0), 2, 0.0, 0.0).area_quadrature(1e-10).unwrap().value, 0.0);
        let q = region((0.2, 0.6), 3, 0.0, 0.4).area_quadrature(1e-9).unwrap();
        assert_abs_diff_eq!(q.value, 1.2, epsilon = 1e-9);
    }

    #[test]
    fn single_chord_quadrature_matches_closed_form() {
        for (p, phase, theta) in [((0.5, 0.0), 0.0, 0.7), ((-0.2, 0.8), 1.3, 2.0), ((0.9, 0.1), 2.9, PI)] {
            let fan = ChordFan::unit(Vec2::new(p.0, p.1), 1, phase).unwrap();
            let q = sweep_integral(&fan, theta, 1e-11).unwrap();
            assert_abs_diff_eq!(q, sweep_integral_closed_form(&fan, theta), epsilon = 1e-10);
        }
        // a half turn of one chord tiles the disk
        let fan = ChordFan::unit(Vec2::new(0.6, 0.3), 1, 0.8).unwrap();
        assert_abs_diff_eq!(sweep_integral_closed_form(&fan, PI), PI, epsilon = 1e-14);
    }

    #[test]
    fn monte_carlo_examples() {
        let r = region((0.5, 0.0), 2, 0.0, 0.3);
        for seed in [0, 1, 99] {
            let mc = r.area_monte_carlo(1_000_000, seed).unwrap();
            assert_eq!(mc.samples, 1_000_000);
            assert!((mc.std_error - 1.2e-3).abs() < 1e-4, "{}", mc.std_error);
            assert!((mc.value - 0.6).abs() <= 3.0 * mc.std_error, "{mc:?}");
        }

        let zero = region((0.5, 0.0), 2, 0.0, 0.0).area_monte_carlo(100_000, 3).unwrap();
        assert_eq!(zero.value, 0.0);
        assert_eq!(zero.std_error, 0.0);

        let full = region((0.5, 0.0), 3, 0.0, PI / 3.0).area_monte_carlo(100_000, 3).unwrap();
        assert_abs_diff_eq!(full.value, PI, epsilon = 1e-15);
        assert!(region((0.5, 0.0), 2, 0.0, 0.3).area_monte_carlo(0, 0).is_err());
    }

    #[test]
    fn monte_carlo_is_seed_deterministic() {
        let r = region((0.1, -0.3), 4, 0.2, 0.5);
        let a = r.area_monte_carlo(50_000, 11).unwrap();
        let b = r.area_monte_carlo(50_000, 11).unwrap();
        let c = r.area_monte_carlo(50_000, 12).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.value, c.value);
        // a partial final block
        let d = r.area_monte_carlo(MONTE_CARLO_BLOCK + 17, 11).unwrap();
        assert_eq!(d.samples, MONTE_CARLO_BLOCK + 17);
    }

    #[test]
    fn polygon_examples() {
        let coarse = region((0.0, 0.0), 2, 0.0, 0.5).area_polygon(1).unwrap();
        // four isosceles triangles with apex angle 0.5
        assert_abs_diff_eq!(coarse.value, 2.0 * 0.5f64.sin(), epsilon = 1e-14);
        assert!(coarse.value < 1.0);

        let r = region((0.5, 0.0), 2, 0.0, 0.3);
        let fine = r.area_polygon(1024).unwrap();
        assert_abs_diff_eq!(fine.value, 0.6, epsilon = 1e-5);
        assert_eq!(region((0.5, 0.0), 2, 0.0, 0.0).area_polygon(8).unwrap().value, 0.0);
        assert!(r.area_polygon(0).is_err());
    }

    #[test]
    fn polygon_converges_quadratically() {
        let r = region((0.4, 0.3), 3, 0.7, 0.6);
        let err = |m| (r.area_polygon(m).unwrap().value - r.area_exact()).abs();
        let ratio = err(64) / err(128);
        assert!((3.8..4.2).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn sectors_tile_the_disk() {
        for n in 1..=6 {
            let r = region((0.35, -0.2), n, 0.3, PI / n as f64);
            let arcs: f64 = r.sectors().iter().map(|s| s.arc_angle).sum();
            assert_abs_diff_eq!(arcs, 2.0 * PI, epsilon = 1e-12);
        }
    }

    #[test]
    fn additivity_examples() {
        let fan = ChordFan::unit(Vec2::new(0.5, 0.0), 2, 0.0).unwrap();
        assert_eq!(sweep_additivity_residual(&fan, 0.0, 0.0).unwrap(), 0.0);
        assert!(sweep_additivity_residual(&fan, 0.2, 0.1).unwrap() <= 5e-9);
        let fan = ChordFan::unit(Vec2::new(-0.4, 0.3), 4, 0.0).unwrap();
        assert!(sweep_additivity_residual(&fan, 0.3, PI / 4.0 - 0.3).unwrap() <= 5e-9);
        assert!(sweep_additivity_residual(&fan, 0.5, 0.5).is_err());
        let single = ChordFan::unit(Vec2::new(0.5, 0.2), 1, 0.4).unwrap();
        assert!(sweep_additivity_residual(&single, 1.0, 1.5).unwrap() <= 5e-9);
    }

    #[test]
    fn tiling_membership() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=5 {
            let r = region((0.4, 0.5), n, 0.9, PI / n as f64);
            for _ in 0..20_000 {
                let x = Vec2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                if x.norm() < 1.0 {
                    assert!(r.contains(x));
                }
            }
        }
    }

    #[test]
    fn scaled_circle() {
        let circle = Circle::new(Vec2::new(1.0, -2.0), 3.0).unwrap();
        let fan = ChordFan::new(circle, Vec2::new(2.0, -1.0), 3, 0.2).unwrap();
        let r = SweptRegion::new(fan, 0.5).unwrap();
        assert_abs_diff_eq!(r.area_exact(), 13.5, epsilon = 1e-14);
        assert_abs_diff_eq!(r.area_quadrature(1e-9).unwrap().value, 13.5, epsilon = 1e-9);
        assert_abs_diff_eq!(r.area_polygon(1024).unwrap().value, 13.5, epsilon = 1e-3);
        let mc = r.area_monte_carlo(200_000, 1).unwrap();
        assert!((mc.value - 13.5).abs() <= 4.0 * mc.std_error);
    }

    fn random_region() -> impl Strategy<Value = (ChordFan, f64)> {
        (0.0..0.95f64, -PI..PI, 2usize..=8, 0.0..PI, 0.0..1.0f64).prop_map(|(r, a, n, phase, f)| {
            let fan = ChordFan::unit(Vec2::from_angle(a) * r, n, phase).unwrap();
            (fan, f * fan.spacing())
        })
    }

    proptest! {
        #[test]
        fn monotone_in_theta((fan, theta) in random_region(), shrink in 0.0..1.0f64, x in (-1.0..1.0f64, -1.0..1.0f64)) {
            let big = SweptRegion::new(fan, theta).unwrap();
            let small = SweptRegion::new(fan, theta * shrink).unwrap();
            let x = Vec2::new(x.0, x.1);
            prop_assert!(!small.contains(x) || big.contains(x));
        }

        #[test]
        fn contains_rotation_equivariant((fan, theta) in random_region(), spin in -PI..PI, x in (-1.0..1.0f64, -1.0..1.0f64)) {
            let x = Vec2::new(x.0, x.1);
            let region = SweptRegion::new(fan, theta).unwrap();
            let rotated_fan = ChordFan::unit(fan.p().rotate(spin), fan.n(), fan.phase() + spin).unwrap();
            let rotated = SweptRegion::new(rotated_fan, theta).unwrap();
            // skip points within rounding distance of a band edge
            let rel = wrap_angle((x - fan.p()).angle() - fan.phase(), fan.spacing());
            let edge = rel.min((rel - theta).abs()).min(fan.spacing() - rel);
            prop_assume!(edge > 1e-9 && (x.norm() - 1.0).abs() > 1e-9);
            prop_assert_eq!(region.contains(x), rotated.contains(x.rotate(spin)));
        }

        #[test]
        fn area_is_independent_of_p((fan, theta) in random_region()) {
            let region = SweptRegion::new(fan, theta).unwrap();
            let q = region.area_quadrature(1e-9).unwrap().value;
            prop_assert!((q - fan.n() as f64 * theta).abs() <= 1e-8);
        }
    }
}
