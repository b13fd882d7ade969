//! Fans of `n` chords through one interior point, spaced `π/n` apart.
//!
//! Chord `k` (1-indexed) points along `phase + (k-1)·π/n`. Its endpoint on the
//! negative side of that direction is `A_k`, the other is `B_k`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{line_circle_roots, wrap_angle, Circle, Vec2};

/// Angular tolerance, in radians, for deciding that chord 1 is a diameter.
pub const DIAMETER_ANGLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordFan {
    circle: Circle,
    p: Vec2,
    n: usize,
    phase: f64,
}

/// One chord of a fan, with its endpoints seen from the fan's point `P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    /// Endpoint `A_k` on the negative side of the chord direction.
    pub a: Vec2,
    /// Endpoint `B_k`.
    pub b: Vec2,
    /// `|PA_k|`
    pub dist_a: f64,
    /// `|PB_k|`
    pub dist_b: f64,
    /// `C_k`, the midpoint of the chord.
    pub midpoint: Vec2,
    /// Unit direction from `A_k` towards `B_k`.
    pub direction: Vec2,
}

impl ChordFan {
    /// `phase` is reduced modulo π since chords are undirected.
    pub fn new(circle: Circle, p: Vec2, n: usize, phase: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a fan needs at least one chord".into()));
        }
        if !phase.is_finite() {
            return Err(Error::InvalidInput(format!("phase must be finite, got {phase}")));
        }
        circle.check_interior(p)?;
        Ok(ChordFan {
            circle,
            p,
            n,
            phase: wrap_angle(phase, PI),
        })
    }

    /// Fan on the unit circle.
    pub fn unit(p: Vec2, n: usize, phase: f64) -> Result<Self> {
        ChordFan::new(Circle::unit(), p, n, phase)
    }

    pub fn circle(&self) -> &Circle {
        &self.circle
    }

    pub fn p(&self) -> Vec2 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// Angular spacing between successive chords.
    pub fn spacing(&self) -> f64 {
        PI / self.n as f64
    }

    /// The same fan with every chord turned to start at `phase`.
    pub fn with_phase(&self, phase: f64) -> Self {
        ChordFan {
            phase: wrap_angle(phase, PI),
            ..*self
        }
    }

    /// Direction angle of chord `index` (0-based).
    pub fn direction_angle(&self, index: usize) -> f64 {
        self.phase + index as f64 * self.spacing()
    }

    pub fn chord(&self, index: usize) -> Result<Chord> {
        let direction = Vec2::from_angle(self.direction_angle(index));
        let (t_minus, t_plus) = line_circle_roots(&self.circle, self.p, direction)?;
        let a = self.p + direction * t_minus;
        let b = self.p + direction * t_plus;
        Ok(Chord {
            a,
            b,
            dist_a: -t_minus,
            dist_b: t_plus,
            midpoint: a.midpoint(b),
            direction,
        })
    }

    pub fn chords(&self) -> Vec<Chord> {
        (0..self.n)
            // construction guarantees an interior point, and from_angle is unit
            .map(|k| self.chord(k).expect("fan invariants hold"))
            .collect()
    }

    /// `Σ (PA_k² + PB_k²)` from the chord endpoints.
    pub fn sum_squared_distances(&self) -> f64 {
        self.chords()
            .iter()
            .map(|c| (c.a - self.p).norm_sq() + (c.b - self.p).norm_sq())
            .sum()
    }

    /// Closed form of [`sum_squared_distances`](Self::sum_squared_distances).
    ///
    /// Per chord, `PA² + PB² = 2r² + 2|q|²·cos 2β` where `q = P - center` and
    /// `β` is the angle between `q` and the chord. Over the fan the `cos 2β`
    /// terms are the real part of a rotated sum of `n`-th roots of unity,
    /// which vanishes for `n ≥ 2` and leaves `2nr²`. A single chord keeps its
    /// phase-dependent term.
    pub fn sum_squared_closed_form(&self) -> f64 {
        let r2 = self.circle.radius().powi(2);
        let base = 2.0 * self.n as f64 * r2;
        if self.n >= 2 {
            return base;
        }
        let q = self.p - self.circle.center();
        let beta = self.phase - q.angle();
        base + 2.0 * q.norm_sq() * (2.0 * beta).cos()
    }

    /// `max_k |PA_k + PB_k - 2·PC_k|`.
    pub fn midpoint_identity_residual(&self) -> f64 {
        let p = self.p;
        self.chords()
            .iter()
            .map(|c| ((c.a - p) + (c.b - p) - (c.midpoint - p) * 2.0).norm())
            .fold(0.0, f64::max)
    }

    /// Offset of chord 1 from the line through `P` and the center, reduced to `[-π/2, π/2)`.
    fn diameter_offset(&self) -> f64 {
        let q = self.p - self.circle.center();
        if q.norm() <= 1e-12 * self.circle.radius() {
            return 0.0;
        }
        wrap_angle(self.phase - q.angle() + PI / 2.0, PI) - PI / 2.0
    }

    pub fn is_diameter_anchored(&self) -> bool {
        self.diameter_offset().abs() <= DIAMETER_ANGLE_TOLERANCE
    }

    fn require_diameter(&self) -> Result<()> {
        let offset = self.diameter_offset();
        if offset.abs() <= DIAMETER_ANGLE_TOLERANCE {
            Ok(())
        } else {
            Err(Error::NotDiameterAnchored { offset })
        }
    }

    /// Residual of the pairing relation between chords symmetric about the diameter.
    ///
    /// With chord 1 a diameter, let `V_j = PC` for the chord at angle `jπ/n`
    /// from it (indices mod `n`, so `V_0 = V_n = PC_1`). Returns
    /// `max_{k=1..n} |V_k + V_{n-k} - 2cos²(kπ/n)·V_0|`.
    pub fn diameter_pairing_residual(&self) -> Result<f64> {
        self.require_diameter()?;
        let n = self.n;
        let pc: Vec<Vec2> = self.chords().iter().map(|c| c.midpoint - self.p).collect();
        let anchor = pc[0];
        let residual = (1..=n)
            .map(|k| {
                let cos = (k as f64 * self.spacing()).cos();
                (pc[k % n] + pc[(n - k) % n] - anchor * (2.0 * cos * cos)).norm()
            })
            .fold(0.0, f64::max);
        Ok(residual)
    }

    /// `|Σ(PA_k² + PB_k²) - (2⟨PC_1, Σ(PA_k + PB_k)⟩ - 2n·PC_1² + 2nr²)|`.
    pub fn expansion_identity_residual(&self) -> Result<f64> {
        self.require_diameter()?;
        let p = self.p;
        let chords = self.chords();
        let pc1 = chords[0].midpoint - p;
        let mut lhs = 0.0;
        let mut vector_sum = Vec2::ZERO;
        for c in &chords {
            let (pa, pb) = (c.a - p, c.b - p);
            lhs += pa.norm_sq() + pb.norm_sq();
            vector_sum = vector_sum + pa + pb;
        }
        let n = self.n as f64;
        let r2 = self.circle.radius().powi(2);
        let rhs = 2.0 * pc1.dot(vector_sum) - 2.0 * n * pc1.norm_sq() + 2.0 * n * r2;
        Ok((lhs - rhs).abs())
    }
}

/// The fan through `p` whose first chord passes through the center.
///
/// When `p` is the center every chord is a diameter and phase 0 is used.
pub fn diameter_fan(circle: Circle, p: Vec2, n: usize) -> Result<ChordFan> {
    circle.check_interior(p)?;
    let q = p - circle.center();
    let phase = if q.norm() <= 1e-12 * circle.radius() {
        0.0
    } else {
        q.angle()
    };
    ChordFan::new(circle, p, n, phase)
}

/// `Σ_{k=1..n} cos(2πk/n)`: zero for `n ≥ 2`, one for `n = 1`.
pub fn roots_of_unity_cos_sum(n: usize) -> f64 {
    let step = 2.0 * PI / n as f64;
    (1..=n).map(|k| (k as f64 * step).cos()).sum()
}

/// `Σ_{k=1..n} 2cos²(kπ/n)`, which equals `n` for `n ≥ 2`.
pub fn doubled_cos_squared_sum(n: usize) -> f64 {
    let step = PI / n as f64;
    (1..=n)
        .map(|k| {
            let c = (k as f64 * step).cos();
            2.0 * c * c
        })
        .sum()
}
