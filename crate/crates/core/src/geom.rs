//! Plane vectors, circles and the line–circle intersection every chord is built from.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative margin that separates "strictly inside" from the boundary.
pub const INTERIOR_MARGIN: f64 = 1e-9;

/// Allowed deviation of a direction vector's length from 1.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// A point or displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Like [`Vec2::new`] but rejects NaN and infinite components.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        let v = Vec2 { x, y };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::InvalidInput(format!("non-finite vector ({x}, {y})")))
        }
    }

    /// Unit vector at `angle` radians from the positive x-axis.
    pub fn from_angle(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Vec2 { x: c, y: s }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Angle in (-π, π].
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotate(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Vec2 {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    /// Counterclockwise rotation about `pivot`.
    pub fn rotate_about(self, pivot: Vec2, angle: f64) -> Self {
        pivot + (self - pivot).rotate(angle)
    }

    pub fn midpoint(self, other: Vec2) -> Self {
        (self + other) * 0.5
    }
}

pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a.dot(b)
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    fn mul(self, rhs: Vec2) -> Vec2 {
        rhs * self
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    center: Vec2,
    radius: f64,
}

impl Circle {
    pub fn new(center: Vec2, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::InvalidInput("circle center must be finite".into()));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidInput(format!(
                "circle radius must be positive and finite, got {radius}"
            )));
        }
        Ok(Circle { center, radius })
    }

    pub const fn unit() -> Self {
        Circle {
            center: Vec2::ZERO,
            radius: 1.0,
        }
    }

    pub fn center(&self) -> Vec2 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    /// Point on the circle at central angle `angle`.
    pub fn point_at(&self, angle: f64) -> Vec2 {
        self.center + Vec2::from_angle(angle) * self.radius
    }

    /// True when `p` lies inside with the [`INTERIOR_MARGIN`] to spare.
    pub fn is_interior(&self, p: Vec2) -> bool {
        p.is_finite() && (p - self.center).norm() <= self.radius * (1.0 - INTERIOR_MARGIN)
    }

    pub(crate) fn check_interior(&self, p: Vec2) -> Result<()> {
        if self.is_interior(p) {
            Ok(())
        } else {
            Err(Error::PointNotInterior { x: p.x, y: p.y })
        }
    }
}

impl Default for Circle {
    fn default() -> Self {
        Circle::unit()
    }
}

/// Parameters `(t_minus, t_plus)` at which the line `p + t·dir` meets the circle.
///
/// `p` must be interior, so the roots straddle zero: `t_minus < 0 < t_plus`.
/// The root of larger magnitude is taken from the quadratic formula and the
/// other from Vieta's product, which avoids cancellation.
pub fn line_circle_roots(circle: &Circle, p: Vec2, dir: Vec2) -> Result<(f64, f64)> {
    let length = dir.norm();
    if !((length - 1.0).abs() <= UNIT_TOLERANCE) {
        return Err(Error::NonUnitDirection { length });
    }
    circle.check_interior(p)?;

    let q = p - circle.center;
    let r = circle.radius;
    let half_b = q.dot(dir);
    // |q|² - r², negative for interior points
    let c = (q.norm() - r) * (q.norm() + r);
    let s = (half_b * half_b - c).sqrt();
    if half_b >= 0.0 {
        let t_minus = -half_b - s;
        Ok((t_minus, c / t_minus))
    } else {
        let t_plus = -half_b + s;
        Ok((c / t_plus, t_plus))
    }
}

/// Reduce an angle to `[0, period)`.
pub(crate) fn wrap_angle(angle: f64, period: f64) -> f64 {
    let w = angle.rem_euclid(period);
    // rem_euclid may round up to exactly `period` for tiny negative inputs
    if w >= period {
        0.0
    } else {
        w
    }
}
