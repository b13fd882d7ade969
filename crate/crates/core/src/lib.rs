//! Chord fans through an interior point of a circle.
//!
//! `n` chords through a point `P`, spaced `π/n` apart, satisfy
//! `Σ (PA_k² + PB_k²) = 2n·r²` wherever `P` sits, and turning the whole fan
//! by `θ` sweeps area `n·θ·r²`. This crate builds such fans, checks the
//! identities numerically, and estimates the swept area three independent
//! ways (adaptive quadrature, Monte Carlo, polygonal sectors).

pub mod error;
pub mod fan;
pub mod geom;
pub mod quad;
pub mod svg;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use fan::{diameter_fan, doubled_cos_squared_sum, roots_of_unity_cos_sum, Chord, ChordFan};
pub use geom::{dot, line_circle_roots, Circle, Vec2};
pub use sweep::{
    sweep_additivity_residual, sweep_integral, sweep_integral_closed_form, sweep_rate,
    swept_measure_multiplicity, AreaEstimate, AreaMethod, SweptRegion,
};
pub use verify::{boundary_stress, run_suite, CheckConfig, CheckResult, VerificationReport};
