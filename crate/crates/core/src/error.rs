use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point ({x}, {y}) is not strictly inside the circle")]
    PointNotInterior { x: f64, y: f64 },

    #[error("direction vector has length {length}, expected a unit vector")]
    NonUnitDirection { length: f64 },

    #[error("chord 1 is not a diameter (off by {offset:e} rad)")]
    NotDiameterAnchored { offset: f64 },

    #[error("rotation angle {theta} is outside [0, {max}]; use the multiplicity measure for larger sweeps")]
    ThetaOutOfRange { theta: f64, max: f64 },

    #[error("adaptive quadrature exceeded {cap} intervals without reaching tolerance {tol:e}")]
    ToleranceNotMet { tol: f64, cap: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
