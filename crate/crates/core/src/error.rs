use thiserror::Error;

use crate::hyperbolic::HPoint;

/// Errors raised by the geometric and formula layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("point ({x}, {y}) is not inside the open unit disk")]
    OutsideDisk { x: f64, y: f64 },

    #[error("coincident points: {0}")]
    Coincident(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("degenerate polygon: measured area {area} is not positive")]
    DegeneratePolygon { area: f64 },

    #[error("degenerate hull: only {} extreme point(s)", .witness.len())]
    DegenerateHull { witness: Vec<HPoint> },

    #[error("invalid tiling: {invariant}: {message}")]
    InvalidTiling {
        invariant: &'static str,
        message: String,
    },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("precision loss at depth {depth}: vertex at disk radius {radius} exceeds 1 - 1e-12")]
    Precision { depth: usize, radius: f64 },

    #[error("{0}")]
    Io(String),
}

impl GeomError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        GeomError::Domain(msg.into())
    }

    pub(crate) fn tiling(invariant: &'static str, message: impl Into<String>) -> Self {
        GeomError::InvalidTiling {
            invariant,
            message: message.into(),
        }
    }
}

pub type GeomResult<T> = Result<T, GeomError>;
