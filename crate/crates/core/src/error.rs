// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the geometry routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("endpoint at the cusp (|mu| = 1) has unbounded curvature")]
    SingularEndpoint,
    #[error("curvature ratio magnitude 1 is only reached in the duplicated-circle limit")]
    UnitRatio,
    #[error("kappa = 1 has no normalized transition")]
    UnitKappa,
    #[error("ray from the common center misses the curve")]
    NoIntersection,
    #[error("mu = 0 has no finite common center")]
    DegenerateMu,
    #[error("singular point (zero speed) at parameter {0}")]
    SingularPoint(f64),
    #[error("turning angle is only defined for the spiral regime |mu| > 1")]
    NotSpiralRegime,
    #[error("point coincides with the center of inversion")]
    PoleAtCenter,
    #[error("extremal circles have opposite orientation")]
    OppositeWinding,
    #[error("center of inversion lies on the hyperbola")]
    InversionPoleOnCurve,
    #[error("normalized curve does not match the canonical curve (residual {0:e})")]
    NoCorrespondence(f64),
    #[error("circles are not concentric (center distance {distance:e}, tolerance {tolerance:e})")]
    NotConcentric { distance: f64, tolerance: f64 },
    #[error("equally directed circles of equal radius")]
    DegenerateEqualCircles,
    #[error("oppositely directed circles of equal radius (ratio -1)")]
    RatioMinusOne,
}

impl Error {
    /// Whether the error stems from invalid input rather than a numerical singularity.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::SingularEndpoint
                | Error::SingularPoint(_)
                | Error::NoIntersection
                | Error::NoCorrespondence(_)
        )
    }
}
