// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Transitions between two concentric directed circles.
//!
//! The larger circle is joined at the `ξ = 0` end (A) and the smaller at the
//! `ξ = π` end (B). Equally directed circles give `μ > 1` and a spiral; oppositely
//! directed ones give `0 < μ < 1`. The canonical curve always has `f > 0`, `μ > 0`
//! and a counterclockwise outer circle; a clockwise outer circle is handled by
//! the reflection flag of the placement.

use serde::{Deserialize, Serialize};

use crate::diffgeo::{
    endpoint_curvature_slopes, find_vertices, is_monotone_curvature, turning_angle, LimaconCurve,
    MonotonicityReport,
};
use crate::geom::{angle_diff, CurvatureElement, Placement, Point2};
use crate::limacon::{
    classify, endpoint_elements, mu_from_ratio, sample_polar, EndpointData, LimaconParams,
    RegimeClass,
};
use crate::{Error, Result};

/// Traversal direction of a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Winding {
    CounterClockwise,
    Clockwise,
}

impl Winding {
    pub fn sign(self) -> f64 {
        match self {
            Winding::CounterClockwise => 1.0,
            Winding::Clockwise => -1.0,
        }
    }
}

impl From<Winding> for i8 {
    fn from(w: Winding) -> i8 {
        match w {
            Winding::CounterClockwise => 1,
            Winding::Clockwise => -1,
        }
    }
}

impl TryFrom<i8> for Winding {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Winding::CounterClockwise),
            -1 => Ok(Winding::Clockwise),
            _ => Err(format!("winding must be +1 or -1, got {v}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirectedCircle {
    pub center: Point2,
    pub radius: f64,
    pub winding: Winding,
}

impl DirectedCircle {
    pub fn new(center: Point2, radius: f64, winding: Winding) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite() && center.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "circle needs a finite center and positive finite radius, got r={radius}"
            )));
        }
        Ok(DirectedCircle {
            center,
            radius,
            winding,
        })
    }

    /// Signed curvature of the circle traversed in its winding direction.
    pub fn curvature(&self) -> f64 {
        self.winding.sign() / self.radius
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Allowed center mismatch, relative to the larger radius.
    pub tol_concentric: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol_concentric: 1e-9,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransitionSolution {
    pub params: LimaconParams,
    /// Maps canonical coordinates to world coordinates.
    pub placement: Placement,
    /// Endpoint elements in world coordinates; A on `outer`, B on `inner`.
    pub endpoints: EndpointData,
    pub regime: RegimeClass,
    /// `√(r_outer / r_inner)`.
    pub kappa: f64,
    /// The larger input circle.
    pub outer: DirectedCircle,
    /// The smaller input circle.
    pub inner: DirectedCircle,
}

impl TransitionSolution {
    /// World point at loop parameter `phi` (`[0, 2]` is the transition).
    pub fn point_at(&self, phi: f64) -> Point2 {
        self.placement
            .apply(LimaconCurve::new(self.params).point(phi))
    }

    /// `n ≥ 2` world points along the transition, A first.
    pub fn sample_transition(&self, n: usize) -> Vec<Point2> {
        let curve = LimaconCurve::new(self.params);
        crate::diffgeo::transition_grid(n.max(2))
            .into_iter()
            .map(|phi| self.placement.apply(curve.point(phi)))
            .collect()
    }

    /// `n` world points around the whole closed curve.
    pub fn sample_closed(&self, n: usize) -> Vec<Point2> {
        sample_polar(&self.params, n)
            .into_iter()
            .map(|p| self.placement.apply(p))
            .collect()
    }
}

/// Solves with the default [`SolverConfig`].
pub fn solve_transition(
    inner: &DirectedCircle,
    outer: &DirectedCircle,
    anchor_angle: f64,
) -> Result<TransitionSolution> {
    solve_transition_with(inner, outer, anchor_angle, &SolverConfig::default())
}

/// Places the curve joining `outer` (at A, in direction `anchor_angle` from the
/// common center) and `inner` (at B).
///
/// The two circles are assigned by radius, so argument order does not matter.
pub fn solve_transition_with(
    inner: &DirectedCircle,
    outer: &DirectedCircle,
    anchor_angle: f64,
    config: &SolverConfig,
) -> Result<TransitionSolution> {
    for c in [inner, outer] {
        DirectedCircle::new(c.center, c.radius, c.winding)?;
    }
    if !anchor_angle.is_finite() {
        return Err(Error::InvalidParameter(
            "anchor angle must be finite".into(),
        ));
    }
    if !(config.tol_concentric > 0.0) {
        return Err(Error::InvalidParameter(
            "tol_concentric must be positive".into(),
        ));
    }
    let (outer, inner) = if outer.radius >= inner.radius {
        (*outer, *inner)
    } else {
        (*inner, *outer)
    };
    let same = outer.winding == inner.winding;
    if outer.radius == inner.radius {
        return Err(if same {
            Error::DegenerateEqualCircles
        } else {
            Error::RatioMinusOne
        });
    }
    let distance = outer.center.distance(inner.center);
    let tolerance = config.tol_concentric * outer.radius;
    if distance > tolerance {
        return Err(Error::NotConcentric {
            distance,
            tolerance,
        });
    }

    let kappa = (outer.radius / inner.radius).sqrt();
    let mu = mu_from_ratio(kappa, same)?;
    // radius of curvature at A is f(μ + 1)²/(2μ)
    let f = 2.0 * mu * outer.radius / (mu + 1.0).powi(2);
    let params = LimaconParams::new(mu, f)?;
    let canonical = endpoint_elements(&params)?;
    let x_c = canonical.center.ok_or(Error::DegenerateMu)?;
    let placement = Placement::about(
        x_c,
        outer.center,
        anchor_angle,
        outer.winding == Winding::Clockwise,
    );
    Ok(TransitionSolution {
        params,
        placement,
        endpoints: EndpointData {
            elem_a: placement.apply_element(&canonical.elem_a),
            elem_b: placement.apply_element(&canonical.elem_b),
            center: Some(outer.center),
        },
        regime: classify(mu),
        kappa,
        outer,
        inner,
    })
}

/// How well a curvature element matches a directed circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OsculationError {
    /// `| |p − c| − r |`.
    pub position: f64,
    /// Angle between the element tangent and the circle's directed tangent.
    pub tangent: f64,
    /// `|k − w/r|·r`.
    pub curvature: f64,
    /// Distance between the element's center of curvature and the circle center.
    pub center: f64,
}

impl OsculationError {
    /// Largest component, lengths taken relative to `radius`.
    pub fn relative(&self, radius: f64) -> f64 {
        (self.position / radius)
            .max(self.tangent)
            .max(self.curvature)
            .max(self.center / radius)
    }

    pub fn absolute_length(&self) -> f64 {
        self.position.max(self.center)
    }
}

pub fn osculation_error(elem: &CurvatureElement, circle: &DirectedCircle) -> OsculationError {
    let radial = elem.point - circle.center;
    let expected = radial.turn_left() * circle.winding.sign();
    let center = elem
        .center()
        .map_or(f64::INFINITY, |c| c.distance(circle.center));
    OsculationError {
        position: (radial.length() - circle.radius).abs(),
        tangent: angle_diff(expected.atan2(), elem.tau).abs(),
        curvature: (elem.k - circle.curvature()).abs() * circle.radius,
        center,
    }
}

/// Recomputed checks of a solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticReport {
    pub regime: RegimeClass,
    pub mu: f64,
    pub f: f64,
    pub kappa: f64,
    /// A against the outer circle.
    pub osculation_outer: OsculationError,
    /// B against the inner circle.
    pub osculation_inner: OsculationError,
    /// Worst osculation component relative to the circle radii.
    pub max_osculation_error: f64,
    /// Worst absolute positional/center mismatch.
    pub max_osculation_error_abs: f64,
    /// `None` outside the spiral regime.
    pub turning_angle: Option<f64>,
    pub monotonicity: MonotonicityReport,
    /// Curvature extrema strictly inside the transition arc.
    pub vertices_transition: usize,
    /// Curvature extrema strictly inside the mirrored arc.
    pub vertices_mirror: usize,
    /// `dk/ds` at A and at B.
    pub endpoint_dk_ds: [f64; 2],
}

const DIAGNOSE_SAMPLES: usize = 10_000;

/// Recomputes endpoint osculation from `params` and `placement`, the turning
/// angle, curvature monotonicity and vertex counts.
pub fn diagnose(solution: &TransitionSolution) -> Result<DiagnosticReport> {
    let params = solution.params;
    let canonical = endpoint_elements(&params)?;
    let a = solution.placement.apply_element(&canonical.elem_a);
    let b = solution.placement.apply_element(&canonical.elem_b);
    let osc_outer = osculation_error(&a, &solution.outer);
    let osc_inner = osculation_error(&b, &solution.inner);
    let vertices = find_vertices(&params);
    let interior = |lo: f64, hi: f64| vertices.iter().filter(|v| v.phi > lo && v.phi < hi).count();
    let (ka, kb) = endpoint_curvature_slopes(&params)?;
    Ok(DiagnosticReport {
        regime: solution.regime,
        mu: params.mu(),
        f: params.f(),
        kappa: solution.kappa,
        osculation_outer: osc_outer,
        osculation_inner: osc_inner,
        max_osculation_error: osc_outer
            .relative(solution.outer.radius)
            .max(osc_inner.relative(solution.inner.radius)),
        max_osculation_error_abs: osc_outer.absolute_length().max(osc_inner.absolute_length()),
        turning_angle: turning_angle(&params).ok(),
        monotonicity: is_monotone_curvature(&params, DIAGNOSE_SAMPLES),
        vertices_transition: interior(0.0, 2.0),
        vertices_mirror: interior(2.0, 4.0),
        endpoint_dk_ds: [ka, kb],
    })
}

/// One level of the `μ → ∞`, `μf = 2R` limit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitLevel {
    pub mu: f64,
    pub f: f64,
    /// Hausdorff distance between the sampled curve and the circle `(x − R)² + y² = R²`.
    pub hausdorff: f64,
    /// Largest `(x² + y² − 2Rx)² / R⁴` over the samples.
    pub duplicated_circle_residual: f64,
    pub samples: Vec<Point2>,
}

fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.hypot2();
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((p - a).dot(ab) / len2).clamp(0.0, 1.0)
    };
    p.distance(a + ab * t)
}

/// Samples the curve with `μf = 2R` for each `μ` in `mus` and measures how
/// close it comes to the doubly traced circle of radius `R` through the origin.
pub fn degenerate_limit_curve(radius: f64, mus: &[f64], n: usize) -> Result<Vec<LimitLevel>> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive, got {radius}"
        )));
    }
    let n = n.max(8);
    let center = Point2::new(radius, 0.0);
    let circle: Vec<Point2> = (0..n)
        .map(|i| {
            center
                + crate::geom::Vec2::from_angle(std::f64::consts::TAU * i as f64 / n as f64)
                    * radius
        })
        .collect();
    mus.iter()
        .map(|&mu| {
            let params = LimaconParams::new(mu, 2.0 * radius / mu)?;
            let samples = sample_polar(&params, n);
            let to_circle = samples
                .iter()
                .map(|p| (p.distance(center) - radius).abs())
                .fold(0.0, f64::max);
            let to_curve = circle
                .iter()
                .map(|c| {
                    (0..n)
                        .map(|i| point_segment_distance(*c, samples[i], samples[(i + 1) % n]))
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max);
            let dup = samples
                .iter()
                .map(|p| {
                    let q = (p.x * p.x + p.y * p.y - 2.0 * radius * p.x) / (radius * radius);
                    q * q
                })
                .fold(0.0, f64::max);
            Ok(LimitLevel {
                mu,
                f: params.f(),
                hausdorff: to_circle.max(to_curve),
                duplicated_circle_residual: dup,
                samples,
            })
        })
        .collect()
}
