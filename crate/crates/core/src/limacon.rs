// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Curve parameters and closed-form evaluation.

use std::f64::consts::{FRAC_PI_2, SQRT_2, TAU};

use serde::{Deserialize, Serialize};

use crate::geom::{CurvatureElement, Point2, Vec2};
use crate::rational::{Poly, RationalCurve};
use crate::{Error, Result};

/// Shape/scale pair `(μ, f)` of one curve.
///
/// `μ` is dimensionless and selects the shape; `f` is a signed length.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimaconParams {
    mu: f64,
    f: f64,
}

impl LimaconParams {
    pub fn new(mu: f64, f: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mu must be finite, got {mu}"
            )));
        }
        if !f.is_finite() || f == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "f must be finite and nonzero, got {f}"
            )));
        }
        Ok(LimaconParams { mu, f })
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn regime(&self) -> RegimeClass {
        classify(self.mu)
    }

    /// Rational chart in `t`: the parametrization as published.
    pub(crate) fn chart_t(&self) -> RationalCurve {
        generic_chart(self.mu - 1.0, self.mu + 1.0, self.f, 1.0)
    }

    /// Rational chart in `v = 1/t`, regular at `t = ±∞`.
    pub(crate) fn chart_v(&self) -> RationalCurve {
        generic_chart(self.mu + 1.0, self.mu - 1.0, self.f, -1.0)
    }
}

/// `f(s² − 1)(a s² − b) / (s⁴ + 1)`, `ysign · f√2 s(a s² − b) / (s⁴ + 1)`.
///
/// With `(a, b) = (μ − 1, μ + 1)` this is the `t` chart; substituting
/// `t = 1/v` gives the same form with `a`, `b` swapped and `y` negated.
fn generic_chart(a: f64, b: f64, f: f64, ysign: f64) -> RationalCurve {
    let x = Poly::new([b, 0.0, -(a + b), 0.0, a]).scale(f);
    let y = Poly::new([0.0, -b, 0.0, a]).scale(ysign * f * SQRT_2);
    let w = Poly::new([1.0, 0.0, 0.0, 0.0, 1.0]);
    RationalCurve::new(Vec2::ZERO, x, y, w)
}

/// Shape regime of the curve, named after its pre-image conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeClass {
    /// `|μ| > 1`: two vertices, spiral transition, self-intersection at the origin.
    Hyperbolic,
    /// `|μ| = 1`: the inner circle of curvature shrinks to a cusp at the origin.
    Parabolic,
    /// `0 < |μ| < 1`: oppositely directed end circles, isolated point at the origin.
    Elliptic,
    /// `μ = 0`.
    Lemniscate,
}

impl std::fmt::Display for RegimeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RegimeClass::Hyperbolic => "Hyperbolic",
            RegimeClass::Parabolic => "Parabolic",
            RegimeClass::Elliptic => "Elliptic",
            RegimeClass::Lemniscate => "Lemniscate",
        };
        f.write_str(s)
    }
}

/// Regime of `μ`. The comparison with 1 is exact.
pub fn classify(mu: f64) -> RegimeClass {
    let m = mu.abs();
    if mu == 0.0 {
        RegimeClass::Lemniscate
    } else if m > 1.0 {
        RegimeClass::Hyperbolic
    } else if m == 1.0 {
        RegimeClass::Parabolic
    } else {
        RegimeClass::Elliptic
    }
}

/// Sign choice in front of the square root of the polar equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// Signed polar radius `f(μ cos ξ ± √(2 − cos² ξ))`.
pub fn polar_radius(params: &LimaconParams, xi: f64, branch: Branch) -> f64 {
    let c = xi.cos();
    params.f * (params.mu * c + branch.sign() * (2.0 - c * c).sqrt())
}

/// Point at polar angle `xi`. A negative radius lands on the opposite ray.
pub fn eval_polar(params: &LimaconParams, xi: f64, branch: Branch) -> Point2 {
    let r = polar_radius(params, xi, branch);
    let (s, c) = xi.sin_cos();
    Point2::new(r * c, r * s)
}

/// Point of the rational parametrization at `t`.
pub fn eval_rational(params: &LimaconParams, t: f64) -> Point2 {
    let LimaconParams { mu, f } = *params;
    let t2 = t * t;
    let common = (mu - 1.0) * t2 - (mu + 1.0);
    let den = t2 * t2 + 1.0;
    Point2::new(f * (t2 - 1.0) * common / den, f * SQRT_2 * t * common / den)
}

/// Limit of [`eval_rational`] as `t → ±∞`: the point `(f(μ − 1), 0)`.
pub fn eval_rational_at_infinity(params: &LimaconParams) -> Point2 {
    Point2::new(params.f * (params.mu - 1.0), 0.0)
}

/// `((x² + y² − μfx)² − f²(x² + 2y²)) / f⁴`; zero exactly on the curve.
pub fn implicit_residual(params: &LimaconParams, p: Point2) -> f64 {
    let LimaconParams { mu, f } = *params;
    let (x, y) = (p.x / f, p.y / f);
    let a = x * x + y * y - mu * x;
    a * a - (x * x + 2.0 * y * y)
}

/// The curvature elements at `ξ = 0` (A) and `ξ = π` (B) and their common center.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndpointData {
    pub elem_a: CurvatureElement,
    pub elem_b: CurvatureElement,
    /// Common center of curvature; `None` when it is at infinity (`μ = 0`).
    pub center: Option<Point2>,
}

impl EndpointData {
    /// `k(π) / k(0)`, NaN when both ends are flat.
    pub fn curvature_ratio(&self) -> f64 {
        self.elem_b.k / self.elem_a.k
    }
}

fn endpoint_element(mu: f64, f: f64, m: f64) -> CurvatureElement {
    // m = μ ± 1
    let x = f * m;
    let tau = FRAC_PI_2 * (x).signum();
    let k = 2.0 * mu / (f.abs() * m.abs() * m);
    CurvatureElement::new(Point2::new(x, 0.0), tau, k)
}

/// Closed-form curvature elements at both ends of the transition.
///
/// Fails with [`Error::SingularEndpoint`] for `|μ| = 1`, where one end is a cusp.
/// For `μ = 0` both ends are flat and the center is reported as `None`.
pub fn endpoint_elements(params: &LimaconParams) -> Result<EndpointData> {
    let LimaconParams { mu, f } = *params;
    if mu.abs() == 1.0 {
        return Err(Error::SingularEndpoint);
    }
    let center = (mu != 0.0).then(|| Point2::new(f * (mu * mu - 1.0) / (2.0 * mu), 0.0));
    Ok(EndpointData {
        elem_a: endpoint_element(mu, f, mu + 1.0),
        elem_b: endpoint_element(mu, f, mu - 1.0),
        center,
    })
}

/// `μ` realizing the curvature ratio `k(π)/k(0) = ±κ²`.
///
/// `same_winding` selects `+κ²` (both end circles equally directed, `|μ| > 1`
/// for `|κ| > 1`), otherwise `−κ²`.
pub fn mu_from_ratio(kappa: f64, same_winding: bool) -> Result<f64> {
    let k = kappa.abs();
    if !k.is_finite() || k == 0.0 {
        return Err(Error::InvalidParameter(format!(
            "kappa must be finite and nonzero, got {kappa}"
        )));
    }
    if k == 1.0 {
        return Err(Error::UnitRatio);
    }
    Ok(if same_winding {
        (k + 1.0) / (k - 1.0)
    } else {
        (k - 1.0) / (k + 1.0)
    })
}

/// `(μ + 1)/(μ − 1) · |(μ + 1)/(μ − 1)|`, the closed-form curvature ratio.
pub fn ratio_from_mu(mu: f64) -> f64 {
    let q = (mu + 1.0) / (mu - 1.0);
    q * q.abs()
}

/// Roots `ρ₁ ≤ ρ₂` of the polar equation centered at the common center:
/// `4μ²ρ² − 4μf(cos θ + μ√(μ² + sin² θ))ρ + (μ² − 1)²f² = 0`.
pub fn center_polar_roots(params: &LimaconParams, theta: f64) -> Result<(f64, f64)> {
    let LimaconParams { mu, f } = *params;
    if mu == 0.0 {
        return Err(Error::DegenerateMu);
    }
    let (s, c) = theta.sin_cos();
    let a = 4.0 * mu * mu;
    let b = -4.0 * mu * f * (c + mu * (mu * mu + s * s).sqrt());
    let m = mu * mu - 1.0;
    let cc = m * m * f * f;
    let mut disc = b * b - 4.0 * a * cc;
    if disc < 0.0 {
        // tangent rays produce a double root that rounding can push negative
        if disc > -1e-12 * b * b {
            disc = 0.0;
        } else {
            return Err(Error::NoIntersection);
        }
    }
    let sq = disc.sqrt();
    // stable pair: avoid cancellation in the smaller-magnitude root
    let q = -0.5 * (b + b.signum() * sq);
    let (r1, r2) = if q == 0.0 {
        (0.0, 0.0)
    } else {
        (q / a, cc / q)
    };
    Ok(if r1 <= r2 { (r1, r2) } else { (r2, r1) })
}

/// Samples the whole closed curve by the `+` polar branch at `n` equally
/// spaced angles in `[0, 2π)`.
pub fn sample_polar(params: &LimaconParams, n: usize) -> Vec<Point2> {
    (0..n)
        .map(|i| eval_polar(params, TAU * i as f64 / n as f64, Branch::Plus))
        .collect()
}
