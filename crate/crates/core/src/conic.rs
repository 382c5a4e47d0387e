// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The pre-image conic, circle inversion, and the construction of the curve
//! from a canonical hyperbola.
//!
//! The curve is the inverse, in the circle `x² + y² = f²`, of the conic
//! `2y² + (1 − μ²)x² + 2μfx − f² = 0`.

use serde::{Deserialize, Serialize};

use crate::geom::{CurvatureElement, Point2, Vec2};
use crate::limacon::{eval_rational, EndpointData, LimaconParams, RegimeClass};
use crate::{Error, Result};

/// Type of a real non-degenerate conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConicType {
    Ellipse,
    Parabola,
    Hyperbola,
}

impl ConicType {
    /// Regime of the inverse curve (an ellipse covers both the elliptic and
    /// the lemniscate regime).
    pub fn matches(self, regime: RegimeClass) -> bool {
        matches!(
            (self, regime),
            (ConicType::Hyperbola, RegimeClass::Hyperbolic)
                | (ConicType::Parabola, RegimeClass::Parabolic)
                | (
                    ConicType::Ellipse,
                    RegimeClass::Elliptic | RegimeClass::Lemniscate
                )
        )
    }
}

/// `xx·x² + xy·xy + yy·y² + x·x + y·y + c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadraticForm {
    pub xx: f64,
    pub xy: f64,
    pub yy: f64,
    pub x: f64,
    pub y: f64,
    pub c: f64,
}

impl QuadraticForm {
    pub fn eval(&self, p: Point2) -> f64 {
        let (x, y) = (p.x, p.y);
        self.xx * x * x + self.xy * x * y + self.yy * y * y + self.x * x + self.y * y + self.c
    }

    /// Discriminant `xy² − 4·xx·yy` of the quadratic part.
    pub fn discriminant(&self) -> f64 {
        self.xy * self.xy - 4.0 * self.xx * self.yy
    }

    pub fn conic_type(&self) -> ConicType {
        let d = self.discriminant();
        if d > 0.0 {
            ConicType::Hyperbola
        } else if d == 0.0 {
            ConicType::Parabola
        } else {
            ConicType::Ellipse
        }
    }
}

/// The pre-image conic with its eccentricity, focal parameter and foci.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConicParams {
    pub form: QuadraticForm,
    /// Normalization of [`conic_residual`], `f²`.
    pub scale: f64,
    pub e: f64,
    /// Focal parameter `f/2` (carries the sign of `f`).
    pub p: f64,
    /// Focus abscissa `f / (2(μ + e))`; `None` where the focus is at infinity.
    pub x_f_plus: Option<f64>,
    /// Focus abscissa `f / (2(μ − e))`.
    pub x_f_minus: Option<f64>,
}

impl ConicParams {
    pub fn conic_type(&self) -> ConicType {
        self.form.conic_type()
    }
}

/// `√((μ² + 1)/2)`: the eccentricity that makes the vertex images concentric.
pub fn eccentricity_for_mu(mu: f64) -> f64 {
    ((mu * mu + 1.0) / 2.0).sqrt()
}

pub fn conic_from_params(params: &LimaconParams) -> ConicParams {
    let (mu, f) = (params.mu(), params.f());
    let e = eccentricity_for_mu(mu);
    let focus = |d: f64| (d != 0.0).then(|| f / (2.0 * d));
    ConicParams {
        form: QuadraticForm {
            xx: 1.0 - mu * mu,
            xy: 0.0,
            yy: 2.0,
            x: 2.0 * mu * f,
            y: 0.0,
            c: -f * f,
        },
        scale: f * f,
        e,
        p: 0.5 * f,
        x_f_plus: focus(mu + e),
        x_f_minus: focus(mu - e),
    }
}

/// Value of the conic's quadratic form at `p`, divided by `f²`.
pub fn conic_residual(conic: &ConicParams, p: Point2) -> f64 {
    conic.form.eval(p) / conic.scale
}

/// Inversion `center + r²(p − center)/|p − center|²`.
pub fn invert_in_circle(p: Point2, center: Point2, radius: f64) -> Result<Point2> {
    let d = p - center;
    let d2 = d.hypot2();
    if d2 == 0.0 {
        return Err(Error::PoleAtCenter);
    }
    Ok(center + d * (radius * radius / d2))
}

/// Parameter samples spread over the whole curve, skipping points closer
/// than `1e−3·|f|` to the origin (the center of inversion).
pub fn duality_samples(params: &LimaconParams, n: usize) -> Vec<f64> {
    let min = 1e-3 * params.f().abs();
    (0..n)
        .map(|j| (std::f64::consts::PI * ((j as f64 + 0.5) / n as f64 - 0.5)).tan())
        .filter(|&t| eval_rational(params, t).to_vec2().length() >= min)
        .collect()
}

/// Largest conic residual of the curve points at `t_samples` after inversion
/// in the circle of radius `|f|` about the origin.
pub fn limacon_conic_duality_check(params: &LimaconParams, t_samples: &[f64]) -> Result<f64> {
    let conic = conic_from_params(params);
    let r = params.f().abs();
    let mut worst = 0.0f64;
    for &t in t_samples {
        let q = invert_in_circle(eval_rational(params, t), Point2::ORIGIN, r)?;
        worst = worst.max(conic_residual(&conic, q).abs());
    }
    Ok(worst)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

/// The circle, concentric with both extremal circles, inversion in which swaps them.
///
/// Its radius is the geometric mean of the two radii of curvature.
pub fn midcircle(data: &EndpointData) -> Result<Circle> {
    let center = data.center.ok_or(Error::DegenerateMu)?;
    let (ka, kb) = (data.elem_a.k, data.elem_b.k);
    if ka.signum() != kb.signum() {
        return Err(Error::OppositeWinding);
    }
    Ok(Circle {
        center,
        radius: (ka * kb).abs().recip().sqrt(),
    })
}

/// `x²/a² − y²/b² = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalHyperbola {
    pub a: f64,
    pub b: f64,
}

impl CanonicalHyperbola {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "hyperbola semi-axes must be positive, got a={a}, b={b}"
            )));
        }
        Ok(CanonicalHyperbola { a, b })
    }

    pub fn from_eccentricity(a: f64, e: f64) -> Result<Self> {
        if !(e > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "hyperbola eccentricity must exceed 1, got {e}"
            )));
        }
        Self::new(a, a * (e * e - 1.0).sqrt())
    }

    pub fn eccentricity(&self) -> f64 {
        (1.0 + (self.b / self.a).powi(2)).sqrt()
    }

    /// Semi-latus rectum `b²/a`.
    pub fn focal_parameter(&self) -> f64 {
        self.b * self.b / self.a
    }

    /// Branch `side = ±1`, `(±a cosh t, b sinh t)`.
    pub fn point(&self, side: f64, t: f64) -> Point2 {
        Point2::new(side * self.a * t.cosh(), self.b * t.sinh())
    }
}

/// Output of [`construct_by_inversion`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub hyperbola: CanonicalHyperbola,
    pub mu: f64,
    /// Center of inversion on the x-axis.
    pub x0: f64,
    /// Radius of inversion (the focal parameter).
    pub radius: f64,
    /// Curvature elements at the images of the right and left vertex.
    pub vertex_elements: [CurvatureElement; 2],
    pub vertex_centers: [Point2; 2],
    pub center_distance: f64,
    /// Scale `f` of the member of the family that passes through both vertex
    /// images; the image coincides with it when the eccentricity condition holds.
    pub canonical_f: f64,
    pub samples: Vec<Point2>,
}

/// `p² / (z − x₀)` in complex arithmetic: inversion about `(x₀, 0)`, a shift of
/// the pole to the origin, and a reflection about the x-axis.
fn reciprocal_map(z: Point2, x0: f64, p: f64) -> Point2 {
    let d = Vec2::new(z.x - x0, z.y);
    let s = p * p / d.hypot2();
    Point2::new(d.x * s, -d.y * s)
}

/// Curvature element of a sampled curve from five-point finite differences.
fn fd_element<F: Fn(f64) -> Point2>(curve: F, t: f64, h: f64) -> CurvatureElement {
    let p = |k: f64| curve(t + k * h).to_vec2();
    let (m2, m1, z0, p1, p2) = (p(-2.0), p(-1.0), p(0.0), p(1.0), p(2.0));
    let d1 = (m2 - p2 + (p1 - m1) * 8.0) * (1.0 / (12.0 * h));
    let d2 = ((p1 + m1) * 16.0 - (p2 + m2) - z0 * 30.0) * (1.0 / (12.0 * h * h));
    let k = d1.cross(d2) / d1.hypot2().powf(1.5);
    CurvatureElement::new(curve(t), d1.atan2(), k)
}

const FD_STEP: f64 = 2e-3;

/// Builds the curve by inverting a canonical hyperbola about `(μa, 0)` with
/// radius `p`, and reports how far apart the curvature centers at the images
/// of the two vertices are. They coincide exactly when `2e² = μ² + 1`.
///
/// Curvature is taken by finite differences of the mapped curve, independently
/// of the analytic machinery in [`crate::diffgeo`]. `n` samples per branch
/// half are produced; `full` adds the halves below the axis.
pub fn construct_by_inversion(
    hyp: &CanonicalHyperbola,
    mu: f64,
    n: usize,
    full: bool,
) -> Result<ConstructionReport> {
    let x0 = mu * hyp.a;
    if !x0.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "mu must be finite, got {mu}"
        )));
    }
    if (x0 / hyp.a).abs() == 1.0 {
        return Err(Error::InversionPoleOnCurve);
    }
    let p = hyp.focal_parameter();
    let image = |side: f64| move |t: f64| reciprocal_map(hyp.point(side, t), x0, p);
    let elements = [
        fd_element(image(1.0), 0.0, FD_STEP),
        fd_element(image(-1.0), 0.0, FD_STEP),
    ];
    let centers = [
        elements[0]
            .center()
            .unwrap_or(Point2::new(f64::INFINITY, 0.0)),
        elements[1]
            .center()
            .unwrap_or(Point2::new(f64::INFINITY, 0.0)),
    ];

    // sinh t = tan(θ), θ ∈ [0, π/2): dense near both vertex and infinity
    let n = n.max(2);
    let ts: Vec<f64> = (0..n)
        .map(|j| {
            (std::f64::consts::FRAC_PI_2 * j as f64 / n as f64)
                .tan()
                .asinh()
        })
        .collect();
    let mut samples = Vec::with_capacity(if full { 4 * n + 2 } else { 2 * n + 1 });
    let right = image(1.0);
    let left = image(-1.0);
    if full {
        samples.extend(ts.iter().rev().map(|&t| right(-t)));
    }
    samples.extend(ts.iter().skip(usize::from(full)).map(|&t| right(t)));
    samples.push(Point2::ORIGIN);
    samples.extend(ts.iter().rev().map(|&t| left(t)));
    if full {
        samples.extend(ts.iter().skip(1).map(|&t| left(-t)));
        samples.push(Point2::ORIGIN);
    }

    Ok(ConstructionReport {
        hyperbola: *hyp,
        mu,
        x0,
        radius: p,
        vertex_elements: elements,
        vertex_centers: centers,
        center_distance: centers[0].distance(centers[1]),
        canonical_f: p * p / (hyp.a * (1.0 - mu * mu)),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limacon::{endpoint_elements, implicit_residual};

    fn p(mu: f64, f: f64) -> LimaconParams {
        LimaconParams::new(mu, f).unwrap()
    }

    #[test]
    fn conic_examples() {
        let c = conic_from_params(&p(3.0, 1.0));
        assert_eq!(c.e, 5f64.sqrt());
        assert_eq!(c.p, 0.5);
        assert!((c.x_f_plus.unwrap() - 1.0 / (2.0 * (3.0 + 5f64.sqrt()))).abs() < 1e-15);
        assert!((c.x_f_minus.unwrap() - 1.0 / (2.0 * (3.0 - 5f64.sqrt()))).abs() < 1e-15);
        assert_eq!(c.conic_type(), ConicType::Hyperbola);

        let c = conic_from_params(&p(1.0, 1.0));
        assert_eq!(c.e, 1.0);
        assert_eq!(c.conic_type(), ConicType::Parabola);
        assert!(c.x_f_minus.is_none());

        let c = conic_from_params(&p(0.0, 1.0));
        assert_eq!(c.e, 0.5f64.sqrt());
        assert_eq!(c.conic_type(), ConicType::Ellipse);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(
            conic_residual(&conic_from_params(&p(0.0, 1.0)), Point2::new(1.0, 0.0)),
            0.0
        );
        assert_eq!(
            conic_residual(&conic_from_params(&p(3.0, 1.0)), Point2::ORIGIN),
            -1.0
        );
        // the image of A under inversion in |f| lies on the conic
        let prm = p(3.0, 1.0);
        let a = endpoint_elements(&prm).unwrap().elem_a.point;
        let q = invert_in_circle(a, Point2::ORIGIN, 1.0).unwrap();
        assert!(conic_residual(&conic_from_params(&prm), q).abs() < 1e-15);
    }

    #[test]
    fn foci_satisfy_focal_property() {
        // ellipse: |PF₁| + |PF₂| constant; hyperbola: ||PF₁| − |PF₂|| constant
        for &(mu, f) in &[(0.5, 1.0), (3.0, 1.0), (-2.0, 0.7)] {
            let prm = p(mu, f);
            let c = conic_from_params(&prm);
            let f1 = Point2::new(c.x_f_plus.unwrap(), 0.0);
            let f2 = Point2::new(c.x_f_minus.unwrap(), 0.0);
            let vals: Vec<f64> = duality_samples(&prm, 32)
                .into_iter()
                .map(|t| {
                    let q =
                        invert_in_circle(eval_rational(&prm, t), Point2::ORIGIN, f.abs()).unwrap();
                    let (d1, d2) = (q.distance(f1), q.distance(f2));
                    if mu.abs() < 1.0 {
                        d1 + d2
                    } else {
                        (d1 - d2).abs()
                    }
                })
                .collect();
            let spread = vals.iter().fold(0.0f64, |m, v| m.max((v - vals[0]).abs()));
            assert!(spread < 1e-9, "mu={mu} spread={spread}");
        }
    }

    #[test]
    fn inversion_identities() {
        let q = invert_in_circle(Point2::new(2.0, 0.0), Point2::ORIGIN, 1.0).unwrap();
        assert_eq!(q, Point2::new(0.5, 0.0));
        let c = Point2::new(0.3, -1.0);
        let on = c + Vec2::from_angle(0.7) * 2.0;
        assert!(invert_in_circle(on, c, 2.0).unwrap().distance(on) < 1e-15);
        assert_eq!(invert_in_circle(c, c, 1.0), Err(Error::PoleAtCenter));
    }

    #[test]
    fn duality_in_all_regimes() {
        for &mu in &[3.0, 1.0, 0.0, 0.5, -3.0] {
            for &f in &[1.0, -2.0] {
                let prm = p(mu, f);
                let r = limacon_conic_duality_check(&prm, &duality_samples(&prm, 128)).unwrap();
                assert!(r < 1e-9, "mu={mu} f={f} r={r}");
            }
        }
        // (μ − 1)t² = μ + 1 exactly: the sample is the double point at the origin
        assert_eq!(
            limacon_conic_duality_check(&p(1.25, 1.0), &[3.0]),
            Err(Error::PoleAtCenter)
        );
    }

    #[test]
    fn midcircle_examples() {
        let d = endpoint_elements(&p(3.0, 1.0)).unwrap();
        let m = midcircle(&d).unwrap();
        assert!((m.center.x - 4.0 / 3.0).abs() < 1e-15);
        assert!((m.radius - 4.0 / 3.0).abs() < 1e-15);
        // swaps the two extremal circles
        for i in 0..16 {
            let dir = Vec2::from_angle(0.4 * i as f64);
            let outer = m.center + dir * (8.0 / 3.0);
            let img = invert_in_circle(outer, m.center, m.radius).unwrap();
            assert!((img.distance(m.center) - 2.0 / 3.0).abs() < 1e-14);
        }
        let e = endpoint_elements(&p(0.5, 1.0)).unwrap();
        assert_eq!(midcircle(&e), Err(Error::OppositeWinding));
        let z = endpoint_elements(&p(0.0, 1.0)).unwrap();
        assert_eq!(midcircle(&z), Err(Error::DegenerateMu));
    }

    #[test]
    fn midcircle_is_circle_of_symmetry() {
        for &mu in &[1.5, 3.0, -3.0] {
            let prm = p(mu, 1.0);
            let m = midcircle(&endpoint_elements(&prm).unwrap()).unwrap();
            for j in 0..64 {
                let t = (std::f64::consts::PI * ((j as f64 + 0.5) / 64.0 - 0.5)).tan();
                let q = invert_in_circle(eval_rational(&prm, t), m.center, m.radius).unwrap();
                assert!(implicit_residual(&prm, q).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn construction_concentric_iff_condition() {
        let hyp = CanonicalHyperbola::new(1.0, 2.0).unwrap();
        assert_eq!(hyp.eccentricity(), 5f64.sqrt());
        assert_eq!(hyp.focal_parameter(), 4.0);
        let r = construct_by_inversion(&hyp, 3.0, 64, false).unwrap();
        assert!(r.center_distance < 1e-9, "{}", r.center_distance);
        let off = construct_by_inversion(&hyp, 2.9, 64, false).unwrap();
        assert!(off.center_distance > 1e-3);
        assert_eq!(eccentricity_for_mu(3.0), 5f64.sqrt());
        assert_eq!(
            construct_by_inversion(&hyp, 1.0, 8, false).unwrap_err(),
            Error::InversionPoleOnCurve
        );
    }

    #[test]
    fn construction_image_is_family_member() {
        let hyp = CanonicalHyperbola::new(1.0, 2.0).unwrap();
        let r = construct_by_inversion(&hyp, 3.0, 128, true).unwrap();
        // f = −p/2 under the eccentricity condition
        assert!((r.canonical_f + 2.0).abs() < 1e-14);
        let prm = p(3.0, r.canonical_f);
        let worst = r
            .samples
            .iter()
            .map(|q| implicit_residual(&prm, *q).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-9, "{worst}");
        // vertex images carry the endpoint elements of that member
        let d = endpoint_elements(&prm).unwrap();
        assert!(r.vertex_elements[0].point.distance(d.elem_a.point) < 1e-12);
        assert!((r.vertex_elements[0].k.abs() - d.elem_a.k.abs()).abs() < 1e-8);
        assert!((r.vertex_elements[1].k.abs() - d.elem_b.k.abs()).abs() < 1e-8);
    }
}
