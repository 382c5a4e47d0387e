// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Normalized boundary data and the closed-form `u`-parametrization of the
//! transition between them.
//!
//! For `κ > 0, κ ≠ 1` the boundary elements are
//! `{(−1, 0), −π/2, (κ² − 1)/(2κ²)}` and `{(1, 0), −π/2, (κ² − 1)/2}`, both
//! centered at `((κ² + 1)/(κ² − 1), 0)`; `u ∈ [0, 1]` traces the transition.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::diffgeo::{phis_at_arc_lengths, LimaconCurve};
use crate::geom::{CurvatureElement, Point2, Vec2};
use crate::limacon::{endpoint_elements, implicit_residual, LimaconParams};
use crate::quadrature::integrate;
use crate::rational::{Poly, RationalCurve};
use crate::{Error, Result};

/// Residual bound used by [`affine_correspondence`].
pub const CORRESPONDENCE_TOL: f64 = 1e-9;
const CORRESPONDENCE_SAMPLES: usize = 256;

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa == 1.0 {
        return Err(Error::UnitKappa);
    }
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "kappa must be positive and finite, got {kappa}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalizedProblem {
    pub kappa: f64,
    pub elem_minus: CurvatureElement,
    pub elem_plus: CurvatureElement,
    pub center: Point2,
}

pub fn normalized_problem(kappa: f64) -> Result<NormalizedProblem> {
    check_kappa(kappa)?;
    let k2 = kappa * kappa;
    Ok(NormalizedProblem {
        kappa,
        elem_minus: CurvatureElement::new(
            Point2::new(-1.0, 0.0),
            -FRAC_PI_2,
            (k2 - 1.0) / (2.0 * k2),
        ),
        elem_plus: CurvatureElement::new(Point2::new(1.0, 0.0), -FRAC_PI_2, (k2 - 1.0) / 2.0),
        center: Point2::new((k2 + 1.0) / (k2 - 1.0), 0.0),
    })
}

/// Point of the `u`-parametrization, evaluated as written.
pub fn eval_u(kappa: f64, u: f64) -> Result<Point2> {
    check_kappa(kappa)?;
    let w = 1.0 - u;
    let w2 = w * w;
    let u2 = u * u;
    let den = kappa * kappa * (u2 * u2) + w2 * w2;
    let km1 = kappa - 1.0;
    let x = (kappa + 1.0) / km1 + (2.0 * kappa / km1) * (1.0 - 2.0 * u) * (u2 * kappa - w2) / den;
    let y = (-2.0 * (2.0 * kappa.powi(3)).sqrt() / km1) * u * w * (1.0 - 2.0 * u) / den;
    Ok(Point2::new(x, y))
}

/// The `u`-curve as a polynomial rational map with exact derivatives.
pub fn u_curve(kappa: f64) -> Result<RationalCurve> {
    check_kappa(kappa)?;
    let km1 = kappa - 1.0;
    let one_minus_u = Poly::new([1.0, -1.0]);
    let w2 = one_minus_u.mul(&one_minus_u);
    let w4 = w2.mul(&w2);
    let den = Poly::new([0.0, 0.0, 0.0, 0.0, kappa * kappa]).add(&w4);
    let lin = Poly::new([1.0, -2.0]);
    let inner = Poly::new([0.0, 0.0, kappa]).add(&w2.scale(-1.0));
    let x = lin.mul(&inner).scale(2.0 * kappa / km1);
    let y = Poly::new([0.0, 1.0])
        .mul(&one_minus_u)
        .mul(&lin)
        .scale(-2.0 * (2.0 * kappa.powi(3)).sqrt() / km1);
    Ok(RationalCurve::new(
        Vec2::new((kappa + 1.0) / km1, 0.0),
        x,
        y,
        den,
    ))
}

/// Similarity `T(x, y) = (μ − x/f, s·y/|f|)` taking the canonical curve
/// `(μ, f)` onto the normalized `u`-curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineCorrespondence {
    pub kappa: f64,
    pub params: LimaconParams,
    /// `s = ±1`, fixed by matching the tangent at the first endpoint.
    pub y_sign: f64,
    /// Largest implicit residual over the checked `u`-samples.
    pub max_residual: f64,
}

impl AffineCorrespondence {
    pub fn to_normalized(&self, p: Point2) -> Point2 {
        let f = self.params.f();
        Point2::new(self.params.mu() - p.x / f, self.y_sign * p.y / f.abs())
    }

    pub fn to_canonical(&self, q: Point2) -> Point2 {
        let f = self.params.f();
        Point2::new(f * (self.params.mu() - q.x), self.y_sign * f.abs() * q.y)
    }

    pub fn map_direction(&self, v: Vec2) -> Vec2 {
        let f = self.params.f();
        Vec2::new(-v.x / f, self.y_sign * v.y / f.abs())
    }

    /// Length scale factor from canonical to normalized coordinates.
    pub fn scale(&self) -> f64 {
        self.params.f().abs().recip()
    }

    /// Whether `T` preserves orientation (and hence curvature sign).
    pub fn preserves_orientation(&self) -> bool {
        -self.y_sign / self.params.f() > 0.0
    }
}

/// Similarity between the canonical curve `μ = (κ + 1)/(κ − 1)` and the
/// normalized `u`-curve, verified on 256 samples of `u ∈ [0, 1]`.
///
/// Requires `κ > 1`. [`Error::NoCorrespondence`] signals a residual above
/// [`CORRESPONDENCE_TOL`].
pub fn affine_correspondence(kappa: f64) -> Result<AffineCorrespondence> {
    check_kappa(kappa)?;
    if kappa < 1.0 {
        return Err(Error::InvalidParameter(format!(
            "affine correspondence needs kappa > 1, got {kappa}"
        )));
    }
    let problem = normalized_problem(kappa)?;
    let mu = (kappa + 1.0) / (kappa - 1.0);
    let k0 = problem.elem_minus.k;
    let f = 2.0 * mu / (k0 * (mu + 1.0).powi(2));
    let params = LimaconParams::new(mu, f)?;
    let canon = endpoint_elements(&params)?;
    let mut corr = AffineCorrespondence {
        kappa,
        params,
        y_sign: 1.0,
        max_residual: 0.0,
    };
    for s in [1.0, -1.0] {
        corr.y_sign = s;
        if corr
            .map_direction(canon.elem_a.tangent())
            .dot(problem.elem_minus.tangent())
            > 0.0
        {
            break;
        }
    }
    let mut worst = 0.0f64;
    for i in 0..CORRESPONDENCE_SAMPLES {
        let u = i as f64 / (CORRESPONDENCE_SAMPLES - 1) as f64;
        let q = corr.to_canonical(eval_u(kappa, u)?);
        worst = worst.max(implicit_residual(&params, q).abs());
    }
    corr.max_residual = worst;
    if !(worst < CORRESPONDENCE_TOL) {
        return Err(Error::NoCorrespondence(worst));
    }
    Ok(corr)
}

/// Largest difference between the curvature of the `u`-curve and that of the
/// canonical transition at equal arc length (after the similarity rescaling),
/// over `n` samples clustered near both ends of `u ∈ [0, 1]`.
pub fn profile_deviation(kappa: f64, n: usize) -> Result<f64> {
    let corr = affine_correspondence(kappa)?;
    let curve = u_curve(kappa)?;
    let n = n.max(2);
    let us: Vec<f64> = (0..n)
        .map(|i| 0.5 - 0.5 * (std::f64::consts::PI * i as f64 / (n - 1) as f64).cos())
        .collect();
    let scale = corr.scale();
    let sign = if corr.preserves_orientation() {
        1.0
    } else {
        -1.0
    };
    let tol = 1e-12;
    let mut lengths = Vec::with_capacity(n);
    let mut s = 0.0;
    lengths.push(0.0);
    for w in us.windows(2) {
        s += integrate(|u| curve.jet(u).d1.length(), w[0], w[1], tol).value;
        // canonical arc length
        lengths.push(s / scale);
    }
    let phis = phis_at_arc_lengths(&corr.params, &lengths)?;
    let canonical = LimaconCurve::new(corr.params);
    let mut worst = 0.0f64;
    for (u, phi) in us.iter().zip(phis) {
        let k_u = curve.jet(*u).curvature();
        let k_t = canonical.frame(phi).k;
        worst = worst.max((sign * k_u * scale - k_t).abs());
    }
    Ok(worst)
}
