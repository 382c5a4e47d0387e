// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Differential geometry along the curve.
//!
//! Orientation: curvature and tangent angles are measured in the direction of
//! increasing polar angle `ξ`, which matches the endpoint elements of
//! [`endpoint_elements`](crate::limacon::endpoint_elements). Along the
//! rational parametrization that is the direction of *decreasing* `t`; the
//! transition from A (`t = 0`) to B (`t = ±∞`) runs over `t ∈ (−∞, 0]`.
//!
//! Internally the closed curve is covered by a loop parameter `φ ∈ [0, 4)`:
//!
//! | `φ`       | chart       | point            |
//! |-----------|-------------|------------------|
//! | `[0, 1]`  | `t = −φ`    | A at `φ = 0`     |
//! | `[1, 3]`  | `v = φ − 2` | B at `φ = 2`     |
//! | `[3, 4)`  | `t = 4 − φ` | back towards A   |
//!
//! where `v = 1/t`. Both charts are polynomial rational maps, so `B` is reached
//! without evaluating `t⁴` at large `t`. `|dz/dφ|` is continuous across the
//! chart seams and `φ ∈ [0, 2]` is the transition arc.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::geom::{angle_diff, Point2, Vec2};
use crate::limacon::LimaconParams;
use crate::quadrature::integrate;
use crate::rational::{Jet, RationalCurve};
use crate::{Error, Result};

/// Default absolute arc-length tolerance, relative to `|f|`.
pub const ARC_LENGTH_TOL: f64 = 1e-10;

/// Speeds below `SINGULAR_SPEED · |f|` are treated as a cusp.
pub const SINGULAR_SPEED: f64 = 1e-12;

/// Number of scan intervals over the loop used by [`find_vertices`].
const VERTEX_SCAN: usize = 4096;

/// Derivatives of `(x(t), y(t))` with respect to `t`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Derivatives {
    pub first: Vec2,
    pub second: Vec2,
}

/// Local differential data at one loop parameter, oriented along increasing `ξ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame {
    pub phi: f64,
    pub point: Point2,
    /// Tangent vector `dz/dφ`.
    pub velocity: Vec2,
    pub k: f64,
    /// `dk/dφ`.
    pub dk_dphi: f64,
}

impl Frame {
    pub fn speed(&self) -> f64 {
        self.velocity.length()
    }

    pub fn tau(&self) -> f64 {
        self.velocity.atan2()
    }

    /// `dk/ds`.
    pub fn dk_ds(&self) -> f64 {
        self.dk_dphi / self.speed()
    }
}

/// One sample of the curvature profile of the transition arc.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvatureSample {
    /// Rational parameter, running from `0` down to `−∞`.
    pub t: f64,
    /// Arc length from A.
    pub s: f64,
    pub k: f64,
    /// Unwrapped tangent angle, starting at the closed-form value at A.
    pub tau: f64,
}

/// A curvature extremum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    /// Rational parameter; `−∞` denotes B.
    pub t: f64,
    pub phi: f64,
    pub k: f64,
}

impl Vertex {
    /// Whether the vertex is strictly inside the transition arc.
    pub fn is_interior_to_transition(&self) -> bool {
        self.phi > 0.0 && self.phi < 2.0
    }
}

/// Outcome of a sampled monotonicity test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    /// No successive difference opposes the overall trend by more than the tolerance.
    pub monotone: bool,
    /// Every successive difference is nonzero and follows the trend.
    pub strict: bool,
    pub increasing: bool,
    /// Largest successive difference against the trend (0 if none).
    pub worst_violation: f64,
    pub tolerance: f64,
    pub max_abs_k: f64,
    pub samples: usize,
    /// Samples skipped because the curvature was not finite (cusp).
    pub singular_samples: usize,
}

/// Cached charts for one curve.
#[derive(Clone, Debug)]
pub struct LimaconCurve {
    params: LimaconParams,
    chart_t: RationalCurve,
    chart_v: RationalCurve,
}

impl LimaconCurve {
    pub fn new(params: LimaconParams) -> Self {
        LimaconCurve {
            params,
            chart_t: params.chart_t(),
            chart_v: params.chart_v(),
        }
    }

    pub fn params(&self) -> &LimaconParams {
        &self.params
    }

    fn scale(&self) -> f64 {
        self.params.f().abs()
    }

    /// Loop parameter of the cusp, if any.
    fn cusp_phi(&self) -> Option<f64> {
        let mu = self.params.mu();
        if mu == 1.0 {
            Some(2.0)
        } else if mu == -1.0 {
            Some(0.0)
        } else {
            None
        }
    }

    /// Chart jet at `phi` with `ds/dφ = ±1` for the chart variable `s`.
    fn chart_jet(&self, phi: f64) -> (Jet, f64) {
        let phi = phi.rem_euclid(4.0);
        if phi <= 1.0 {
            (self.chart_t.jet(-phi), -1.0)
        } else if phi < 3.0 {
            (self.chart_v.jet(phi - 2.0), 1.0)
        } else {
            (self.chart_t.jet(4.0 - phi), -1.0)
        }
    }

    pub fn frame(&self, phi: f64) -> Frame {
        let (jet, o) = self.chart_jet(phi);
        Frame {
            phi,
            point: jet.point,
            velocity: jet.d1 * o,
            k: o * jet.curvature(),
            dk_dphi: jet.curvature_param_derivative(),
        }
    }

    pub fn point(&self, phi: f64) -> Point2 {
        self.chart_jet(phi).0.point
    }

    fn speed(&self, phi: f64) -> f64 {
        self.chart_jet(phi).0.d1.length()
    }

    fn regular_frame(&self, phi: f64) -> Result<Frame> {
        let fr = self.frame(phi);
        if !(fr.speed() >= SINGULAR_SPEED * self.scale()) {
            return Err(Error::SingularPoint(t_from_phi(phi)));
        }
        Ok(fr)
    }

    /// Arc length over `[phi0, phi1] ⊂ [0, 4]`, signed by the bound order.
    pub fn arc_length_phi(&self, phi0: f64, phi1: f64, tol: f64) -> Result<f64> {
        let (lo, hi, sign) = if phi0 <= phi1 {
            (phi0, phi1, 1.0)
        } else {
            (phi1, phi0, -1.0)
        };
        if let Some(c) = self.cusp_phi() {
            if (lo <= c && c <= hi) || (c == 0.0 && hi >= 4.0) {
                return Err(Error::SingularPoint(t_from_phi(c)));
            }
        }
        let mut cuts = vec![lo];
        cuts.extend([1.0, 3.0].into_iter().filter(|&b| lo < b && b < hi));
        cuts.push(hi);
        let pieces = (cuts.len() - 1) as f64;
        let total: f64 = cuts
            .windows(2)
            .map(|w| integrate(|p| self.speed(p), w[0], w[1], tol / pieces).value)
            .sum();
        Ok(sign * total)
    }

    /// Unwrapped change of the tangent angle from `phi0` to `phi1`.
    pub fn turning_between(&self, phi0: f64, phi1: f64) -> f64 {
        let a = self.frame(phi0);
        let b = self.frame(phi1);
        self.turn_rec(a, b, 0)
    }

    fn turn_rec(&self, a: Frame, b: Frame, depth: u32) -> f64 {
        let d = angle_diff(a.tau(), b.tau());
        let mid = self.frame(0.5 * (a.phi + b.phi));
        // coarse bound on the turn inside the interval
        let est = (mid.k * mid.speed() * (b.phi - a.phi)).abs();
        if depth >= 60 || (depth >= 2 && d.abs() < 0.25 && est < 0.5) || !est.is_finite() {
            return d;
        }
        self.turn_rec(a, mid, depth + 1) + self.turn_rec(mid, b, depth + 1)
    }

    /// Smallest `φ ∈ [phi0, 2]` at which the arc length from A reaches `target`,
    /// starting from a known `(phi0, s0)`.
    fn advance_to_length(&self, phi0: f64, s0: f64, target: f64, tol: f64) -> Result<f64> {
        let mut lo = phi0;
        let mut hi = 2.0;
        let mut phi = phi0;
        let mut s = s0;
        for _ in 0..100 {
            let g = s - target;
            if g.abs() <= tol {
                return Ok(phi);
            }
            if g < 0.0 {
                lo = phi;
            } else {
                hi = phi;
            }
            let sp = self.speed(phi);
            let mut next = phi - g / sp;
            if !(next > lo && next < hi) || !next.is_finite() {
                next = 0.5 * (lo + hi);
            }
            s += self.arc_length_phi(phi, next, 0.01 * tol)?;
            phi = next;
            if hi - lo <= 1e-15 {
                break;
            }
        }
        Ok(phi)
    }
}

/// Rational parameter of loop parameter `phi`; `φ = 2` maps to `−∞`.
pub fn t_from_phi(phi: f64) -> f64 {
    let phi = phi.rem_euclid(4.0);
    if phi <= 1.0 {
        -phi
    } else if phi < 3.0 {
        if phi == 2.0 {
            f64::NEG_INFINITY
        } else {
            (phi - 2.0).recip()
        }
    } else {
        4.0 - phi
    }
}

/// Loop parameter of rational parameter `t` (both infinities map to 2).
pub fn phi_from_t(t: f64) -> f64 {
    if t.is_infinite() {
        2.0
    } else if t == 0.0 {
        0.0
    } else if t.abs() > 1.0 {
        2.0 + t.recip()
    } else if t < 0.0 {
        -t
    } else {
        4.0 - t
    }
}

/// Clustered grid on `[0, 2]`: dense near both endpoints.
pub(crate) fn transition_grid(n: usize) -> Vec<f64> {
    let m = (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == 0 {
                0.0
            } else if i == n - 1 {
                2.0
            } else {
                1.0 - (PI * i as f64 / m).cos()
            }
        })
        .collect()
}

/// Analytic first and second derivatives of the rational parametrization.
pub fn derivatives(params: &LimaconParams, t: f64) -> Derivatives {
    let jet = params.chart_t().jet(t);
    Derivatives {
        first: jet.d1,
        second: jet.d2,
    }
}

/// Signed curvature at rational parameter `t` (orientation of increasing `ξ`).
///
/// `t = ±∞` addresses B. Fails at a cusp.
pub fn curvature_at(params: &LimaconParams, t: f64) -> Result<f64> {
    let curve = LimaconCurve::new(*params);
    Ok(curve.regular_frame(phi_from_t(t))?.k)
}

/// Curvature at B, the limit `t → ±∞`.
pub fn curvature_at_infinity(params: &LimaconParams) -> Result<f64> {
    curvature_at(params, f64::INFINITY)
}

/// Tangent angle at `t`, in `(−π, π]`.
pub fn tangent_angle_at(params: &LimaconParams, t: f64) -> Result<f64> {
    let curve = LimaconCurve::new(*params);
    Ok(curve.regular_frame(phi_from_t(t))?.tau())
}

/// `dk/ds` at A and at B. Both vanish for a G³ join with the end circles.
pub fn endpoint_curvature_slopes(params: &LimaconParams) -> Result<(f64, f64)> {
    let curve = LimaconCurve::new(*params);
    Ok((
        curve.regular_frame(0.0)?.dk_ds(),
        curve.regular_frame(2.0)?.dk_ds(),
    ))
}

/// Arc length `∫|z'(t)| dt` from `t0` to `t1` (either may be infinite),
/// negative when `t1 < t0`. Tolerance is `ARC_LENGTH_TOL · |f|`.
pub fn arc_length(params: &LimaconParams, t0: f64, t1: f64) -> Result<f64> {
    arc_length_with_tol(params, t0, t1, ARC_LENGTH_TOL * params.f().abs())
}

/// [`arc_length`] with an explicit absolute tolerance.
pub fn arc_length_with_tol(params: &LimaconParams, t0: f64, t1: f64, tol: f64) -> Result<f64> {
    if t0.is_nan() || t1.is_nan() {
        return Err(Error::InvalidParameter("NaN parameter".into()));
    }
    if t0 == t1 {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if t0 < t1 {
        (t0, t1, 1.0)
    } else {
        (t1, t0, -1.0)
    };
    let mu = params.mu();
    if (mu == -1.0 && lo <= 0.0 && 0.0 <= hi)
        || (mu == 1.0 && (lo.is_infinite() || hi.is_infinite()))
    {
        let at = if mu == -1.0 { 0.0 } else { f64::INFINITY };
        return Err(Error::SingularPoint(at));
    }
    let ct = params.chart_t();
    let cv = params.chart_v();
    // pieces in the t chart (|t| ≤ 1) or the v chart (|t| ≥ 1)
    let mut cuts = vec![lo];
    cuts.extend([-1.0, 1.0].into_iter().filter(|&b| lo < b && b < hi));
    cuts.push(hi);
    let pieces = (cuts.len() - 1) as f64;
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = 0.5 * (a + b);
        if mid.abs() <= 1.0 && a.is_finite() && b.is_finite() {
            total += integrate(|t| ct.jet(t).d1.length(), a, b, tol / pieces).value;
        } else {
            // ∫_a^b |z'(t)| dt = ∫_{1/b}^{1/a} |z̃'(v)| dv for a, b of one sign
            total += integrate(
                |v| cv.jet(v).d1.length(),
                b.recip(),
                a.recip(),
                tol / pieces,
            )
            .value;
        }
    }
    Ok(sign * total)
}

/// Length of the transition arc from A to B.
pub fn transition_length(params: &LimaconParams) -> Result<f64> {
    LimaconCurve::new(*params).arc_length_phi(0.0, 2.0, ARC_LENGTH_TOL * params.f().abs())
}

/// Total unwrapped turning of the tangent over the transition arc.
///
/// Only defined for the spiral regime `|μ| > 1`, where it equals `2π`.
pub fn turning_angle(params: &LimaconParams) -> Result<f64> {
    if params.mu().abs() <= 1.0 {
        return Err(Error::NotSpiralRegime);
    }
    let curve = LimaconCurve::new(*params);
    let grid = transition_grid(65);
    Ok(grid
        .windows(2)
        .map(|w| curve.turning_between(w[0], w[1]))
        .sum())
}

/// Samples curvature on `n_samples` points of the transition arc, clustered
/// near both ends, and checks that successive differences keep one sign up
/// to `1e−12 · max|k|`.
pub fn is_monotone_curvature(params: &LimaconParams, n_samples: usize) -> MonotonicityReport {
    let n = n_samples.max(2);
    let curve = LimaconCurve::new(*params);
    let ks: Vec<f64> = transition_grid(n)
        .into_iter()
        .map(|phi| curve.frame(phi).k)
        .collect();
    let finite: Vec<f64> = ks.iter().copied().filter(|k| k.is_finite()).collect();
    let singular_samples = ks.len() - finite.len();
    let max_abs_k = finite.iter().fold(0.0f64, |m, k| m.max(k.abs()));
    let tolerance = 1e-12 * max_abs_k;
    let increasing = finite.last().unwrap_or(&0.0) >= finite.first().unwrap_or(&0.0);
    let dir = if increasing { 1.0 } else { -1.0 };
    let mut worst = 0.0f64;
    let mut strict = finite.len() >= 2;
    for w in finite.windows(2) {
        let d = dir * (w[1] - w[0]);
        if d <= 0.0 {
            strict = false;
            worst = worst.max(-d);
        }
    }
    MonotonicityReport {
        monotone: finite.len() >= 2 && worst <= tolerance,
        strict,
        increasing,
        worst_violation: worst,
        tolerance,
        max_abs_k,
        samples: n,
        singular_samples,
    }
}

/// `n` samples `(t, s, k, τ)` along the transition arc, clustered near the ends.
pub fn curvature_profile(params: &LimaconParams, n: usize) -> Result<Vec<CurvatureSample>> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "profile needs at least 2 samples".into(),
        ));
    }
    let curve = LimaconCurve::new(*params);
    let grid = transition_grid(n);
    let tol = ARC_LENGTH_TOL * params.f().abs() / (n - 1) as f64;
    let first = curve.regular_frame(0.0)?;
    curve.regular_frame(2.0)?;
    let mut out = Vec::with_capacity(n);
    let mut s = 0.0;
    let mut tau = first.tau();
    out.push(CurvatureSample {
        t: 0.0,
        s,
        k: first.k,
        tau,
    });
    for w in grid.windows(2) {
        s += curve.arc_length_phi(w[0], w[1], tol)?;
        tau += curve.turning_between(w[0], w[1]);
        out.push(CurvatureSample {
            t: t_from_phi(w[1]),
            s,
            k: curve.frame(w[1]).k,
            tau,
        });
    }
    Ok(out)
}

/// Loop parameters on the transition arc at the given arc lengths from A
/// (which must be sorted ascending and lie in `[0, length]`).
pub fn phis_at_arc_lengths(params: &LimaconParams, lengths: &[f64]) -> Result<Vec<f64>> {
    let curve = LimaconCurve::new(*params);
    let tol = ARC_LENGTH_TOL * params.f().abs();
    let mut phi = 0.0;
    let mut s = 0.0;
    let mut out = Vec::with_capacity(lengths.len());
    for &target in lengths {
        if target < s - tol {
            return Err(Error::InvalidParameter(
                "arc lengths must be ascending".into(),
            ));
        }
        let next = curve.advance_to_length(phi, s, target, tol)?;
        s += curve.arc_length_phi(phi, next, 0.01 * tol)?;
        phi = next;
        out.push(phi);
    }
    Ok(out)
}

/// Curvature extrema over the whole closed curve, sorted by `t`.
///
/// `dk/dφ` is scanned on a uniform loop grid; sign changes are refined by
/// bisection to `1e−10` in the chart parameter. The two ends of the transition
/// (A at `t = 0`, B at `t = −∞`) are always candidates because the curve is
/// symmetric about the x-axis there.
pub fn find_vertices(params: &LimaconParams) -> Vec<Vertex> {
    let curve = LimaconCurve::new(*params);
    let n = VERTEX_SCAN;
    let h = 4.0 / n as f64;
    let d: Vec<f64> = (0..n).map(|i| curve.frame(h * i as f64).dk_dphi).collect();
    let mut out = Vec::new();
    for i in 0..n {
        let prev = d[(i + n - 1) % n];
        let cur = d[i];
        let next = d[(i + 1) % n];
        let phi = h * i as f64;
        if !(prev.is_finite() && cur.is_finite() && next.is_finite()) {
            continue;
        }
        if cur == 0.0 {
            if prev * next < 0.0 {
                out.push(phi);
            }
        } else if cur * next < 0.0 {
            let (mut lo, mut hi) = (phi, phi + h);
            let slo = cur.signum();
            while hi - lo > 1e-10 {
                let mid = 0.5 * (lo + hi);
                let dm = curve.frame(mid).dk_dphi;
                if dm == 0.0 {
                    lo = mid;
                    hi = mid;
                } else if dm.signum() == slo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
    }
    let mut vertices: Vec<Vertex> = out
        .into_iter()
        .map(|phi| {
            let phi = phi.rem_euclid(4.0);
            Vertex {
                t: t_from_phi(phi),
                phi,
                k: curve.frame(phi).k,
            }
        })
        .collect();
    vertices.sort_by(|a, b| a.t.total_cmp(&b.t));
    vertices
}
