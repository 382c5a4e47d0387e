// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Polynomial rational curves with exact derivatives up to third order.
//!
//! A [`RationalCurve`] is `offset + (X(s), Y(s)) / W(s)` with polynomial
//! numerators and a shared denominator. Derivatives of the quotient follow
//! from differentiating `X = x·W` repeatedly, so no symbolic expansion of the
//! (large) curvature-derivative formula is needed.

use crate::geom::{Point2, Vec2};

/// Dense polynomial, coefficients in ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Self {
        Poly(coeffs.into())
    }

    pub fn constant(c: f64) -> Self {
        Poly(vec![c])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * s + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly(vec![0.0]);
        }
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    pub fn scale(&self, k: f64) -> Poly {
        Poly(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0.0) + other.0.get(i).unwrap_or(&0.0))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    /// Value and first three derivatives.
    fn eval_jet(&self, derivs: &[Poly; 3], s: f64) -> [f64; 4] {
        [
            self.eval(s),
            derivs[0].eval(s),
            derivs[1].eval(s),
            derivs[2].eval(s),
        ]
    }
}

fn derivative_chain(p: &Poly) -> [Poly; 3] {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    [d1, d2, d3]
}

/// Derivatives of `n / w` from the jets of `n` and `w`.
fn quotient_jet(n: [f64; 4], w: [f64; 4]) -> [f64; 4] {
    let q0 = n[0] / w[0];
    let q1 = (n[1] - q0 * w[1]) / w[0];
    let q2 = (n[2] - 2.0 * q1 * w[1] - q0 * w[2]) / w[0];
    let q3 = (n[3] - 3.0 * q2 * w[1] - 3.0 * q1 * w[2] - q0 * w[3]) / w[0];
    [q0, q1, q2, q3]
}

/// Position and first three derivatives of a parametrized curve at one parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub point: Point2,
    pub d1: Vec2,
    pub d2: Vec2,
    pub d3: Vec2,
}

impl Jet {
    pub fn speed(&self) -> f64 {
        self.d1.length()
    }

    /// Signed curvature in the direction of increasing parameter.
    pub fn curvature(&self) -> f64 {
        self.d1.cross(self.d2) / self.d1.hypot2().powf(1.5)
    }

    /// Derivative of the signed curvature with respect to the parameter.
    pub fn curvature_param_derivative(&self) -> f64 {
        let v2 = self.d1.hypot2();
        let c = self.d1.cross(self.d2);
        let cd = self.d1.cross(self.d3);
        let vd = self.d1.dot(self.d2);
        (cd * v2 - 3.0 * c * vd) / v2.powf(2.5)
    }

    /// Derivative of curvature with respect to arc length.
    pub fn curvature_arc_derivative(&self) -> f64 {
        self.curvature_param_derivative() / self.speed()
    }
}

/// `offset + (X(s), Y(s)) / W(s)`.
#[derive(Clone, Debug)]
pub struct RationalCurve {
    offset: Vec2,
    x: Poly,
    y: Poly,
    w: Poly,
    dx: [Poly; 3],
    dy: [Poly; 3],
    dw: [Poly; 3],
}

impl RationalCurve {
    pub fn new(offset: Vec2, x: Poly, y: Poly, w: Poly) -> Self {
        let dx = derivative_chain(&x);
        let dy = derivative_chain(&y);
        let dw = derivative_chain(&w);
        RationalCurve {
            offset,
            x,
            y,
            w,
            dx,
            dy,
            dw,
        }
    }

    pub fn eval(&self, s: f64) -> Point2 {
        let w = self.w.eval(s);
        Point2::new(self.x.eval(s) / w, self.y.eval(s) / w) + self.offset
    }

    pub fn jet(&self, s: f64) -> Jet {
        let w = self.w.eval_jet(&self.dw, s);
        let x = quotient_jet(self.x.eval_jet(&self.dx, s), w);
        let y = quotient_jet(self.y.eval_jet(&self.dy, s), w);
        Jet {
            point: Point2::new(x[0], y[0]) + self.offset,
            d1: Vec2::new(x[1], y[1]),
            d2: Vec2::new(x[2], y[2]),
            d3: Vec2::new(x[3], y[3]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic() {
        // (1 + s)(1 - s) = 1 - s²
        let p = Poly::new([1.0, 1.0]).mul(&Poly::new([1.0, -1.0]));
        assert_eq!(p, Poly::new([1.0, 0.0, -1.0]));
        assert_eq!(p.derivative(), Poly::new([0.0, -2.0]));
        assert_eq!(p.eval(3.0), -8.0);
        assert_eq!(p.add(&Poly::constant(1.0)).eval(2.0), -2.0);
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn unit_circle_jet() {
        // ((1 - s²), 2s) / (1 + s²) is the unit circle, curvature 1.
        let c = RationalCurve::new(
            Vec2::ZERO,
            Poly::new([1.0, 0.0, -1.0]),
            Poly::new([0.0, 2.0]),
            Poly::new([1.0, 0.0, 1.0]),
        );
        for &s in &[-3.0, -0.4, 0.0, 0.25, 2.0] {
            let j = c.jet(s);
            assert!((j.point.to_vec2().length() - 1.0).abs() < 1e-14);
            assert!((j.curvature() - 1.0).abs() < 1e-13);
            assert!(j.curvature_param_derivative().abs() < 1e-12);
        }
    }

    #[test]
    fn quotient_jet_matches_finite_differences() {
        let c = RationalCurve::new(
            Vec2::new(0.5, -1.0),
            Poly::new([1.0, -2.0, 0.5, 3.0]),
            Poly::new([0.0, 1.0, 0.0, -1.0, 0.25]),
            Poly::new([2.0, 0.0, 1.0, 0.0, 1.0]),
        );
        let s = 0.37;
        let h = 1e-4;
        let j = c.jet(s);
        let jp = c.jet(s + h);
        let jm = c.jet(s - h);
        let fd2 = (jp.d1 - jm.d1) * (0.5 / h);
        let fd3 = (jp.d2 - jm.d2) * (0.5 / h);
        assert!((fd2 - j.d2).length() < 1e-6);
        assert!((fd3 - j.d3).length() < 1e-6);
        // Richardson-extrapolated central difference
        let cd = |h: f64| (c.jet(s + h).curvature() - c.jet(s - h).curvature()) / (2.0 * h);
        let fdk = (4.0 * cd(h / 2.0) - cd(h)) / 3.0;
        let dk = j.curvature_param_derivative();
        assert!((fdk - dk).abs() < 1e-6 * dk.abs().max(1.0), "{fdk} vs {dk}");
    }
}
