// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Small planar primitives: points, vectors, curvature elements and rigid placements.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A point in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// A displacement in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn to_vec2(self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    #[inline]
    pub fn distance(self, other: Point2) -> f64 {
        (self - other).length()
    }

    /// Reflection about the x-axis.
    #[inline]
    pub fn mirror(self) -> Point2 {
        Point2::new(self.x, -self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    #[inline]
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Vec2::new(c, s)
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn hypot2(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn length(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn atan2(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Rotation by +90°.
    #[inline]
    pub fn turn_left(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    #[inline]
    pub fn rotate(self, theta: f64) -> Vec2 {
        let (s, c) = theta.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add<Vec2> for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, v: Vec2) -> Point2 {
        Point2::new(self.x + v.x, self.y + v.y)
    }
}

impl Sub<Vec2> for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, v: Vec2) -> Point2 {
        Point2::new(self.x - v.x, self.y - v.y)
    }
}

impl Sub for Point2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, other: Point2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, v: Vec2) -> Vec2 {
        Vec2::new(self.x + v.x, self.y + v.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, v: Vec2) -> Vec2 {
        Vec2::new(self.x - v.x, self.y - v.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Wraps an angle into `(-π, π]`.
pub fn normalize_angle(theta: f64) -> f64 {
    let r = (theta + PI).rem_euclid(TAU) - PI;
    if r <= -PI {
        r + TAU
    } else {
        r
    }
}

/// Signed difference `b - a` wrapped into `(-π, π]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    normalize_angle(b - a)
}

/// A point with a unit tangent direction and a signed curvature.
///
/// The tangent is `(cos tau, sin tau)`; positive curvature turns left.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvatureElement {
    pub point: Point2,
    pub tau: f64,
    pub k: f64,
}

impl CurvatureElement {
    pub fn new(point: Point2, tau: f64, k: f64) -> Self {
        CurvatureElement {
            point,
            tau: normalize_angle(tau),
            k,
        }
    }

    pub fn tangent(&self) -> Vec2 {
        Vec2::from_angle(self.tau)
    }

    pub fn normal(&self) -> Vec2 {
        self.tangent().turn_left()
    }

    /// Center of the osculating circle, `None` for a flat element.
    pub fn center(&self) -> Option<Point2> {
        (self.k != 0.0).then(|| self.point + self.normal() * self.k.recip())
    }

    /// Radius of curvature, infinite for a flat element.
    pub fn radius(&self) -> f64 {
        self.k.abs().recip()
    }
}

/// A rigid motion `p ↦ R(rotation)·F(p) + translation`, where `F` is the
/// reflection about the x-axis when `reflect` is set and the identity otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Placement {
    pub rotation: f64,
    pub translation: Vec2,
    pub reflect: bool,
}

impl Default for Placement {
    fn default() -> Self {
        Placement::IDENTITY
    }
}

impl Placement {
    pub const IDENTITY: Placement = Placement {
        rotation: 0.0,
        translation: Vec2::ZERO,
        reflect: false,
    };

    /// Placement that moves `pivot` to `target`, reflecting about the
    /// horizontal line through `pivot` first if requested, then rotating
    /// about it by `rotation`.
    pub fn about(pivot: Point2, target: Point2, rotation: f64, reflect: bool) -> Self {
        let linear = Placement {
            rotation,
            translation: Vec2::ZERO,
            reflect,
        };
        let moved = linear.apply_vec(pivot.to_vec2());
        Placement {
            rotation,
            translation: target.to_vec2() - moved,
            reflect,
        }
    }

    #[inline]
    pub fn apply_vec(&self, v: Vec2) -> Vec2 {
        let v = if self.reflect {
            Vec2::new(v.x, -v.y)
        } else {
            v
        };
        v.rotate(self.rotation)
    }

    #[inline]
    pub fn apply(&self, p: Point2) -> Point2 {
        Point2::ORIGIN + (self.apply_vec(p.to_vec2()) + self.translation)
    }

    pub fn apply_angle(&self, tau: f64) -> f64 {
        let tau = if self.reflect { -tau } else { tau };
        normalize_angle(tau + self.rotation)
    }

    pub fn apply_element(&self, e: &CurvatureElement) -> CurvatureElement {
        CurvatureElement::new(
            self.apply(e.point),
            self.apply_angle(e.tau),
            if self.reflect { -e.k } else { e.k },
        )
    }

    /// Placement applied after `self`.
    pub fn then(&self, after: &Placement) -> Placement {
        let reflect = self.reflect != after.reflect;
        let rotation = if after.reflect {
            after.rotation - self.rotation
        } else {
            after.rotation + self.rotation
        };
        Placement {
            rotation,
            translation: after.apply_vec(self.translation) + after.translation,
            reflect,
        }
    }
}
