// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! A limaçon-like quartic spiral.
//!
//! The curve family is traced in polar coordinates as
//! `r(ξ) = f(μ cos ξ + √(2 − cos² ξ))`, with implicit equation
//! `(x² + y² − μfx)² = f²(x² + 2y²)`. Its two extremal circles of curvature
//! (at `ξ = 0` and `ξ = π`) are concentric, and for `|μ| > 1` the arc between
//! them is a spiral: curvature is monotone and the tangent turns by exactly `2π`.
//!
//! Modules:
//!
//! - [`limacon`]: parameters, regime classification, and closed-form evaluation
//!   (polar, rational, implicit, endpoint curvature elements).
//! - [`diffgeo`]: derivatives, curvature, arc length, turning angle, vertices.
//! - [`conic`]: the pre-image conic, circle inversion, midcircle, and the
//!   construction from a canonical hyperbola.
//! - [`normalized`]: the normalized boundary problem and its `u`-parametrization.
//! - [`solver`]: transitions between two concentric directed circles.
//! - [`cli`]: the command-line front end and its SVG/CSV/JSON exporters.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod conic;
pub mod diffgeo;
mod error;
pub mod geom;
pub mod limacon;
pub mod normalized;
pub mod quadrature;
pub mod rational;
pub mod solver;

pub use error::{Error, Result};
pub use geom::{CurvatureElement, Placement, Point2, Vec2};
pub use limacon::{classify, EndpointData, LimaconParams, RegimeClass};
