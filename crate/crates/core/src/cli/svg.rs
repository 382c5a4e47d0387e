// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Minimal SVG 1.1 writer.
//!
//! Drawings are built in world coordinates (y up); the document flips them
//! into the y-down viewport with an explicit transform.

use std::fmt::Write;

use super::output::fmt_num;
use crate::geom::Point2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stroke {
    Solid,
    Thin,
    Dashed,
    DashDot,
}

#[derive(Clone, Debug, PartialEq)]
enum Item {
    Path {
        points: Vec<Point2>,
        closed: bool,
        stroke: Stroke,
    },
    Circle {
        center: Point2,
        radius: f64,
        stroke: Stroke,
    },
    Dot {
        center: Point2,
    },
}

/// World-coordinate drawing with a bounding box.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Drawing {
    items: Vec<Item>,
    min: Option<(f64, f64)>,
    max: Option<(f64, f64)>,
}

impl Drawing {
    pub fn new() -> Self {
        Self::default()
    }

    fn include(&mut self, p: Point2, pad: f64) {
        if !p.is_finite() {
            return;
        }
        let (x0, y0) = self.min.unwrap_or((p.x - pad, p.y - pad));
        let (x1, y1) = self.max.unwrap_or((p.x + pad, p.y + pad));
        self.min = Some((x0.min(p.x - pad), y0.min(p.y - pad)));
        self.max = Some((x1.max(p.x + pad), y1.max(p.y + pad)));
    }

    pub fn path(&mut self, points: Vec<Point2>, closed: bool, stroke: Stroke) {
        for &p in &points {
            self.include(p, 0.0);
        }
        self.items.push(Item::Path {
            points,
            closed,
            stroke,
        });
    }

    pub fn circle(&mut self, center: Point2, radius: f64, stroke: Stroke) {
        self.include(center, radius);
        self.items.push(Item::Circle {
            center,
            radius,
            stroke,
        });
    }

    pub fn dot(&mut self, center: Point2) {
        self.include(center, 0.0);
        self.items.push(Item::Dot { center });
    }

    /// `(min_x, min_y, max_x, max_y)`, or a unit box when empty.
    pub fn bounds(&self) -> (f64, f64, f64, f64) {
        match (self.min, self.max) {
            (Some((x0, y0)), Some((x1, y1))) => (x0, y0, x1, y1),
            _ => (-1.0, -1.0, 1.0, 1.0),
        }
    }

    fn extent(&self) -> f64 {
        let (x0, y0, x1, y1) = self.bounds();
        (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE)
    }

    /// Appends the items to `out` with stroke widths relative to `unit`.
    fn write_items(&self, out: &mut String, unit: f64) {
        let width = fmt_num(0.004 * unit);
        for item in &self.items {
            match item {
                Item::Path {
                    points,
                    closed,
                    stroke,
                } => {
                    let mut d = String::new();
                    for (i, p) in points.iter().enumerate() {
                        let cmd = if i == 0 { 'M' } else { 'L' };
                        let _ = write!(d, "{cmd}{} {} ", fmt_num(p.x), fmt_num(p.y));
                    }
                    if *closed {
                        d.push('Z');
                    }
                    let _ = writeln!(
                        out,
                        "<path d=\"{}\" fill=\"none\" {}/>",
                        d.trim_end(),
                        stroke_attrs(*stroke, unit, &width)
                    );
                }
                Item::Circle {
                    center,
                    radius,
                    stroke,
                } => {
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" {}/>",
                        fmt_num(center.x),
                        fmt_num(center.y),
                        fmt_num(*radius),
                        stroke_attrs(*stroke, unit, &width)
                    );
                }
                Item::Dot { center } => {
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\" stroke=\"none\"/>",
                        fmt_num(center.x),
                        fmt_num(center.y),
                        fmt_num(0.012 * unit)
                    );
                }
            }
        }
    }
}

fn stroke_attrs(stroke: Stroke, unit: f64, width: &str) -> String {
    let dash = |pattern: &[f64]| {
        pattern
            .iter()
            .map(|d| fmt_num(d * unit))
            .collect::<Vec<_>>()
            .join(",")
    };
    match stroke {
        Stroke::Solid => format!("stroke=\"black\" stroke-width=\"{width}\""),
        Stroke::Thin => format!(
            "stroke=\"#888888\" stroke-width=\"{}\"",
            fmt_num(0.002 * unit)
        ),
        Stroke::Dashed => format!(
            "stroke=\"black\" stroke-width=\"{width}\" stroke-dasharray=\"{}\"",
            dash(&[0.02, 0.012])
        ),
        Stroke::DashDot => format!(
            "stroke=\"black\" stroke-width=\"{width}\" stroke-dasharray=\"{}\"",
            dash(&[0.024, 0.008, 0.004, 0.008])
        ),
    }
}

fn header(out: &mut String, view: (f64, f64, f64, f64), width_px: f64) {
    let (x, y, w, h) = view;
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        fmt_num(width_px),
        fmt_num((width_px * h / w).round()),
        fmt_num(x),
        fmt_num(y),
        fmt_num(w),
        fmt_num(h)
    );
}

/// A single-figure document.
pub fn render(drawing: &Drawing) -> String {
    let (x0, y0, x1, y1) = drawing.bounds();
    let unit = drawing.extent();
    let m = 0.05 * unit;
    let mut out = String::new();
    header(
        &mut out,
        (x0 - m, -(y1 + m), x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m),
        640.0,
    );
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    drawing.write_items(&mut out, unit);
    out.push_str("</g>\n</svg>\n");
    out
}

/// One labelled panel per drawing, side by side, each scaled into a unit square.
pub fn render_panels(panels: &[(String, Drawing)]) -> String {
    let cell = 1.2;
    let n = panels.len().max(1) as f64;
    let mut out = String::new();
    header(&mut out, (0.0, 0.0, cell * n, cell + 0.15), 320.0 * n);
    for (i, (label, drawing)) in panels.iter().enumerate() {
        let (x0, y0, x1, y1) = drawing.bounds();
        let unit = drawing.extent();
        let s = 1.0 / unit;
        let cx = 0.5 * (x0 + x1);
        let cy = 0.5 * (y0 + y1);
        let ox = cell * (i as f64 + 0.5);
        let oy = 0.15 + 0.5 * cell;
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"0.1\" font-family=\"serif\" font-size=\"0.08\" text-anchor=\"middle\">{}</text>",
            fmt_num(ox),
            escape(label)
        );
        let _ = writeln!(
            out,
            "<g transform=\"translate({},{}) scale({},{}) translate({},{})\">",
            fmt_num(ox),
            fmt_num(oy),
            fmt_num(s),
            fmt_num(-s),
            fmt_num(-cx),
            fmt_num(-cy)
        );
        drawing.write_items(&mut out, unit);
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
