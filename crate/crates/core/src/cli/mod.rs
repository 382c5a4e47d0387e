// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Command-line front end.
//!
//! Every subcommand writes a JSON report (to `--json PATH`, or to stdout when
//! no path is given); figures and tables go to `--svg` and `--csv`. Exit status
//! is 0 on success, 1 on a numerical failure and 2 on invalid input, with a
//! JSON error object on stderr in both failure cases.

pub mod output;
pub mod svg;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::conic::{
    conic_from_params, construct_by_inversion, duality_samples, eccentricity_for_mu,
    limacon_conic_duality_check, midcircle, CanonicalHyperbola, Circle, ConicType,
};
use crate::diffgeo::{
    curvature_profile, find_vertices, is_monotone_curvature, transition_grid, transition_length,
    turning_angle, LimaconCurve, MonotonicityReport, Vertex,
};
use crate::limacon::{
    classify, endpoint_elements, implicit_residual, mu_from_ratio, sample_polar, EndpointData,
    LimaconParams, RegimeClass,
};
use crate::solver::{diagnose, solve_transition_with, DirectedCircle, SolverConfig, Winding};
use crate::{Error, Point2};
use output::{envelope, to_csv, to_json};
use svg::{render, render_panels, Drawing, Stroke};

#[derive(Parser, Clone, Debug, Serialize)]
#[command(
    name = "limacon",
    version,
    about = "Limaçon-like spiral: curves, profiles and concentric transitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub job: JobConfig,
}

/// One job per invocation.
#[derive(Subcommand, Clone, Debug, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum JobConfig {
    /// Draw the curve, its transition arc and extremal circles.
    Trace(TraceArgs),
    /// Fit the transition between two concentric directed circles.
    Solve(SolveArgs),
    /// Curvature against arc length along the transition arc.
    Profile(ProfileArgs),
    /// Regime of a shape parameter.
    Classify(ClassifyArgs),
    /// Check the inverse conic of the curve.
    Duality(DualityArgs),
    /// Build the curve by inverting a canonical hyperbola.
    Construct(ConstructArgs),
    /// One panel per shape parameter.
    Gallery(GalleryArgs),
}

/// Curve selection: `--mu` directly, or `--kappa` with the two windings.
#[derive(Args, Clone, Debug, Serialize)]
pub struct CurveArgs {
    /// Shape parameter μ.
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "kappa",
        conflicts_with = "kappa"
    )]
    pub mu: Option<f64>,
    /// Square root of the ratio of the extremal radii of curvature.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<f64>,
    /// Length scale f.
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    pub f: f64,
    /// Winding of the inner circle (+1 or -1), used with --kappa.
    #[arg(long, allow_hyphen_values = true, default_value = "1", value_parser = parse_winding)]
    pub winding_inner: Winding,
    /// Winding of the outer circle (+1 or -1), used with --kappa.
    #[arg(long, allow_hyphen_values = true, default_value = "1", value_parser = parse_winding)]
    pub winding_outer: Winding,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct TraceArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Samples along the transition arc and around the closed curve.
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Transition arc samples as `phi,x,y`.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct SolveArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub inner_radius: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub outer_radius: f64,
    /// Common center.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub center_x: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub center_y: f64,
    /// Separate center of the inner circle (defaults to the common center).
    #[arg(long, allow_hyphen_values = true)]
    pub inner_center_x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub inner_center_y: Option<f64>,
    #[arg(long, allow_hyphen_values = true, default_value = "1", value_parser = parse_winding)]
    pub winding_inner: Winding,
    #[arg(long, allow_hyphen_values = true, default_value = "1", value_parser = parse_winding)]
    pub winding_outer: Winding,
    /// Direction of the outer endpoint as seen from the center, in radians.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub anchor: f64,
    /// Concentricity tolerance relative to the larger radius.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, default_value_t = 256)]
    pub n: usize,
    /// `s,k` table.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: f64,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct DualityArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, default_value_t = 128)]
    pub n: usize,
    /// Acceptance threshold for the conic residual.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct ConstructArgs {
    /// Real semi-axis of the hyperbola.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Imaginary semi-axis; defaults to the value that makes the images concentric.
    #[arg(long, conflicts_with = "ecc")]
    pub b: Option<f64>,
    /// Eccentricity, instead of `--b`.
    #[arg(long)]
    pub ecc: Option<f64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 3.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 256)]
    pub n: usize,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct GalleryArgs {
    /// Comma-separated shape parameters, one panel each (repeatable).
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub mu: Vec<f64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    pub f: f64,
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

fn parse_winding(s: &str) -> std::result::Result<Winding, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "+1" | "ccw" => Ok(Winding::CounterClockwise),
        "-1" | "cw" => Ok(Winding::Clockwise),
        _ => Err(format!("expected +1, -1, ccw or cw, got {s:?}")),
    }
}

/// A failed job.
#[derive(Clone, Debug, PartialEq)]
pub enum Failure {
    Validation { kind: String, message: String },
    Numerical { kind: String, message: String },
}

impl Failure {
    fn validation(kind: &str, message: impl Into<String>) -> Self {
        Failure::Validation {
            kind: kind.into(),
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Validation { .. } => 2,
            Failure::Numerical { .. } => 1,
        }
    }

    fn to_json(&self) -> String {
        let (kind, message) = match self {
            Failure::Validation { kind, message } | Failure::Numerical { kind, message } => {
                (kind, message)
            }
        };
        let v = json!({
            "schema": 1,
            "exit_code": self.exit_code(),
            "error": { "kind": kind, "message": message },
        });
        let mut s = v.to_string();
        s.push('\n');
        s
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidParameter(_) => "InvalidParameter",
        Error::SingularEndpoint => "SingularEndpoint",
        Error::UnitRatio => "UnitRatio",
        Error::UnitKappa => "UnitKappa",
        Error::NoIntersection => "NoIntersection",
        Error::DegenerateMu => "DegenerateMu",
        Error::SingularPoint(_) => "SingularPoint",
        Error::NotSpiralRegime => "NotSpiralRegime",
        Error::PoleAtCenter => "PoleAtCenter",
        Error::OppositeWinding => "OppositeWinding",
        Error::InversionPoleOnCurve => "InversionPoleOnCurve",
        Error::NoCorrespondence(_) => "NoCorrespondence",
        Error::NotConcentric { .. } => "NotConcentric",
        Error::DegenerateEqualCircles => "DegenerateEqualCircles",
        Error::RatioMinusOne => "RatioMinusOne",
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = error_kind(&e).to_string();
        let message = e.to_string();
        if e.is_validation() {
            Failure::Validation { kind, message }
        } else {
            Failure::Numerical { kind, message }
        }
    }
}

type JobResult<T> = std::result::Result<T, Failure>;

/// Parses `args` (including the program name), runs the job and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let failure = Failure::validation("Usage", e.to_string().trim_end());
            let _ = stderr.write_all(failure.to_json().as_bytes());
            return failure.exit_code();
        }
    };
    match execute(&cli.job, stderr) {
        Ok(report) => {
            let _ = stdout.write_all(report.as_bytes());
            0
        }
        Err(failure) => {
            let _ = stderr.write_all(failure.to_json().as_bytes());
            failure.exit_code()
        }
    }
}

/// Runs one job, writing its artifacts. Returns whatever belongs on stdout.
pub fn execute(job: &JobConfig, stderr: &mut dyn Write) -> JobResult<String> {
    let (report, json_path) = match job {
        JobConfig::Trace(args) => (trace(job, args)?, &args.json),
        JobConfig::Solve(args) => (solve(job, args)?, &args.json),
        JobConfig::Profile(args) => (profile(job, args)?, &args.json),
        JobConfig::Classify(args) => {
            if !args.mu.is_finite() {
                return Err(Failure::validation("InvalidParameter", "mu must be finite"));
            }
            (
                envelope(job, &json!({ "regime": classify(args.mu) })),
                &args.json,
            )
        }
        JobConfig::Duality(args) => (duality(job, args)?, &args.json),
        JobConfig::Construct(args) => (construct(job, args)?, &args.json),
        JobConfig::Gallery(args) => (gallery(job, args, stderr)?, &args.json),
    };
    let text = to_json(&report);
    match json_path {
        Some(path) => {
            write_file(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn write_file(path: &Path, contents: &str) -> JobResult<()> {
    fs::write(path, contents)
        .map_err(|e| Failure::validation("Io", format!("cannot write {}: {e}", path.display())))
}

fn check_samples(n: usize) -> JobResult<()> {
    if n < 2 {
        return Err(Failure::validation(
            "InvalidParameter",
            format!("--n must be at least 2, got {n}"),
        ));
    }
    Ok(())
}

fn check_tol(tol: f64) -> JobResult<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Failure::validation(
            "InvalidParameter",
            format!("--tol must be positive, got {tol}"),
        ));
    }
    Ok(())
}

fn resolve_params(c: &CurveArgs) -> JobResult<LimaconParams> {
    let mu = match (c.mu, c.kappa) {
        (Some(mu), _) => mu,
        (None, Some(kappa)) => mu_from_ratio(kappa, c.winding_inner == c.winding_outer)?,
        (None, None) => {
            return Err(Failure::validation(
                "Usage",
                "one of --mu or --kappa is required",
            ))
        }
    };
    Ok(LimaconParams::new(mu, c.f)?)
}

fn max_residual<'a>(params: &LimaconParams, points: impl IntoIterator<Item = &'a Point2>) -> f64 {
    points
        .into_iter()
        .map(|p| implicit_residual(params, *p).abs())
        .fold(0.0, f64::max)
}

/// Extremal circles (dashed) and, when both are equally directed, their midcircle (dash-dot).
fn draw_circles(drawing: &mut Drawing, data: &EndpointData) -> Option<Circle> {
    for elem in [data.elem_a, data.elem_b] {
        if let Some(c) = elem.center() {
            drawing.circle(c, elem.radius(), Stroke::Dashed);
        }
    }
    let mid = midcircle(data).ok();
    if let Some(m) = mid {
        drawing.circle(m.center, m.radius, Stroke::DashDot);
    }
    mid
}

#[derive(Serialize)]
struct TraceReport {
    mu: f64,
    f: f64,
    regime: RegimeClass,
    endpoints: Option<EndpointData>,
    midcircle: Option<Circle>,
    transition_length: Option<f64>,
    turning_angle: Option<f64>,
    vertices: Vec<Vertex>,
    max_residual: f64,
}

fn trace(job: &JobConfig, args: &TraceArgs) -> JobResult<serde_json::Value> {
    check_samples(args.n)?;
    let params = resolve_params(&args.curve)?;
    let curve = LimaconCurve::new(params);
    let phis = transition_grid(args.n);
    let arc: Vec<Point2> = phis.iter().map(|&phi| curve.point(phi)).collect();
    let closed = sample_polar(&params, args.n);

    let mut drawing = Drawing::new();
    drawing.path(closed.clone(), true, Stroke::Thin);
    drawing.path(arc.clone(), false, Stroke::Solid);
    let endpoints = endpoint_elements(&params).ok();
    let mid = endpoints
        .as_ref()
        .and_then(|d| draw_circles(&mut drawing, d));

    if let Some(path) = &args.svg {
        write_file(path, &render(&drawing))?;
    }
    if let Some(path) = &args.csv {
        let rows = phis.iter().zip(&arc).map(|(&phi, p)| vec![phi, p.x, p.y]);
        write_file(path, &to_csv(&["phi", "x", "y"], rows))?;
    }
    let report = TraceReport {
        mu: params.mu(),
        f: params.f(),
        regime: params.regime(),
        endpoints,
        midcircle: mid,
        transition_length: transition_length(&params).ok(),
        turning_angle: turning_angle(&params).ok(),
        vertices: find_vertices(&params),
        max_residual: max_residual(&params, arc.iter().chain(&closed)),
    };
    Ok(envelope(job, &report))
}

fn solve(job: &JobConfig, args: &SolveArgs) -> JobResult<serde_json::Value> {
    check_samples(args.n)?;
    check_tol(args.tol)?;
    let center = Point2::new(args.center_x, args.center_y);
    let inner_center = Point2::new(
        args.inner_center_x.unwrap_or(args.center_x),
        args.inner_center_y.unwrap_or(args.center_y),
    );
    let inner = DirectedCircle::new(inner_center, args.inner_radius, args.winding_inner)?;
    let outer = DirectedCircle::new(center, args.outer_radius, args.winding_outer)?;
    let config = SolverConfig {
        tol_concentric: args.tol,
    };
    let solution = solve_transition_with(&inner, &outer, args.anchor, &config)?;
    let diagnostics = diagnose(&solution)?;

    let curve = LimaconCurve::new(solution.params);
    let arc: Vec<Point2> = transition_grid(args.n)
        .into_iter()
        .map(|phi| curve.point(phi))
        .collect();
    let closed = sample_polar(&solution.params, args.n);
    let residual = max_residual(&solution.params, arc.iter().chain(&closed));

    if let Some(path) = &args.svg {
        let place = |pts: &[Point2]| pts.iter().map(|&p| solution.placement.apply(p)).collect();
        let mut drawing = Drawing::new();
        drawing.path(place(&closed), true, Stroke::Thin);
        drawing.path(place(&arc), false, Stroke::Solid);
        draw_circles(&mut drawing, &solution.endpoints);
        write_file(path, &render(&drawing))?;
    }
    Ok(envelope(
        job,
        &json!({
            "solution": solution,
            "diagnostics": diagnostics,
            "max_residual": residual,
        }),
    ))
}

#[derive(Serialize)]
struct ProfileReport {
    mu: f64,
    f: f64,
    regime: RegimeClass,
    samples: usize,
    length: f64,
    k_start: f64,
    k_end: f64,
    monotonicity: MonotonicityReport,
}

fn profile(job: &JobConfig, args: &ProfileArgs) -> JobResult<serde_json::Value> {
    check_samples(args.n)?;
    let params = resolve_params(&args.curve)?;
    let samples = curvature_profile(&params, args.n)?;
    if let Some(path) = &args.csv {
        write_file(
            path,
            &to_csv(&["s", "k"], samples.iter().map(|c| vec![c.s, c.k])),
        )?;
    }
    let (first, last) = (samples[0], samples[samples.len() - 1]);
    let report = ProfileReport {
        mu: params.mu(),
        f: params.f(),
        regime: params.regime(),
        samples: samples.len(),
        length: last.s,
        k_start: first.k,
        k_end: last.k,
        monotonicity: is_monotone_curvature(&params, args.n),
    };
    Ok(envelope(job, &report))
}

fn duality(job: &JobConfig, args: &DualityArgs) -> JobResult<serde_json::Value> {
    check_samples(args.n)?;
    check_tol(args.tol)?;
    let params = resolve_params(&args.curve)?;
    let conic = conic_from_params(&params);
    let residual = limacon_conic_duality_check(&params, &duality_samples(&params, args.n))?;
    let regime = params.regime();
    Ok(envelope(
        job,
        &json!({
            "mu": params.mu(),
            "f": params.f(),
            "regime": regime,
            "conic": conic,
            "conic_type": conic.conic_type(),
            "type_matches_regime": conic.conic_type().matches(regime),
            "inversion_radius": params.f().abs(),
            "max_residual": residual,
            "passed": residual < args.tol,
        }),
    ))
}

fn construct(job: &JobConfig, args: &ConstructArgs) -> JobResult<serde_json::Value> {
    check_samples(args.n)?;
    let hyp = match (args.b, args.ecc) {
        (Some(b), _) => CanonicalHyperbola::new(args.a, b)?,
        (None, Some(e)) => CanonicalHyperbola::from_eccentricity(args.a, e)?,
        (None, None) => {
            CanonicalHyperbola::from_eccentricity(args.a, eccentricity_for_mu(args.mu))?
        }
    };
    let report = construct_by_inversion(&hyp, args.mu, args.n, true)?;
    let member = LimaconParams::new(args.mu, report.canonical_f)?;
    let residual = max_residual(&member, &report.samples);

    if let Some(path) = &args.svg {
        let mut drawing = Drawing::new();
        drawing.path(report.samples.clone(), true, Stroke::Solid);
        for elem in report.vertex_elements {
            if let Some(c) = elem.center() {
                drawing.circle(c, elem.radius(), Stroke::Dashed);
            }
        }
        write_file(path, &render(&drawing))?;
    }
    Ok(envelope(
        job,
        &json!({
            "hyperbola": report.hyperbola,
            "eccentricity": hyp.eccentricity(),
            "required_eccentricity": eccentricity_for_mu(args.mu),
            "mu": report.mu,
            "x0": report.x0,
            "radius": report.radius,
            "vertex_elements": report.vertex_elements,
            "vertex_centers": report.vertex_centers,
            "center_distance": report.center_distance,
            "canonical_f": report.canonical_f,
            "max_residual_vs_family": residual,
            "samples": report.samples.len(),
        }),
    ))
}

#[derive(Serialize)]
struct Panel {
    mu: f64,
    regime: RegimeClass,
    conic_type: ConicType,
    isolated_point: bool,
    max_residual: f64,
}

fn gallery(
    job: &JobConfig,
    args: &GalleryArgs,
    stderr: &mut dyn Write,
) -> JobResult<serde_json::Value> {
    check_samples(args.n)?;
    if args.mu.is_empty() {
        return Err(Failure::validation(
            "EmptyList",
            "gallery needs at least one --mu value",
        ));
    }
    let mut mus: Vec<f64> = Vec::with_capacity(args.mu.len());
    let mut warnings = Vec::new();
    for &mu in &args.mu {
        if mus.contains(&mu) {
            let w = format!("duplicate mu value {mu} ignored");
            let _ = writeln!(stderr, "warning: {w}");
            warnings.push(w);
        } else {
            mus.push(mu);
        }
    }
    let mut panels = Vec::with_capacity(mus.len());
    let mut drawings = Vec::with_capacity(mus.len());
    for &mu in &mus {
        let params = LimaconParams::new(mu, args.f)?;
        let closed = sample_polar(&params, args.n);
        let regime = params.regime();
        let isolated = matches!(regime, RegimeClass::Elliptic | RegimeClass::Lemniscate);
        let mut drawing = Drawing::new();
        drawing.path(closed.clone(), true, Stroke::Solid);
        if isolated {
            drawing.dot(Point2::ORIGIN);
        }
        panels.push(Panel {
            mu,
            regime,
            conic_type: conic_from_params(&params).conic_type(),
            isolated_point: isolated,
            max_residual: max_residual(&params, &closed),
        });
        drawings.push((format!("μ = {} ({regime})", output::fmt_num(mu)), drawing));
    }
    if let Some(path) = &args.svg {
        write_file(path, &render_panels(&drawings))?;
    }
    Ok(envelope(
        job,
        &json!({ "panels": panels, "warnings": warnings }),
    ))
}
