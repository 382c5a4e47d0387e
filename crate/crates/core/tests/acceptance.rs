// Copyright 2026 the Limacon Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::{PI, TAU};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use limacon::conic::{
    conic_from_params, construct_by_inversion, duality_samples, invert_in_circle,
    limacon_conic_duality_check, midcircle, CanonicalHyperbola,
};
use limacon::diffgeo::{find_vertices, is_monotone_curvature, turning_angle};
use limacon::limacon::{
    endpoint_elements, eval_polar, eval_rational, implicit_residual, mu_from_ratio, Branch,
};
use limacon::normalized::{affine_correspondence, eval_u};
use limacon::solver::{
    degenerate_limit_curve, osculation_error, solve_transition, DirectedCircle, Winding,
};
use limacon::{LimaconParams, Placement, Point2, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const MUS: [f64; 9] = [-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.2, 3.0, 10.0];
const FS: [f64; 2] = [-2.0, 1.0];

fn params(mu: f64, f: f64) -> LimaconParams {
    LimaconParams::new(mu, f).unwrap()
}

/// `n` values covering the real line, denser near 0.
fn real_line(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| (PI * (i as f64 + 0.5) / n as f64 - 0.5 * PI).tan())
}

fn within(value: f64, limit: f64, what: &str) -> Result<(), String> {
    if value < limit {
        Ok(())
    } else {
        Err(format!("{what}: {value:e} ≥ {limit:e}"))
    }
}

fn membership() -> Outcome {
    let start = Instant::now();
    let mut worst = [0.0f64; 3];
    let mut u_cells = 0;
    for mu in MUS {
        for f in FS {
            let p = params(mu, f);
            for t in real_line(256) {
                worst[1] = worst[1].max(implicit_residual(&p, eval_rational(&p, t)).abs());
            }
            for i in 0..256 {
                let xi = TAU * i as f64 / 256.0;
                for b in [Branch::Plus, Branch::Minus] {
                    worst[0] = worst[0].max(implicit_residual(&p, eval_polar(&p, xi, b)).abs());
                }
            }
            // the u-form exists for |μ| > 1; (μ, f) and (−μ, −f) are the same curve
            if mu.abs() > 1.0 {
                u_cells += 1;
                let kappa = (mu.abs() + 1.0) / (mu.abs() - 1.0);
                let map = affine_correspondence(kappa).map_err(|e| e.to_string())?;
                let s = mu.signum() * f;
                for u in real_line(256).map(|v| 0.5 + v) {
                    let q = map.to_canonical(eval_u(kappa, u).map_err(|e| e.to_string())?);
                    let pt = Point2::new(s * q.x, s * q.y);
                    worst[2] = worst[2].max(implicit_residual(&p, pt).abs());
                }
            }
        }
    }
    let elapsed = start.elapsed();
    for (w, name) in worst.iter().zip(["polar", "rational", "normalized-u"]) {
        within(*w, 1e-9, name)?;
    }
    if elapsed > Duration::from_secs(5) {
        return Err(format!("runtime {elapsed:?} > 5 s"));
    }
    Ok(format!(
        "max residual polar {:.1e}, rational {:.1e}, normalized-u {:.1e} ({u_cells} cells with |mu|>1); {elapsed:.2?}",
        worst[0], worst[1], worst[2]
    ))
}

fn concentricity() -> Outcome {
    let mut worst = 0.0f64;
    for mu in MUS.into_iter().filter(|m| m.abs() != 0.0 && m.abs() != 1.0) {
        for f in FS {
            let data = endpoint_elements(&params(mu, f)).map_err(|e| e.to_string())?;
            let c = data.center.ok_or("missing center")?;
            let scale = c.x.abs().max(f.abs());
            for elem in [data.elem_a, data.elem_b] {
                let cc = elem.center().ok_or("zero curvature")?;
                worst = worst.max(cc.distance(c) / scale);
            }
        }
    }
    within(worst, 1e-12, "relative center mismatch")?;
    Ok(format!("max relative mismatch {worst:.1e}"))
}

fn spirality() -> Outcome {
    let mut notes = Vec::new();
    for mu in [1.2, -1.2, 3.0, -3.0, 10.0, -10.0] {
        let r = is_monotone_curvature(&params(mu, 1.0), 10_000);
        if !(r.monotone && r.strict) {
            return Err(format!("mu={mu}: not strictly monotone ({r:?})"));
        }
    }
    for mu in [0.3, -0.3, 0.7, -0.7] {
        let p = params(mu, 1.0);
        let r = is_monotone_curvature(&p, 10_000);
        let interior = find_vertices(&p)
            .iter()
            .filter(|v| v.is_interior_to_transition())
            .count();
        if r.monotone || interior == 0 {
            return Err(format!(
                "mu={mu}: monotone={} interior vertices={interior}",
                r.monotone
            ));
        }
        notes.push(format!("{mu}:{interior}"));
    }
    Ok(format!(
        "strict for ±1.2, ±3, ±10; non-monotone with vertices (mu:count) {}",
        notes.join(" ")
    ))
}

fn turning() -> Outcome {
    let mut worst = 0.0f64;
    for mu in [1.0001, 1.2, -1.2, 3.0, -3.0, 10.0, -10.0] {
        for f in FS {
            let a = turning_angle(&params(mu, f)).map_err(|e| e.to_string())?;
            worst = worst.max((a.abs() - TAU).abs());
        }
    }
    within(worst, 1e-6, "turning angle error")?;
    Ok(format!("max ||dtau| - 2pi| = {worst:.1e}"))
}

fn ratio_law() -> Outcome {
    let mut worst = 0.0f64;
    for kappa in [1.1, 2.0, 5.0, 100.0] {
        for same in [true, false] {
            let mu = mu_from_ratio(kappa, same).map_err(|e| e.to_string())?;
            let expect_mu = if same {
                (kappa + 1.0) / (kappa - 1.0)
            } else {
                (kappa - 1.0) / (kappa + 1.0)
            };
            worst = worst.max((mu - expect_mu).abs() / expect_mu);
            let data = endpoint_elements(&params(mu, 1.0)).map_err(|e| e.to_string())?;
            let target = if same { kappa * kappa } else { -kappa * kappa };
            worst = worst.max((data.elem_b.k / data.elem_a.k - target).abs() / target.abs());
        }
    }
    within(worst, 1e-12, "relative ratio error")?;
    Ok(format!("max relative error {worst:.1e}"))
}

fn duality() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_e = 0.0f64;
    let mut worst_p = 0.0f64;
    for mu in MUS {
        for f in FS {
            let p = params(mu, f);
            let conic = conic_from_params(&p);
            let res = limacon_conic_duality_check(&p, &duality_samples(&p, 128))
                .map_err(|e| format!("mu={mu} f={f}: {e}"))?;
            worst = worst.max(res);
            if !conic.conic_type().matches(p.regime()) {
                return Err(format!("mu={mu}: conic type {:?}", conic.conic_type()));
            }
            // eccentricity and semi-latus rectum read off the quadratic form
            let q = conic.form;
            let e = (1.0 - q.xx / q.yy).sqrt();
            let ell = if q.xx == 0.0 {
                q.x.abs() / (2.0 * q.yy)
            } else {
                let k = q.x * q.x / (4.0 * q.xx) - q.c;
                (k * q.xx).abs().sqrt() / q.yy
            };
            worst_e = worst_e.max((conic.e - e).abs() / e);
            worst_p = worst_p.max((conic.p.abs() - ell).abs() / ell);
            if conic.p != 0.5 * f {
                return Err(format!("p = {} ≠ f/2", conic.p));
            }
        }
    }
    within(worst, 1e-9, "conic residual")?;
    within(worst_e, 1e-14, "eccentricity")?;
    within(worst_p, 1e-14, "focal parameter")?;
    Ok(format!(
        "max residual {worst:.1e}; e rel {worst_e:.1e}; p rel {worst_p:.1e}"
    ))
}

fn construction() -> Outcome {
    let hyp = CanonicalHyperbola::new(1.0, 2.0).map_err(|e| e.to_string())?;
    let exact = construct_by_inversion(&hyp, 3.0, 64, false).map_err(|e| e.to_string())?;
    within(exact.center_distance, 1e-9, "center distance at e=sqrt 5")?;
    let mut perturbed = Vec::new();
    for de in [-0.1, 0.1] {
        let h = CanonicalHyperbola::from_eccentricity(1.0, 5f64.sqrt() + de)
            .map_err(|e| e.to_string())?;
        let r = construct_by_inversion(&h, 3.0, 64, false).map_err(|e| e.to_string())?;
        if !(r.center_distance > 1e-3) {
            return Err(format!(
                "e perturbed by {de}: distance {:e}",
                r.center_distance
            ));
        }
        perturbed.push(r.center_distance);
    }
    Ok(format!(
        "distance {:.1e} at e=sqrt 5; {:.3} / {:.3} at e∓0.1",
        exact.center_distance, perturbed[0], perturbed[1]
    ))
}

fn midcircle_symmetry() -> Outcome {
    let mut worst = 0.0f64;
    for mu in [1.5, 3.0] {
        for f in FS {
            let p = params(mu, f);
            let data = endpoint_elements(&p).map_err(|e| e.to_string())?;
            let m = midcircle(&data).map_err(|e| e.to_string())?;
            for t in real_line(64) {
                let q = invert_in_circle(eval_rational(&p, t), m.center, m.radius)
                    .map_err(|e| e.to_string())?;
                worst = worst.max(implicit_residual(&p, q).abs());
            }
        }
    }
    within(worst, 1e-9, "image residual")?;
    Ok(format!("max image residual {worst:.1e}"))
}

fn degenerate_limit() -> Outcome {
    let levels = degenerate_limit_curve(1.0, &[1e2, 1e3, 1e4], 4000).map_err(|e| e.to_string())?;
    let d: Vec<f64> = levels.iter().map(|l| l.hausdorff).collect();
    if !(d[0] > d[1] && d[1] > d[2]) {
        return Err(format!("not decreasing: {d:?}"));
    }
    Ok(format!(
        "Hausdorff {:.2e} > {:.2e} > {:.2e}",
        d[0], d[1], d[2]
    ))
}

fn solver_round_trip() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x11ac0);
    let mut worst_osc = 0.0f64;
    let mut worst_eq = 0.0f64;
    let winding = |b: bool| {
        if b {
            Winding::CounterClockwise
        } else {
            Winding::Clockwise
        }
    };
    for _ in 0..100 {
        let r_in = rng.gen_range(0.1..10.0);
        let r_out = r_in * rng.gen_range(1.1..100.0);
        let c = Point2::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0));
        let (wi, wo) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
        let anchor = rng.gen_range(-PI..PI);
        let inner = DirectedCircle::new(c, r_in, winding(wi)).map_err(|e| e.to_string())?;
        let outer = DirectedCircle::new(c, r_out, winding(wo)).map_err(|e| e.to_string())?;
        let sol = solve_transition(&inner, &outer, anchor).map_err(|e| e.to_string())?;
        if sol.params.mu().abs() == 1.0 || (wi == wo) != (sol.params.mu().abs() > 1.0) {
            return Err(format!("regime law violated at mu={}", sol.params.mu()));
        }
        worst_osc = worst_osc
            .max(osculation_error(&sol.endpoints.elem_a, &outer).relative(r_out))
            .max(osculation_error(&sol.endpoints.elem_b, &inner).relative(r_in));

        // random similarity, possibly orientation reversing
        let reflect = rng.gen_bool(0.5);
        let scale = rng.gen_range(0.2..5.0);
        let motion = Placement {
            rotation: rng.gen_range(-PI..PI),
            translation: Vec2::new(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0)),
            reflect,
        };
        let map = |p: Point2| motion.apply(Point2::new(scale * p.x, scale * p.y));
        let flip = |w: bool| winding(w != reflect);
        let inner2 =
            DirectedCircle::new(map(c), scale * r_in, flip(wi)).map_err(|e| e.to_string())?;
        let outer2 =
            DirectedCircle::new(map(c), scale * r_out, flip(wo)).map_err(|e| e.to_string())?;
        let anchor2 = motion.apply_angle(anchor);
        let sol2 = solve_transition(&inner2, &outer2, anchor2).map_err(|e| e.to_string())?;
        if (sol2.params.f() - scale * sol.params.f()).abs() > 1e-12 * sol2.params.f().abs()
            || (sol2.params.mu() - sol.params.mu()).abs() > 1e-12 * sol.params.mu().abs()
        {
            return Err("parameters not equivariant".into());
        }
        for i in 0..=32 {
            let phi = 4.0 * i as f64 / 32.0;
            let d = map(sol.point_at(phi)).distance(sol2.point_at(phi)) / (scale * r_out);
            worst_eq = worst_eq.max(d);
        }
    }
    let elapsed = start.elapsed();
    within(worst_osc, 1e-9, "osculation")?;
    within(worst_eq, 1e-9, "equivariance")?;
    if elapsed > Duration::from_secs(10) {
        return Err(format!("runtime {elapsed:?} > 10 s"));
    }
    Ok(format!(
        "100 problems: osculation {worst_osc:.1e}, equivariance {worst_eq:.1e}; {elapsed:.2?}"
    ))
}

fn run_cli(dir: &Path, args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_limacon"))
        .current_dir(dir)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn cli_integration() -> Outcome {
    let jobs: [&[&str]; 4] = [
        &[
            "trace", "--mu", "3", "--f", "1", "--n", "512", "--svg", "a.svg", "--csv", "a.csv",
            "--json", "a.json",
        ],
        &[
            "profile", "--mu", "3", "--f", "1", "--n", "256", "--csv", "a.csv", "--json", "a.json",
        ],
        &[
            "gallery",
            "--mu",
            "3,1,0.5,0",
            "--svg",
            "a.svg",
            "--json",
            "a.json",
        ],
        &[
            "solve",
            "--inner-radius",
            "0.5",
            "--outer-radius",
            "4.5",
            "--center-x",
            "1",
            "--center-y",
            "-2",
            "--winding-inner",
            "-1",
            "--anchor",
            "0.7",
            "--svg",
            "a.svg",
            "--json",
            "a.json",
        ],
    ];
    let mut artifacts = 0;
    for job in jobs {
        let dirs = [
            tempfile::tempdir().map_err(|e| e.to_string())?,
            tempfile::tempdir().map_err(|e| e.to_string())?,
        ];
        for d in &dirs {
            run_cli(d.path(), job)?;
        }
        for name in ["a.svg", "a.csv", "a.json"] {
            let files: Vec<_> = dirs
                .iter()
                .map(|d| std::fs::read(d.path().join(name)).ok())
                .collect();
            let Some(first) = &files[0] else { continue };
            if files[1].as_ref() != Some(first) {
                return Err(format!("{} {name} differs between runs", job[0]));
            }
            let text = String::from_utf8(first.clone()).map_err(|e| e.to_string())?;
            match name {
                "a.svg" => {
                    roxmltree::Document::parse(&text)
                        .map_err(|e| format!("{} svg: {e}", job[0]))?;
                }
                "a.json" => {
                    let v: serde_json::Value =
                        serde_json::from_str(&text).map_err(|e| e.to_string())?;
                    if v["schema"] != 1 {
                        return Err(format!("{} json without schema", job[0]));
                    }
                    if let Some(r) = v.get("max_residual").and_then(|r| r.as_f64()) {
                        within(r, 1e-9, "path residual")?;
                    }
                }
                _ => {}
            }
            artifacts += 1;
        }
        if job[0] == "profile" {
            let csv =
                std::fs::read_to_string(dirs[0].path().join("a.csv")).map_err(|e| e.to_string())?;
            let mut lines = csv.lines();
            if lines.next() != Some("s,k") {
                return Err("profile header".into());
            }
            let rows: Vec<(f64, f64)> = lines
                .map(|l| {
                    let (s, k) = l.split_once(',').unwrap_or(("nan", "nan"));
                    (s.parse().unwrap_or(f64::NAN), k.parse().unwrap_or(f64::NAN))
                })
                .collect();
            if rows.len() != 256 || rows.windows(2).any(|w| !(w[1].0 > w[0].0)) {
                return Err("profile s not strictly increasing".into());
            }
            within((rows[0].1 - 0.375).abs(), 1e-8, "k at A")?;
            within((rows[255].1 - 1.5).abs(), 1e-8, "k at B")?;
        }
    }
    Ok(format!(
        "{artifacts} artifacts well-formed and byte-identical across runs"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("membership", membership),
        ("concentricity", concentricity),
        ("spirality", spirality),
        ("turning angle", turning),
        ("ratio law", ratio_law),
        ("duality", duality),
        ("construction", construction),
        ("midcircle symmetry", midcircle_symmetry),
        ("degenerate limit", degenerate_limit),
        ("solver round trip", solver_round_trip),
        ("cli integration", cli_integration),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
