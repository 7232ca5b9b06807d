//! Runs the full criteria battery over a spline.

use serde::Serialize;

use crate::criteria::{
    check_adjacency_compat, check_coplanarity_alternative, check_collinearity_cubic,
    check_convexity_cubic, check_coplanarity_cubic, check_inflection_cubic, check_torsion_compat,
    check_torsion_cubic, Criterion, CriterionVerdict, Tolerances,
};
use crate::cubic::CubicSegment;
use crate::discrete::{sign_changes, ShapeFlags};
use crate::error::{Error, Result};
use crate::geom::{sine_angle, Sign, Vec3};
use crate::spline::{Spline, SplineConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexReport {
    pub index: usize,
    pub point: Vec3,
    /// Discrete binormal; absent at the two end points.
    #[serde(rename = "N")]
    pub binormal: Option<Vec3>,
    /// Discrete torsion of the span ending at this vertex.
    pub delta: Option<f64>,
    pub flags: Vec<&'static str>,
    pub verdicts: Vec<CriterionVerdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SegmentReport {
    pub index: usize,
    pub flags: ShapeFlags,
    pub delta: Option<f64>,
    pub verdicts: Vec<CriterionVerdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointReport {
    /// Vertex at which the two segments meet.
    pub index: usize,
    pub adjacency: CriterionVerdict,
    pub torsion_compat: CriterionVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplineReport {
    pub config: SplineConfig,
    pub vertices: Vec<VertexReport>,
    pub segments: Vec<SegmentReport>,
    pub joints: Vec<JointReport>,
    pub summary: Summary,
}

impl SplineReport {
    /// Every verdict in the report, in document order.
    pub fn verdicts(&self) -> impl Iterator<Item = &CriterionVerdict> {
        self.vertices
            .iter()
            .flat_map(|v| v.verdicts.iter())
            .chain(self.segments.iter().flat_map(|s| s.verdicts.iter()))
            .chain(
                self.joints
                    .iter()
                    .flat_map(|j| [&j.adjacency, &j.torsion_compat]),
            )
    }
}

fn normalized_delta(spline: &Spline, i: usize) -> Option<f64> {
    let p = spline.polygon();
    let d = p.torsion(i)?;
    let scale = p.chord(i - 1)?.norm() * p.chord(i)?.norm() * p.chord(i + 1)?.norm();
    Some(d / scale)
}

/// One-sided curve torsion at `u`, scaled by the data diagonal so that it
/// is dimensionless. Zero where the curvature vanishes.
fn joint_torsion(seg: &CubicSegment, u: f64, diag: f64, eps: f64) -> f64 {
    let d = seg.derivatives_at(u);
    let w = d.d1.cross(d.d2);
    if w.norm() <= eps * d.d1.norm() * d.d2.norm() || w.norm() == 0.0 {
        return 0.0;
    }
    seg.torsion_numerator() / w.norm_sq() * diag
}

struct Sample {
    t: f64,
    point: Vec3,
    d1: Vec3,
    omega: Vec3,
}

fn sample_window(seg: &CubicSegment, t0: f64, u0: f64, u1: f64, n: usize) -> Vec<Sample> {
    (0..n)
        .map(|k| {
            let u = u0 + (u1 - u0) * k as f64 / (n - 1) as f64;
            let d = seg.derivatives_at(u);
            Sample {
                t: t0 + u * seg.h(),
                point: seg.point_at(u),
                d1: d.d1,
                omega: d.d1.cross(d.d2),
            }
        })
        .collect()
}

fn globally_convex(samples: &[Sample], n: Vec3, eps: f64) -> bool {
    let first = &samples[0];
    let nn = n.norm();
    samples.iter().all(|s| {
        let g = s.point - first.point;
        s.omega.dot(n) >= -eps * s.omega.norm().max(s.d1.norm_sq()) * nn
            && g.cross(s.d1).dot(n) >= -eps * g.norm() * s.d1.norm() * nn
            && first.d1.cross(g).dot(n) >= -eps * first.d1.norm() * g.norm() * nn
    })
}

/// `(t, sign changes)` of `ω·n` along the samples; `t` is where the last
/// change happened.
fn curvature_changes(samples: &[Sample], n: Vec3, eps: f64) -> (usize, Option<f64>) {
    let values: Vec<f64> = samples
        .iter()
        .map(|s| {
            Sign::classify(s.omega.dot(n), s.omega.norm().max(s.d1.norm_sq()) * n.norm(), eps).as_i8()
                as f64
        })
        .collect();
    let mut at = None;
    let mut last = 0.0;
    for (s, v) in samples.iter().zip(&values) {
        if *v != 0.0 {
            if last != 0.0 && *v != last {
                at = Some(s.t);
            }
            last = *v;
        }
    }
    (sign_changes(&values), at)
}

/// The extended collinearity conditions at a collinear vertex `c`, taking
/// the neighbouring binormals into account.
///
/// Checks (a) the sine bound on `γ′` over the η window around `t_c`,
/// (b) `ω·N ≥ 0` at the neighbouring vertices, (c) the tangent wedge
/// condition at the neighbouring vertices and (d) global convexity (convex
/// neighbourhood) or a single curvature sign change inside the window
/// (inflection neighbourhood) between `x_{c-1}` and `x_{c+1}`. Interpolation
/// of `x_c` is reported in the `interpolates` diagnostic but does not
/// affect the verdict.
pub fn check_collinearity_extended(
    spline: &Spline,
    c: usize,
    tol: &Tolerances,
    samples: usize,
) -> Result<CriterionVerdict> {
    let p = spline.polygon();
    let n = p.n();
    if c == 0 || c >= n {
        return Err(Error::IndexOutOfRange {
            index: c,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let eps = tol.eps_zero;
    let v = CriterionVerdict::new(Criterion::Collinearity).with("vertex", c as f64);
    if !p.is_collinear_vertex(c, eps) {
        return Ok(v);
    }
    let samples = samples.max(3);
    let knots = spline.knots();
    let (left, right) = (spline.segment(c).unwrap(), spline.segment(c + 1).unwrap());
    let (lc, lnext) = (p.chord(c).unwrap(), p.chord(c + 1).unwrap());
    let f = tol.eta_fraction;

    // (a) sine bound on the η window
    let mut window = sample_window(left, knots[c - 1], 1.0 - f, 1.0, samples);
    window.extend(sample_window(right, knots[c], 0.0, f, samples));
    let mut sup: f64 = 0.0;
    for s in &window {
        for l in [lc, lnext] {
            if let Ok(sine) = sine_angle(s.d1, l) {
                sup = sup.max(sine);
            }
        }
    }
    let sine_ok = sup < tol.eps0;
    let t_lo = knots[c] - f * (knots[c] - knots[c - 1]);
    let t_hi = knots[c] + f * (knots[c + 1] - knots[c]);

    let nprev = p.binormal(c - 1).filter(|_| !p.is_degenerate_vertex(c - 1, eps));
    let nnext = p.binormal(c + 1).filter(|_| !p.is_degenerate_vertex(c + 1, eps));

    // (b) curvature sign at the neighbouring vertices
    let mut curvature_ok = true;
    if let Some(nv) = nprev {
        let d = left.derivatives_at(0.0);
        let w = d.d1.cross(d.d2);
        curvature_ok &= w.dot(nv) >= -eps * w.norm().max(d.d1.norm_sq()) * nv.norm();
    }
    if let Some(nv) = nnext {
        let d = right.derivatives_at(1.0);
        let w = d.d1.cross(d.d2);
        curvature_ok &= w.dot(nv) >= -eps * w.norm().max(d.d1.norm_sq()) * nv.norm();
    }

    // (c) tangent wedge at x_{c-1} and x_{c+1}
    let mut wedge_ok = true;
    let wedge = |t: Vec3, a: Vec3, b: Vec3| {
        let prod = t.cross(a).dot(t.cross(b));
        prod < -eps * t.norm_sq() * a.norm() * b.norm()
    };
    if let (Some(_), Some(lprev)) = (nprev, p.chord(c - 1)) {
        wedge_ok &= wedge(left.m0(), lc, lprev);
    }
    if let (Some(_), Some(lfar)) = (nnext, p.chord(c + 2)) {
        wedge_ok &= wedge(right.m1(), lnext, lfar);
    }

    // (d) behaviour between x_{c-1} and x_{c+1}
    let mut span = sample_window(left, knots[c - 1], 0.0, 1.0, samples);
    span.extend(sample_window(right, knots[c], 0.0, 1.0, samples).into_iter().skip(1));
    let interpolates = (left.end() - p.point(c)).norm() <= eps * p.diagonal();
    let mut v = v
        .with("sup_sine", sup)
        .with("eps0", tol.eps0)
        .with("window_lo", t_lo)
        .with("window_hi", t_hi)
        .flag("sine_ok", sine_ok)
        .flag("endpoint_curvature_ok", curvature_ok)
        .flag("endpoint_wedge_ok", wedge_ok)
        .flag("interpolates", interpolates);
    let shape_ok = match (nprev, nnext) {
        (Some(a), Some(b)) if a.dot(b) >= 0.0 => {
            let ok = globally_convex(&span, a, eps) && globally_convex(&span, b, eps);
            v.set("neighbourhood", 1.0);
            v = v.flag("global_convexity_ok", ok);
            ok
        }
        (Some(a), Some(b)) => {
            let (ca, ta) = curvature_changes(&span, a, eps);
            let (cb, tb) = curvature_changes(&span, b, eps);
            let inside = |t: Option<f64>| t.is_some_and(|t| t >= t_lo && t <= t_hi);
            let ok = ca == 1 && cb == 1 && inside(ta) && inside(tb);
            v.set("neighbourhood", 2.0);
            v.set("sign_changes_prev", ca as f64);
            v.set("sign_changes_next", cb as f64);
            v = v.flag("change_in_window", inside(ta) && inside(tb));
            ok
        }
        _ => {
            v.set("neighbourhood", 0.0);
            true
        }
    };
    Ok(v.decide(sine_ok && curvature_ok && wedge_ok && shape_ok))
}

/// Runs every applicable criterion on every segment, vertex and joint.
pub fn analyze(spline: &Spline, cfg: &SplineConfig) -> Result<SplineReport> {
    cfg.validate()?;
    let tol = &cfg.tolerances;
    let eps = tol.eps_zero;
    let p = spline.polygon();
    let n = p.n();

    let mut vertices = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut flags = Vec::new();
        let mut verdicts = Vec::new();
        if k >= 1 && k < n && p.is_collinear_vertex(k, eps) {
            flags.push("CollinearData");
            verdicts.push(check_collinearity_extended(spline, k, tol, cfg.samples)?);
        }
        vertices.push(VertexReport {
            index: k,
            point: p.point(k),
            binormal: p.binormal(k),
            delta: p.torsion(k),
            flags,
            verdicts,
        });
    }

    let mut segments = Vec::with_capacity(n);
    for i in 1..=n {
        let seg = spline.segment(i).unwrap();
        let flags = p.classify(i, eps)?;
        let (np, nc) = (p.binormal(i - 1), p.binormal(i));
        let delta = normalized_delta(spline, i);
        let mut verdicts = Vec::new();
        if let (Some(np), Some(nc)) = (np, nc) {
            if flags.convex {
                verdicts.push(check_convexity_cubic(seg, np, nc, tol));
            }
            if flags.inflection {
                verdicts.push(check_inflection_cubic(seg, np, nc, tol));
            }
        }
        for c in [i - 1, i] {
            if c >= 1 && c < n && p.is_collinear_vertex(c, eps) {
                let (a, b) = (p.chord(c).unwrap(), p.chord(c + 1).unwrap());
                verdicts.push(check_collinearity_cubic(seg, a, b, tol).with("vertex", c as f64));
            }
        }
        if let Some(d) = delta {
            if flags.torsion {
                verdicts.push(check_torsion_cubic(seg, d, tol));
            }
            if let (true, Some(np), Some(nc)) = (flags.coplanar, np, nc) {
                let mut verdict = check_coplanarity_cubic(seg, np, nc, d, tol);
                let alt = check_coplanarity_alternative(
                    seg,
                    p.chord(i - 1).unwrap(),
                    p.chord(i + 1).unwrap(),
                    tol,
                );
                for (name, value) in &alt.diagnostics {
                    verdict.set(&format!("alternative_{name}"), *value);
                }
                verdict.set(
                    "alternative_passed",
                    if alt.passed == Some(true) { 1.0 } else { 0.0 },
                );
                verdicts.push(verdict);
            }
        }
        segments.push(SegmentReport {
            index: i,
            flags,
            delta: p.torsion(i),
            verdicts,
        });
    }

    let mut joints = Vec::new();
    for v in 1..n {
        let (prev, next) = (spline.segment(v).unwrap(), spline.segment(v + 1).unwrap());
        let adjacency = check_adjacency_compat(
            prev,
            next,
            p.binormal(v).unwrap(),
            p.chord(v).unwrap(),
            p.chord(v + 1).unwrap(),
            tol,
        )?;
        let torsion_compat = match (normalized_delta(spline, v), normalized_delta(spline, v + 1)) {
            (Some(dp), Some(dc)) => {
                let tp = joint_torsion(prev, 1.0, p.diagonal(), eps);
                let tc = joint_torsion(next, 0.0, p.diagonal(), eps);
                check_torsion_compat(dp, dc, tp, tc, tol)
            }
            _ => CriterionVerdict::new(Criterion::TorsionCompat),
        };
        joints.push(JointReport {
            index: v,
            adjacency,
            torsion_compat,
        });
    }

    let mut report = SplineReport {
        config: *cfg,
        vertices,
        segments,
        joints,
        summary: Summary::default(),
    };
    let mut summary = Summary::default();
    for verdict in report.verdicts() {
        if verdict.applicable {
            summary.applicable += 1;
            if verdict.failed() {
                summary.failed += 1;
            } else {
                summary.passed += 1;
            }
        }
    }
    summary.all_passed = summary.failed == 0;
    report.summary = summary;
    Ok(report)
}
