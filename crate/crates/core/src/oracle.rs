//! Brute-force verifiers, kept independent of the closed-form checks.
//!
//! Curves are evaluated from the power-basis expansion of their Bézier
//! control points, derivatives come from finite differences or from that
//! expansion, and counts come from dense sampling and direction search.

use crate::criteria::Criterion;
use crate::cubic::CubicSegment;
use crate::discrete::sign_changes;
use crate::error::{Error, GeomError, Result};
use crate::geom::{fibonacci_sphere, Vec3, EPS_ZERO};
use crate::report::SplineReport;
use crate::spline::Spline;

pub const DEFAULT_SAMPLES: usize = 512;
pub const DEFAULT_DIRECTIONS: usize = 2048;

/// Sign changes of `f` at `n` uniform samples of `[a, b]`. Values within
/// `EPS_ZERO` of the largest magnitude seen are treated as zero.
pub fn sampled_sign_changes(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> usize {
    let n = n.max(3);
    let values: Vec<f64> = (0..n)
        .map(|k| f(a + (b - a) * k as f64 / (n - 1) as f64))
        .collect();
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let cleaned: Vec<f64> = values
        .iter()
        .map(|&v| if v.abs() <= EPS_ZERO * peak { 0.0 } else { v })
        .collect();
    sign_changes(&cleaned)
}

/// Power-basis form `c0 + c1 u + c2 u² + c3 u³` of a cubic segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerCubic {
    c: [Vec3; 4],
    h: f64,
}

impl PowerCubic {
    pub fn new(seg: &CubicSegment) -> Self {
        let [p0, p1, p2, p3] = seg.bezier();
        Self {
            c: [
                p0,
                (p1 - p0) * 3.0,
                (p0 - p1 * 2.0 + p2) * 3.0,
                p3 - p0 + (p1 - p2) * 3.0,
            ],
            h: seg.h(),
        }
    }

    pub fn point(&self, u: f64) -> Vec3 {
        let [c0, c1, c2, c3] = self.c;
        c0 + (c1 + (c2 + c3 * u) * u) * u
    }

    /// Derivatives with respect to `u`.
    pub fn du(&self, u: f64) -> [Vec3; 3] {
        let [_, c1, c2, c3] = self.c;
        [
            c1 + c2 * (2.0 * u) + c3 * (3.0 * u * u),
            c2 * 2.0 + c3 * (6.0 * u),
            c3 * 6.0,
        ]
    }

    /// Curvature vector `γ′ × γ″` with respect to the global parameter.
    pub fn omega(&self, u: f64) -> Vec3 {
        let [d1, d2, _] = self.du(u);
        d1.cross(d2) / self.h.powi(3)
    }

    pub fn h(&self) -> f64 {
        self.h
    }
}

/// Sign changes of `ω(u)·w` over `samples` parameters.
pub fn curvature_sign_changes(seg: &CubicSegment, w: Vec3, samples: usize) -> usize {
    let pc = PowerCubic::new(seg);
    sampled_sign_changes(|u| pc.omega(u).dot(w), 0.0, 1.0, samples)
}

fn witness_directions(pc: &PowerCubic) -> Vec<Vec3> {
    let (w0, w1) = (pc.omega(0.0), pc.omega(1.0));
    let Some(axis) = w0.cross(w1).normalized() else {
        return Vec::new();
    };
    let ends = w0.normalized().unwrap_or(Vec3::ZERO) + w1.normalized().unwrap_or(Vec3::ZERO);
    let mut out = Vec::new();
    for base in [axis, -axis] {
        for delta in [1e-1, 1e-2, 1e-3, 1e-4] {
            for s in [1.0, -1.0] {
                if let Some(w) = (base + ends * (s * delta)).normalized() {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Lower bound on the spatial inflection count `I(γ)`: the largest number
/// of sign changes of `ω·w` over Fibonacci-sphere directions, plus
/// directions near `±ω(0) × ω(1)` where two changes appear first.
pub fn projected_inflection_count(seg: &CubicSegment, directions: usize) -> usize {
    let pc = PowerCubic::new(seg);
    let mut dirs = fibonacci_sphere(directions.max(16));
    dirs.extend(witness_directions(&pc));
    dirs.iter()
        .map(|w| sampled_sign_changes(|u| pc.omega(u).dot(*w), 0.0, 1.0, DEFAULT_SAMPLES))
        .max()
        .unwrap_or(0)
}

/// Central differences of orders one to three of `f` at `t`, requiring
/// `t ± 2 step` to lie inside `domain`.
pub fn finite_diff_derivatives(
    f: impl Fn(f64) -> Vec3,
    domain: (f64, f64),
    t: f64,
    step: f64,
) -> Result<[Vec3; 3]> {
    if !(step > 0.0) || t - 2.0 * step < domain.0 || t + 2.0 * step > domain.1 {
        return Err(Error::Domain(t));
    }
    let (m2, m1, z, p1, p2) = (
        f(t - 2.0 * step),
        f(t - step),
        f(t),
        f(t + step),
        f(t + 2.0 * step),
    );
    Ok([
        (p1 - m1) / (2.0 * step),
        (p1 - z * 2.0 + m1) / (step * step),
        (p2 - p1 * 2.0 + m1 * 2.0 - m2) / (2.0 * step * step * step),
    ])
}

/// A curve known only through samples.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    ts: Vec<f64>,
    points: Vec<Vec3>,
}

impl SampledCurve {
    pub fn new(ts: Vec<f64>, points: Vec<Vec3>) -> Result<Self> {
        if ts.len() != points.len() || ts.len() < 3 {
            return Err(Error::TooFewPoints {
                needed: 3,
                got: ts.len().min(points.len()),
            });
        }
        if let Some(i) = ts.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(Error::KnotsNotIncreasing(i + 1));
        }
        Ok(Self { ts, points })
    }

    pub fn from_fn(f: impl Fn(f64) -> Vec3, a: f64, b: f64, n: usize) -> Result<Self> {
        let ts: Vec<f64> = (0..n)
            .map(|k| a + (b - a) * k as f64 / (n.max(2) - 1) as f64)
            .collect();
        let points = ts.iter().map(|&t| f(t)).collect();
        Self::new(ts, points)
    }

    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    fn tangents(&self) -> Vec<Vec3> {
        let (p, t) = (&self.points, &self.ts);
        let n = p.len();
        (0..n)
            .map(|k| {
                let (lo, hi) = (k.saturating_sub(1), (k + 1).min(n - 1));
                (p[hi] - p[lo]) / (t[hi] - t[lo])
            })
            .collect()
    }
}

pub fn sampled_global_convexity(curve: &SampledCurve, n: Vec3) -> Result<bool> {
    sampled_global_convexity_with(curve, n, 1e-9)
}

/// Discrete global-convexity test along `n`: every turn of the sample
/// polygon, every `(p_k - p_0) × t_k` and every `t_0 × (p_k - p_0)` has a
/// non-negative component along `n`, up to `eps` relative.
pub fn sampled_global_convexity_with(curve: &SampledCurve, n: Vec3, eps: f64) -> Result<bool> {
    let nn = n.norm();
    if nn == 0.0 {
        return Err(GeomError::DegenerateInput.into());
    }
    if curve.points.len() < 8 {
        return Err(Error::TooFewPoints {
            needed: 8,
            got: curve.points.len(),
        });
    }
    let p = &curve.points;
    let tang = curve.tangents();
    let ok_turns = p.windows(3).all(|w| {
        let (a, b) = (w[1] - w[0], w[2] - w[1]);
        a.cross(b).dot(n) >= -eps * a.norm() * b.norm() * nn
    });
    let ok_support = p.iter().zip(&tang).all(|(q, t)| {
        let g = *q - p[0];
        g.cross(*t).dot(n) >= -eps * g.norm() * t.norm() * nn
            && tang[0].cross(g).dot(n) >= -eps * tang[0].norm() * g.norm() * nn
    });
    Ok(ok_turns && ok_support)
}

/// A closed-form verdict that the sampling oracle contradicts.
#[derive(Debug, Clone, PartialEq)]
pub struct Disagreement {
    pub segment: usize,
    pub criterion: Criterion,
    pub detail: String,
}

/// Bernstein coefficients of a vector quadratic from its values at 0, ½, 1.
fn bernstein_from_samples(f0: Vec3, fh: Vec3, f1: Vec3) -> [Vec3; 3] {
    [f0, fh * 2.0 - (f0 + f1) * 0.5, f1]
}

/// All non-negligible coefficients lie strictly on one side of `axis`.
fn one_sided(coeffs: &[Vec3; 3], axis: Vec3) -> bool {
    let peak = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let dots: Vec<f64> = coeffs
        .iter()
        .filter(|c| c.norm() > 1e-9 * peak)
        .map(|c| c.dot(axis))
        .collect();
    dots.iter().all(|d| *d > 0.0) || dots.iter().all(|d| *d < 0.0)
}

fn sup_sine(vs: impl Iterator<Item = Vec3>, against: &[Vec3], floor: f64) -> f64 {
    let mut sup: f64 = 0.0;
    for v in vs {
        if v.norm() <= floor {
            continue;
        }
        for a in against {
            sup = sup.max(v.cross(*a).norm() / (v.norm() * a.norm()));
        }
    }
    sup
}

/// Re-derives every passed or failed segment verdict of `report` by
/// sampling and returns the contradictions. Convexity, collinearity and
/// coplanarity are sufficient conditions, so only their passes are
/// checked; inflection passes must show exactly one curvature sign change;
/// torsion verdicts are checked both ways.
pub fn cross_check(spline: &Spline, report: &SplineReport, samples: usize) -> Vec<Disagreement> {
    let p = spline.polygon();
    let samples = samples.max(8);
    let mut out = Vec::new();
    for seg_report in &report.segments {
        let i = seg_report.index;
        let seg = spline.segment(i).expect("report matches spline");
        let pc = PowerCubic::new(seg);
        let us: Vec<f64> = (0..samples).map(|k| k as f64 / (samples - 1) as f64).collect();
        let (np, nc) = (p.binormal(i - 1), p.binormal(i));
        let mut disagree = |criterion, detail: String| {
            out.push(Disagreement {
                segment: i,
                criterion,
                detail,
            })
        };
        for verdict in &seg_report.verdicts {
            let Some(passed) = verdict.passed else {
                continue;
            };
            match verdict.criterion {
                Criterion::Convexity if passed => {
                    let curve = SampledCurve::from_fn(|u| pc.point(u), 0.0, 1.0, samples)
                        .expect("enough samples");
                    for n in [np, nc].into_iter().flatten() {
                        if !sampled_global_convexity_with(&curve, n, 1e-7).unwrap_or(false) {
                            disagree(
                                Criterion::Convexity,
                                format!("sampled projection along {n:?} is not globally convex"),
                            );
                        }
                    }
                }
                Criterion::Inflection if passed => {
                    for n in [np, nc].into_iter().flatten() {
                        let c = sampled_sign_changes(|u| pc.omega(u).dot(n), 0.0, 1.0, samples);
                        if c != 1 {
                            disagree(
                                Criterion::Inflection,
                                format!("{c} curvature sign changes along {n:?}"),
                            );
                        }
                    }
                }
                Criterion::Torsion => {
                    let delta = p.torsion(i).unwrap_or(0.0);
                    let det = |u: f64| {
                        let h = pc.h();
                        let f = |t: f64| pc.point(t / h);
                        let t = u.clamp(0.25, 0.75) * h;
                        finite_diff_derivatives(f, (0.0, h), t, 1e-3 * h)
                            .map(|[a, b, c]| a.cross(b).dot(c))
                            .unwrap_or(0.0)
                    };
                    let value = det(0.5);
                    let sampled = value * delta > 0.0;
                    if sampled != passed {
                        disagree(
                            Criterion::Torsion,
                            format!("finite-difference torsion {value:e} vs discrete torsion {delta:e}"),
                        );
                    }
                }
                Criterion::Collinearity if passed => {
                    let vertex = verdict.diagnostic("vertex").unwrap_or(0.0) as usize;
                    let chords: Vec<Vec3> = [p.chord(vertex), p.chord(vertex + 1)]
                        .into_iter()
                        .flatten()
                        .collect();
                    let coeffs = bernstein_from_samples(pc.du(0.0)[0], pc.du(0.5)[0], pc.du(1.0)[0]);
                    if chords.is_empty() || !one_sided(&coeffs, chords[0]) {
                        continue;
                    }
                    let tangents = us.iter().map(|&u| pc.du(u)[0]);
                    let sup = sup_sine(tangents, &chords, 0.0);
                    let bound = report.config.tolerances.eps0;
                    if sup >= bound + 1e-12 {
                        disagree(
                            Criterion::Collinearity,
                            format!("sampled tangent sine {sup} exceeds {bound}"),
                        );
                    }
                }
                Criterion::Coplanarity if passed => {
                    let normals: Vec<Vec3> = [np, nc].into_iter().flatten().collect();
                    let coeffs = bernstein_from_samples(pc.omega(0.0), pc.omega(0.5), pc.omega(1.0));
                    if normals.is_empty() || !one_sided(&coeffs, normals[0]) {
                        continue;
                    }
                    let peak = us.iter().map(|&u| pc.omega(u).norm()).fold(0.0, f64::max);
                    let omegas = us.iter().map(|&u| pc.omega(u));
                    let sup = sup_sine(omegas, &normals, 1e-9 * peak);
                    let bound = report.config.tolerances.eps1;
                    if sup >= bound + 1e-12 {
                        disagree(
                            Criterion::Coplanarity,
                            format!("sampled binormal sine {sup} exceeds {bound}"),
                        );
                    }
                }
                _ => {}
            }
        }
    }
    out
}
