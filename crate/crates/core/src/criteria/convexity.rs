use crate::cubic::CubicSegment;
use crate::error::{Error, GeomError, Result};
use crate::geom::{Vec3, EPS_ZERO};

use super::{negative, positive, Criterion, CriterionVerdict, Tolerances};

/// Which alternative of the closed-form cubic condition holds for one normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    None,
    /// `a < 0`, `b, c < (h/3)a`: bends against the normal.
    NegA,
    /// `a < 0`, `b, c > 0`.
    NegB,
    /// `a > 0`, `b, c > (h/3)a`.
    PosA,
    /// `a > 0`, `b, c < 0`: bends against the normal.
    PosB,
    /// `a = 0` limit of both agreeing alternatives: `b, c > 0`.
    Flat,
}

impl Branch {
    fn code(self) -> f64 {
        match self {
            Branch::None => 0.0,
            Branch::NegA => 1.0,
            Branch::NegB => 2.0,
            Branch::PosA => 3.0,
            Branch::PosB => 4.0,
            Branch::Flat => 5.0,
        }
    }

    fn agrees_with_normal(self) -> bool {
        matches!(self, Branch::NegB | Branch::PosA | Branch::Flat)
    }
}

fn classify_branch(seg: &CubicSegment, n: Vec3, eps: f64) -> (Branch, [f64; 4]) {
    let (m0, m1, l, h) = (seg.m0(), seg.m1(), seg.chord(), seg.h());
    let a = m0.cross(m1).dot(n);
    let b = m0.cross(l).dot(n);
    let c = l.cross(m1).dot(n);
    let th = h / 3.0 * a;
    let nn = n.norm();
    let sa = m0.norm() * m1.norm() * nn;
    let sb = m0.norm() * l.norm() * nn;
    let sc = l.norm() * m1.norm() * nn;
    let (sbt, sct) = (sb + h / 3.0 * sa, sc + h / 3.0 * sa);
    let branch = if negative(a, sa, eps) {
        if negative(b - th, sbt, eps) && negative(c - th, sct, eps) {
            Branch::NegA
        } else if positive(b, sb, eps) && positive(c, sc, eps) {
            Branch::NegB
        } else {
            Branch::None
        }
    } else if positive(a, sa, eps) {
        if positive(b - th, sbt, eps) && positive(c - th, sct, eps) {
            Branch::PosA
        } else if negative(b, sb, eps) && negative(c, sc, eps) {
            Branch::PosB
        } else {
            Branch::None
        }
    } else if positive(b, sb, eps) && positive(c, sc, eps) {
        Branch::Flat
    } else {
        Branch::None
    };
    (branch, [a, b, c, th])
}

/// Closed-form convexity condition on the projections of `seg` along the
/// binormals at its two end vertices.
///
/// Applicable when `nprev · ncur > 0`. The segment passes when, for both
/// normals, the projected control polygon is globally convex and turns in
/// the direction the normal induces. The orientation-blind outcome is kept
/// in the `orientation_agnostic` diagnostic.
pub fn check_convexity_cubic(
    seg: &CubicSegment,
    nprev: Vec3,
    ncur: Vec3,
    tol: &Tolerances,
) -> CriterionVerdict {
    let eps = tol.eps_zero;
    let dot = nprev.dot(ncur);
    let mut v = CriterionVerdict::new(Criterion::Convexity).with("n_dot", dot);
    if !positive(dot, nprev.norm() * ncur.norm(), eps) {
        return v;
    }
    let mut all = true;
    let mut agnostic = true;
    for (name, n) in [("prev", nprev), ("cur", ncur)] {
        let (branch, [a, b, c, th]) = classify_branch(seg, n, eps);
        v.set(&format!("a_{name}"), a);
        v.set(&format!("b_{name}"), b);
        v.set(&format!("c_{name}"), c);
        v.set(&format!("threshold_{name}"), th);
        v.set(&format!("branch_{name}"), branch.code());
        all &= branch.agrees_with_normal();
        agnostic &= branch != Branch::None;
    }
    v.flag("orientation_agnostic", agnostic).decide(all)
}

pub fn check_convexity_sampled(seg: &CubicSegment, n: Vec3, samples: usize) -> Result<bool> {
    check_convexity_sampled_with(seg, n, samples, EPS_ZERO)
}

/// Pointwise global-convexity conditions along `n` at `samples` uniform
/// parameters: `ω·n ≥ 0`, `((γ(u) - γ(0)) × γ′(u))·n ≥ 0` and
/// `(γ′(0) × (γ(u) - γ(0)))·n ≥ 0`, each up to `eps` relative.
pub fn check_convexity_sampled_with(
    seg: &CubicSegment,
    n: Vec3,
    samples: usize,
    eps: f64,
) -> Result<bool> {
    let nn = n.norm();
    if nn == 0.0 {
        return Err(GeomError::DegenerateInput.into());
    }
    let samples = samples.max(2);
    let p0 = seg.start();
    let t0 = seg.m0();
    for k in 0..samples {
        let u = k as f64 / (samples - 1) as f64;
        let d = seg.eval_derivatives(u)?;
        let g = seg.eval(u)? - p0;
        let omega = d.d1.cross(d.d2).dot(n);
        if omega < -eps * d.d1.norm() * d.d2.norm() * nn {
            return Ok(false);
        }
        if g.cross(d.d1).dot(n) < -eps * g.norm() * d.d1.norm() * nn {
            return Ok(false);
        }
        if t0.cross(g).dot(n) < -eps * t0.norm() * g.norm() * nn {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parameters of the intersection of the line `P0P1` with the line `P3P2`:
/// `P = P0 + (P1-P0)s = P3 + (P2-P3)t = P1 + (P0-P1)s̄ = P2 + (P3-P2)t̄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineIntersection {
    pub s: f64,
    pub t: f64,
    pub sbar: f64,
    pub tbar: f64,
    pub point: Vec3,
}

fn check_in_plane(pts: [Vec3; 4], n: Vec3) -> Result<()> {
    let nn = n.norm();
    if nn == 0.0 {
        return Err(GeomError::InvalidPlane.into());
    }
    for p in &pts[1..] {
        let d = *p - pts[0];
        if d.dot(n).abs() > EPS_ZERO * d.norm() * nn {
            return Err(Error::NotCoplanar);
        }
    }
    Ok(())
}

pub fn intersect_lines(p0: Vec3, p1: Vec3, p2: Vec3, p3: Vec3, n: Vec3) -> Result<LineIntersection> {
    check_in_plane([p0, p1, p2, p3], n)?;
    let den = (p1 - p0).cross(p2 - p3).dot(n);
    if den.abs() <= EPS_ZERO * (p1 - p0).norm() * (p2 - p3).norm() * n.norm() {
        return Err(Error::ParallelLines);
    }
    let s = (p3 - p0).cross(p2 - p3).dot(n) / den;
    let t = -(p1 - p0).cross(p3 - p0).dot(n) / den;
    let den_bar = (p0 - p1).cross(p3 - p2).dot(n);
    let sbar = (p2 - p1).cross(p3 - p2).dot(n) / den_bar;
    let tbar = -(p0 - p1).cross(p2 - p1).dot(n) / den_bar;
    Ok(LineIntersection {
        s,
        t,
        sbar,
        tbar,
        point: p0 + (p1 - p0) * s,
    })
}

/// Global convexity of the planar control polygon `P0P1P2P3` with respect
/// to either orientation, decided from signs of cross products along `n`.
pub fn convex_control_polygon(p0: Vec3, p1: Vec3, p2: Vec3, p3: Vec3, n: Vec3) -> Result<bool> {
    check_in_plane([p0, p1, p2, p3], n)?;
    let eps = EPS_ZERO;
    let nn = n.norm();
    let term = |a: Vec3, b: Vec3| (a.cross(b).dot(n), a.norm() * b.norm() * nn);
    let (lead, ls) = term(p1 - p0, p2 - p3);
    let (t1, s1) = term(p1 - p0, p2 - p1);
    let (t2, s2) = term(p2 - p1, p3 - p2);
    let (e0, r0) = term(p0 - p1, p3 - p0);
    let (e1, r1) = term(p3 - p0, p2 - p3);
    let neg = |v: f64, s: f64| negative(v, s, eps);
    let pos = |v: f64, s: f64| positive(v, s, eps);
    Ok(if pos(lead, ls) {
        (neg(t1, s1) && neg(t2, s2)) || (neg(e0, r0) && neg(e1, r1))
    } else if neg(lead, ls) {
        (pos(t1, s1) && pos(t2, s2)) || (pos(e0, r0) && pos(e1, r1))
    } else {
        // parallel end legs: the limit shared by both cases
        (neg(e0, r0) && neg(e1, r1) && pos(t1, s1) && pos(t2, s2))
            || (pos(e0, r0) && pos(e1, r1) && neg(t1, s1) && neg(t2, s2))
    })
}
