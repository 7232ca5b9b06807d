use crate::cubic::CubicSegment;
use crate::geom::Vec3;

use super::{negative, positive, Criterion, CriterionVerdict, Tolerances};

/// Magnitude bound for the curvature coefficients of `seg`, used to
/// classify `g_k · N` relative to the segment's own scale.
pub(crate) fn curvature_scale(seg: &CubicSegment) -> f64 {
    let h = seg.h();
    let (m0, m1, l) = (seg.m0().norm(), seg.m1().norm(), seg.chord().norm());
    6.0 / (h * h) * l * (m0 + m1) + 2.0 / h * m0 * m1
}

/// Closed-form inflection condition: applicable when `nprev · ncur < 0`,
/// passes when `g0·nprev > 0`, `g0·ncur < 0`, `g2·nprev < 0` and `g2·ncur > 0`.
pub fn check_inflection_cubic(
    seg: &CubicSegment,
    nprev: Vec3,
    ncur: Vec3,
    tol: &Tolerances,
) -> CriterionVerdict {
    let eps = tol.eps_zero;
    let dot = nprev.dot(ncur);
    let v = CriterionVerdict::new(Criterion::Inflection).with("n_dot", dot);
    if !negative(dot, nprev.norm() * ncur.norm(), eps) {
        return v;
    }
    let q = seg.curvature_quad();
    let s = curvature_scale(seg);
    let g0p = q.g0.dot(nprev);
    let g0c = q.g0.dot(ncur);
    let g2p = q.g2.dot(nprev);
    let g2c = q.g2.dot(ncur);
    let (sp, sc) = (s * nprev.norm(), s * ncur.norm());
    let passed = positive(g0p, sp, eps)
        && negative(g0c, sc, eps)
        && negative(g2p, sp, eps)
        && positive(g2c, sc, eps);
    v.with("g0_dot_nprev", g0p)
        .with("g0_dot_ncur", g0c)
        .with("g2_dot_nprev", g2p)
        .with("g2_dot_ncur", g2c)
        .decide(passed)
}
