use std::f64::consts::PI;

use crate::discrete::{is_regular_arc, sign_changes, PolyArc2};
use crate::error::{Error, Result};
use crate::geom::{cross2, Vec2, EPS_ZERO};

const SCAN_SAMPLES: usize = 2048;

/// Signed sum of the turning angles at the interior vertices.
pub fn total_turning(points: &[Vec2]) -> f64 {
    let edges: Vec<Vec2> = points.windows(2).map(|w| w[1] - w[0]).collect();
    edges
        .windows(2)
        .map(|w| cross2(w[0], w[1]).atan2(w[0].dot(w[1])))
        .sum()
}

fn curvature_sign_scan(ctrl: [Vec2; 4], samples: usize) -> usize {
    let d = [ctrl[1] - ctrl[0], ctrl[2] - ctrl[1], ctrl[3] - ctrl[2]];
    let values: Vec<f64> = (0..samples)
        .map(|k| {
            let u = k as f64 / (samples - 1) as f64;
            let v = 1.0 - u;
            let d1 = d[0] * (v * v) + d[1] * (2.0 * u * v) + d[2] * (u * u);
            let d2 = (d[1] - d[0]) * v + (d[2] - d[1]) * u;
            let k = cross2(d1, d2);
            if k.abs() <= EPS_ZERO * d1.norm() * d2.norm() {
                0.0
            } else {
                k
            }
        })
        .collect();
    sign_changes(&values)
}

/// Number of inflections of the planar cubic Bézier curve with control
/// points `A, B, C, D`.
///
/// If the control polygon turns through more than π in total the count is 0
/// or 2, decided by whether `|B-A||C-D| / (|B-P||C-P|)` exceeds 4, where `P`
/// joins the lines `AB` and `CD`. Otherwise the count is read off a dense
/// scan of the curvature sign.
pub fn planar_cubic_inflection(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> Result<usize> {
    let arc = PolyArc2::new(vec![a, b, c, d])?;
    if total_turning(arc.points()).abs() <= PI || is_regular_arc(&arc) {
        return Ok(curvature_sign_scan([a, b, c, d], SCAN_SAMPLES));
    }
    let (u, w) = (b - a, c - d);
    let den = cross2(u, w);
    if den.abs() <= EPS_ZERO * u.norm() * w.norm() {
        return Err(Error::UndefinedRatio);
    }
    let s = cross2(d - a, w) / den;
    let p = a + u * s;
    let ratio = u.norm() * w.norm() / ((b - p).norm() * (c - p).norm());
    Ok(if ratio > 4.0 { 2 } else { 0 })
}
