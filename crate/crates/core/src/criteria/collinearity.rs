use crate::cubic::CubicSegment;
use crate::geom::{sine_angle, Vec3};

use super::{Criterion, CriterionVerdict, Tolerances};

/// Sine bound on the derivative control points of `seg` against the two
/// co-directed chords `lprev`, `lcur` meeting at a collinear vertex.
///
/// Passes when every non-zero derivative control point makes an angle with
/// sine below `eps0` with both chords. The `angle_hypothesis` diagnostic is
/// 1 when all derivative control points point forward along the chords.
pub fn check_collinearity_cubic(
    seg: &CubicSegment,
    lprev: Vec3,
    lcur: Vec3,
    tol: &Tolerances,
) -> CriterionVerdict {
    let scale = lprev.norm() * lcur.norm();
    let v = CriterionVerdict::new(Criterion::Collinearity);
    let parallel = lprev.cross(lcur).norm() <= tol.eps_zero * scale;
    if !(parallel && lprev.dot(lcur) > 0.0) {
        return v;
    }
    let mut sup: f64 = 0.0;
    let mut hypothesis = true;
    let points = seg.derivative_points();
    let size = points.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let mut v = v;
    for (k, p) in points.iter().enumerate() {
        if p.norm() <= tol.eps_zero * size {
            hypothesis = false;
            continue;
        }
        let mut worst: f64 = 0.0;
        for l in [lprev, lcur] {
            worst = worst.max(sine_angle(*p, l).unwrap_or(0.0));
            hypothesis &= p.dot(l) > 0.0;
        }
        v.set(&format!("sine_p{k}"), worst);
        sup = sup.max(worst);
    }
    v.with("sup_sine", sup)
        .with("eps0", tol.eps0)
        .flag("angle_hypothesis", hypothesis)
        .decide(sup < tol.eps0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tangents_along_chord_pass() {
        let l = Vec3::new(1.0, 2.0, 2.0);
        let seg = CubicSegment::new(Vec3::ZERO, l, l, l, 1.0).unwrap();
        let verdict = check_collinearity_cubic(&seg, l, l * 2.0, &Tolerances { eps0: 1e-6, ..Default::default() });
        assert_eq!(verdict.passed, Some(true));
        assert_eq!(verdict.diagnostic("sup_sine"), Some(0.0));
        assert_eq!(verdict.diagnostic("angle_hypothesis"), Some(1.0));
    }

    #[test]
    fn tilted_tangent_fails() {
        let l = Vec3::X;
        let (s, c) = (0.2f64, (1.0f64 - 0.04).sqrt());
        let m0 = Vec3::new(c, s, 0.0);
        let seg = CubicSegment::new(Vec3::ZERO, l, m0, l, 1.0).unwrap();
        let tol = Tolerances { eps0: 0.1, ..Default::default() };
        let verdict = check_collinearity_cubic(&seg, l, l, &tol);
        assert_eq!(verdict.passed, Some(false));
        assert!((verdict.diagnostic("sine_p0").unwrap() - sine_angle(m0, l).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn requires_codirected_chords() {
        let seg = CubicSegment::new(Vec3::ZERO, Vec3::X, Vec3::X, Vec3::X, 1.0).unwrap();
        let tol = Tolerances::default();
        assert!(!check_collinearity_cubic(&seg, Vec3::X, -Vec3::X, &tol).applicable);
        assert!(!check_collinearity_cubic(&seg, Vec3::X, Vec3::Y, &tol).applicable);
    }
}
