use crate::cubic::CubicSegment;
use crate::geom::{sine_angle, Vec3};

use super::inflection::curvature_scale;
use super::{Criterion, CriterionVerdict, Tolerances};

/// Sine bound on the curvature coefficients `g0, g1, g2` of `seg` against
/// the binormals at the segment ends. Applicable when `|delta| <= eps_zero`
/// and both binormals are non-zero; `delta` is expected pre-normalized as
/// for [`super::check_torsion_cubic`].
///
/// A vanishing `g_k` contributes nothing to the supremum.
pub fn check_coplanarity_cubic(
    seg: &CubicSegment,
    nprev: Vec3,
    ncur: Vec3,
    delta: f64,
    tol: &Tolerances,
) -> CriterionVerdict {
    let v = CriterionVerdict::new(Criterion::Coplanarity).with("delta", delta);
    if delta.abs() > tol.eps_zero || nprev.norm() == 0.0 || ncur.norm() == 0.0 {
        return v;
    }
    let q = seg.curvature_quad();
    let floor = tol.eps_zero * curvature_scale(seg);
    let mut v = v;
    let mut sup: f64 = 0.0;
    let mut hypothesis = true;
    for (k, g) in q.coefficients().iter().enumerate() {
        if g.norm() <= floor {
            continue;
        }
        let mut worst: f64 = 0.0;
        for n in [nprev, ncur] {
            worst = worst.max(sine_angle(*g, n).unwrap_or(0.0));
            hypothesis &= g.dot(n) >= 0.0;
        }
        v.set(&format!("sine_g{k}"), worst);
        sup = sup.max(worst);
    }
    v.with("sup_sine", sup)
        .with("eps1", tol.eps1)
        .flag("angle_hypothesis", hypothesis)
        .decide(sup < tol.eps1)
}

/// Coefficients `(α, β)` with `m = α l + β other`, if `m` lies in the plane
/// of `l` and `other` (to `eps` relative).
pub fn split_tangent(m: Vec3, l: Vec3, other: Vec3, eps: f64) -> Option<(f64, f64)> {
    let n = l.cross(other);
    let nn = n.norm_sq();
    if nn == 0.0 || m.dot(n).abs() > eps * m.norm() * n.norm() {
        return None;
    }
    let alpha = m.cross(other).dot(n) / nn;
    let beta = l.cross(m).dot(n) / nn;
    Some((alpha, beta))
}

/// The exact coplanarity condition on tangents:
/// `m0 = α1 L + β1 Lprev` and `m1 = α2 L + β2 Lnext` with all coefficients positive.
pub fn check_coplanarity_alternative(
    seg: &CubicSegment,
    lprev: Vec3,
    lnext: Vec3,
    tol: &Tolerances,
) -> CriterionVerdict {
    let l = seg.chord();
    let mut v = CriterionVerdict::new(Criterion::Coplanarity);
    let first = split_tangent(seg.m0(), l, lprev, tol.eps_zero);
    let second = split_tangent(seg.m1(), l, lnext, tol.eps_zero);
    let mut ok = first.is_some() && second.is_some();
    for (name, split) in [("1", first), ("2", second)] {
        if let Some((alpha, beta)) = split {
            v.set(&format!("alpha{name}"), alpha);
            v.set(&format!("beta{name}"), beta);
            ok &= alpha > 0.0 && beta > 0.0;
        }
    }
    v.decide(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn planar() -> (CubicSegment, Vec3, Vec3, Vec3, Vec3) {
        let x = [
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(2.0, 1.0, 0.0),
            Vec3::new(2.0, 3.0, 0.0),
        ];
        let (lp, l, ln) = (x[1] - x[0], x[2] - x[1], x[3] - x[2]);
        let seg = CubicSegment::new(x[1], x[2], (lp + l) * 0.5, (l + ln) * 0.5, 1.0).unwrap();
        (seg, lp.cross(l), l.cross(ln), lp, ln)
    }

    #[test]
    fn planar_segment_passes() {
        let (seg, np, nc, lp, ln) = planar();
        let verdict = check_coplanarity_cubic(&seg, np, nc, 0.0, &Tolerances::default());
        assert_eq!(verdict.passed, Some(true));
        assert_eq!(verdict.diagnostic("sup_sine"), Some(0.0));
        let alt = check_coplanarity_alternative(&seg, lp, ln, &Tolerances::default());
        assert_eq!(alt.passed, Some(true));
        assert!((alt.diagnostic("alpha1").unwrap() - 0.5).abs() < 1e-15);
        assert!((alt.diagnostic("beta2").unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn lifted_tangent_fails() {
        let (seg, np, nc, lp, ln) = planar();
        let tol = Tolerances { eps1: 0.1, ..Default::default() };
        // lift m1 until g2 leans 0.3 (in sine) off the plane normal
        let lift = |z: f64| {
            let m1 = seg.m1() + Vec3::Z * z;
            CubicSegment::new(seg.start(), seg.end(), seg.m0(), m1, 1.0).unwrap()
        };
        let sine = |z: f64| sine_angle(lift(z).curvature_quad().g2, Vec3::Z).unwrap();
        let (mut lo, mut hi) = (0.0, 10.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if sine(mid) < 0.3 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let lifted = lift(lo);
        assert!((sine(lo) - 0.3).abs() < 1e-9);
        let verdict = check_coplanarity_cubic(&lifted, np, nc, 0.0, &tol);
        assert_eq!(verdict.passed, Some(false));
        assert!(verdict.diagnostic("sine_g2").unwrap() >= 0.3 - 1e-9);
        assert_eq!(check_coplanarity_alternative(&lifted, lp, ln, &tol).passed, Some(false));
    }

    #[test]
    fn torsion_data_not_applicable() {
        let (seg, np, nc, _, _) = planar();
        assert!(!check_coplanarity_cubic(&seg, np, nc, 0.5, &Tolerances::default()).applicable);
    }

    #[test]
    fn split_examples() {
        let (a, b) = split_tangent(Vec3::new(2.0, 3.0, 0.0), Vec3::X, Vec3::Y, 1e-12).unwrap();
        assert_eq!((a, b), (2.0, 3.0));
        assert!(split_tangent(Vec3::Z, Vec3::X, Vec3::Y, 1e-12).is_none());
    }
}
