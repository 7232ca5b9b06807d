use crate::cubic::CubicSegment;
use crate::geom::triple;

use super::{positive, Criterion, CriterionVerdict, Tolerances};

/// Torsion sign condition `[m0 L m1] Δ > 0`, applicable when `|Δ| > eps_zero`.
///
/// `delta` is compared with `eps_zero` as given, so callers pass the
/// discrete torsion divided by the three chord lengths.
pub fn check_torsion_cubic(seg: &CubicSegment, delta: f64, tol: &Tolerances) -> CriterionVerdict {
    let (m0, l, m1) = (seg.m0(), seg.chord(), seg.m1());
    let t = triple(m0, l, m1);
    let v = CriterionVerdict::new(Criterion::Torsion).with("delta", delta);
    if delta.abs() <= tol.eps_zero {
        return v;
    }
    let scale = m0.norm() * l.norm() * m1.norm() * delta.abs();
    v.with("triple", t)
        .with("triple_times_delta", t * delta)
        .decide(positive(t * delta, scale, tol.eps_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Vec3;

    fn data() -> (Vec3, Vec3, Vec3) {
        (
            Vec3::new(1.0, 0.3, -0.2),
            Vec3::new(0.2, 1.0, 0.4),
            Vec3::new(-0.3, 0.1, 1.0),
        )
    }

    #[test]
    fn catmull_rom_passes() {
        let (lp, l, ln) = data();
        let seg = CubicSegment::new(Vec3::ZERO, l, (lp + l) * 0.5, (l + ln) * 0.5, 1.0).unwrap();
        let delta = triple(lp, l, ln);
        let verdict = check_torsion_cubic(&seg, delta, &Tolerances::default());
        assert_eq!(verdict.passed, Some(true));
        let product = verdict.diagnostic("triple_times_delta").unwrap();
        assert!((product - 0.25 * delta * delta).abs() < 1e-12);
    }

    #[test]
    fn reflected_tangent_fails() {
        let (lp, l, ln) = data();
        let m0 = lp + l;
        let m1 = l + ln;
        // reflect m1 through the plane spanned by L and m0
        let n = l.cross(m0).normalized().unwrap();
        let reflected = m1 - n * (2.0 * m1.dot(n));
        let seg = CubicSegment::new(Vec3::ZERO, l, m0, reflected, 1.0).unwrap();
        let delta = triple(lp, l, ln);
        assert!(triple(m0, l, reflected) * delta < 0.0);
        assert_eq!(check_torsion_cubic(&seg, delta, &Tolerances::default()).passed, Some(false));
    }

    #[test]
    fn coplanar_data_not_applicable() {
        let seg = CubicSegment::new(Vec3::ZERO, Vec3::X, Vec3::Y, Vec3::X, 1.0).unwrap();
        assert!(!check_torsion_cubic(&seg, 0.0, &Tolerances::default()).applicable);
    }
}
