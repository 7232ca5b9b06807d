use crate::cubic::CubicSegment;
use crate::error::{Error, Result};
use crate::geom::{project_vector, Vec3};

use super::{negative, Criterion, CriterionVerdict, Tolerances};

/// Compatibility of the bending behaviour of two segments meeting at a
/// vertex with binormal `n`: the joint tangent, projected onto the plane
/// orthogonal to `n`, must lie strictly inside the wedge of `lprev`, `lcur`:
/// `(T × lcur) · (T × lprev) < 0`.
///
/// Not applicable when `n` vanishes (collinear chords).
pub fn check_adjacency_compat(
    prev: &CubicSegment,
    next: &CubicSegment,
    n: Vec3,
    lprev: Vec3,
    lcur: Vec3,
    tol: &Tolerances,
) -> Result<CriterionVerdict> {
    let (a, b) = (prev.m1(), next.m0());
    if (a - b).norm() > tol.eps_zero * a.norm().max(b.norm())
        || (prev.end() - next.start()).norm() > tol.eps_zero * prev.end().norm().max(1.0)
    {
        return Err(Error::NotC1);
    }
    let v = CriterionVerdict::new(Criterion::AdjacencyCompat);
    if n.norm() <= tol.eps_zero * lprev.norm() * lcur.norm() {
        return Ok(v);
    }
    let t = project_vector(b, n);
    let product = t.cross(lcur).dot(t.cross(lprev));
    let scale = t.norm_sq() * lprev.norm() * lcur.norm();
    Ok(v.with("product", product)
        .with("normalized_product", if scale > 0.0 { product / scale } else { 0.0 })
        .decide(negative(product, scale, tol.eps_zero)))
}

/// Torsion compatibility at a joint between spans with discrete torsions
/// `delta_prev`, `delta_cur` (pre-normalized) and one-sided curve torsions
/// `tau_prev`, `tau_cur` at the joint (made dimensionless by the caller).
///
/// With opposite discrete torsions the spline must either vanish in torsion
/// at the joint or be torsion discontinuous there. With equal signs both
/// one-sided torsions must agree in sign with their span's discrete torsion.
pub fn check_torsion_compat(
    delta_prev: f64,
    delta_cur: f64,
    tau_prev: f64,
    tau_cur: f64,
    tol: &Tolerances,
) -> CriterionVerdict {
    let eps = tol.eps_zero;
    let v = CriterionVerdict::new(Criterion::TorsionCompat)
        .with("delta_prev", delta_prev)
        .with("delta_cur", delta_cur)
        .with("tau_prev", tau_prev)
        .with("tau_cur", tau_cur);
    if delta_prev.abs() <= eps || delta_cur.abs() <= eps {
        return v;
    }
    if delta_prev * delta_cur < 0.0 {
        let zero = tau_prev.abs() <= eps && tau_cur.abs() <= eps;
        let jump = (tau_prev - tau_cur).abs() > eps * tau_prev.abs().max(tau_cur.abs()).max(1.0);
        v.flag("zero_torsion", zero)
            .flag("torsion_discontinuous", jump)
            .decide(zero || jump)
    } else {
        v.decide(tau_prev * delta_prev > 0.0 && tau_cur * delta_cur > 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn joint(lp: Vec3, lc: Vec3, t: Vec3) -> Result<CriterionVerdict> {
        let x = Vec3::new(0.5, -0.2, 0.1);
        let prev = CubicSegment::new(x - lp, x, lp, t, 1.0)?;
        let next = CubicSegment::new(x, x + lc, t, lc, 1.0)?;
        check_adjacency_compat(&prev, &next, lp.cross(lc), lp, lc, &Tolerances::default())
    }

    #[test]
    fn bisector_passes_and_edge_direction_fails() {
        let (lp, lc) = (Vec3::X, Vec3::Y);
        assert_eq!(joint(lp, lc, Vec3::new(1.0, 1.0, 0.0)).unwrap().passed, Some(true));
        assert_eq!(joint(lp, lc, lp).unwrap().passed, Some(false));
        assert_eq!(joint(lp, lc, Vec3::new(-1.0, 1.0, 0.0)).unwrap().passed, Some(false));
    }

    #[test]
    fn catmull_rom_tangent_always_compatible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut r = || Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        for _ in 0..500 {
            let (lp, lc) = (r(), r());
            if lp.cross(lc).norm() < 1e-3 {
                continue;
            }
            // direct expansion: (T×Lc)·(T×Lp) with T = Lp + Lc equals -|Lp×Lc|²
            let t = lp + lc;
            let direct = t.cross(lc).dot(t.cross(lp));
            assert!((direct + lp.cross(lc).norm_sq()).abs() < 1e-12);
            assert_eq!(joint(lp, lc, t * 0.5).unwrap().passed, Some(true));
        }
    }

    #[test]
    fn non_c1_joint_is_an_error() {
        let prev = CubicSegment::new(Vec3::ZERO, Vec3::X, Vec3::X, Vec3::X, 1.0).unwrap();
        let next = CubicSegment::new(Vec3::X, Vec3::X + Vec3::Y, Vec3::Y, Vec3::Y, 1.0).unwrap();
        let res = check_adjacency_compat(&prev, &next, Vec3::Z, Vec3::X, Vec3::Y, &Tolerances::default());
        assert_eq!(res, Err(Error::NotC1));
    }

    #[test]
    fn collinear_vertex_not_applicable() {
        assert!(!joint(Vec3::X, Vec3::X, Vec3::X).unwrap().applicable);
    }

    #[test]
    fn torsion_compat_branches() {
        let tol = Tolerances::default();
        assert_eq!(check_torsion_compat(1.0, -1.0, 0.0, 0.0, &tol).passed, Some(true));
        let equal = check_torsion_compat(1.0, -1.0, 0.7, 0.7, &tol);
        assert_eq!(equal.passed, Some(false));
        let jump = check_torsion_compat(1.0, -1.0, 0.7, -0.4, &tol);
        assert_eq!(jump.passed, Some(true));
        assert_eq!(jump.diagnostic("torsion_discontinuous"), Some(1.0));
        assert_eq!(check_torsion_compat(1.0, 2.0, 0.5, 0.3, &tol).passed, Some(true));
        assert_eq!(check_torsion_compat(1.0, 2.0, -0.5, 0.3, &tol).passed, Some(false));
        assert!(!check_torsion_compat(0.0, 2.0, 0.5, 0.3, &tol).applicable);
    }
}
