//! A single cubic Hermite segment held in Bézier form.
//!
//! Derivatives are taken with respect to the global parameter `t`, so each
//! order picks up a factor `1/h` from `u = (t - t_{i-1}) / h`.

use crate::error::{Error, Result};
use crate::geom::{project_point, triple, Plane, Vec3, EPS_ZERO};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicSegment {
    p0: Vec3,
    p1: Vec3,
    p2: Vec3,
    p3: Vec3,
    m0: Vec3,
    m1: Vec3,
    h: f64,
}

/// First, second and third derivative with respect to `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivatives {
    pub d1: Vec3,
    pub d2: Vec3,
    pub d3: Vec3,
}

/// Bernstein coefficients of the curvature vector `ω(u) = γ′ × γ″`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureQuad {
    pub g0: Vec3,
    pub g1: Vec3,
    pub g2: Vec3,
}

impl CurvatureQuad {
    pub fn eval(&self, u: f64) -> Vec3 {
        let v = 1.0 - u;
        self.g0 * (v * v) + self.g1 * (u * v) + self.g2 * (u * u)
    }

    pub fn coefficients(&self) -> [Vec3; 3] {
        [self.g0, self.g1, self.g2]
    }
}

fn check_u(u: f64) -> Result<()> {
    if (0.0..=1.0).contains(&u) {
        Ok(())
    } else {
        Err(Error::Domain(u))
    }
}

impl CubicSegment {
    /// Hermite data: endpoints, end tangents (w.r.t. `t`) and width `h`.
    pub fn new(p0: Vec3, p3: Vec3, m0: Vec3, m1: Vec3, h: f64) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::NonPositiveWidth(h));
        }
        if [p0, p3, m0, m1].iter().any(|v| !v.is_finite()) {
            return Err(crate::error::GeomError::NonFinite.into());
        }
        let chord = p3 - p0;
        if chord.norm() <= EPS_ZERO * p0.norm().max(p3.norm()) || chord.norm() == 0.0 {
            return Err(Error::DegenerateChord);
        }
        Ok(Self::from_hermite(p0, p3, m0, m1, h))
    }

    fn from_hermite(p0: Vec3, p3: Vec3, m0: Vec3, m1: Vec3, h: f64) -> Self {
        Self {
            p0,
            p1: p0 + m0 * (h / 3.0),
            p2: p3 - m1 * (h / 3.0),
            p3,
            m0,
            m1,
            h,
        }
    }

    /// Builds from Bézier control points. The chord may be degenerate here,
    /// which happens for projections along the chord direction.
    pub fn from_bezier(points: [Vec3; 4], h: f64) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::NonPositiveWidth(h));
        }
        let [p0, p1, p2, p3] = points;
        Ok(Self {
            p0,
            p1,
            p2,
            p3,
            m0: (p1 - p0) * (3.0 / h),
            m1: (p3 - p2) * (3.0 / h),
            h,
        })
    }

    pub fn bezier(&self) -> [Vec3; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    pub fn start(&self) -> Vec3 {
        self.p0
    }

    pub fn end(&self) -> Vec3 {
        self.p3
    }

    pub fn m0(&self) -> Vec3 {
        self.m0
    }

    pub fn m1(&self) -> Vec3 {
        self.m1
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn chord(&self) -> Vec3 {
        self.p3 - self.p0
    }

    pub fn eval(&self, u: f64) -> Result<Vec3> {
        check_u(u)?;
        Ok(self.point_at(u))
    }

    pub(crate) fn point_at(&self, u: f64) -> Vec3 {
        let v = 1.0 - u;
        self.p0 * (v * v * v)
            + self.p1 * (3.0 * u * v * v)
            + self.p2 * (3.0 * u * u * v)
            + self.p3 * (u * u * u)
    }

    pub fn eval_derivatives(&self, u: f64) -> Result<Derivatives> {
        check_u(u)?;
        Ok(self.derivatives_at(u))
    }

    pub(crate) fn derivatives_at(&self, u: f64) -> Derivatives {
        let v = 1.0 - u;
        let h = self.h;
        let [q0, q1, q2] = self.derivative_points();
        let d1 = q0 * (v * v) + q1 * (2.0 * u * v) + q2 * (u * u);
        let a = self.p2 - self.p1 * 2.0 + self.p0;
        let b = self.p3 - self.p2 * 2.0 + self.p1;
        let d2 = (a * v + b * u) * (6.0 / (h * h));
        Derivatives {
            d1,
            d2,
            d3: self.third_derivative(),
        }
    }

    /// Control points of `γ′` as a quadratic Bézier:
    /// `m0`, `(3/h)L - m0 - m1`, `m1`.
    pub fn derivative_points(&self) -> [Vec3; 3] {
        [
            self.m0,
            self.chord() * (3.0 / self.h) - self.m0 - self.m1,
            self.m1,
        ]
    }

    /// Constant `γ‴ = (6/h³)(h(m0 + m1) - 2L)`.
    pub fn third_derivative(&self) -> Vec3 {
        let h = self.h;
        ((self.m0 + self.m1) * h - self.chord() * 2.0) * (6.0 / (h * h * h))
    }

    pub fn curvature_quad(&self) -> CurvatureQuad {
        let h = self.h;
        let l = self.chord();
        let mm = self.m0.cross(self.m1) * (2.0 / h);
        CurvatureQuad {
            g0: self.m0.cross(l) * (6.0 / (h * h)) - mm,
            g1: mm,
            g2: l.cross(self.m1) * (6.0 / (h * h)) - mm,
        }
    }

    /// Constant `det[γ′, γ″, γ‴] = (12/h⁴)[m0 L m1]`.
    pub fn torsion_numerator(&self) -> f64 {
        12.0 / self.h.powi(4) * triple(self.m0, self.chord(), self.m1)
    }
}

/// Bernstein coefficients of `c × c′` for the quadratic Bézier `c` with
/// control points `c0, c1, c2`, in the form
/// `q0 (1-t)² + q1 · 2t(1-t) + q2 t²`.
pub fn quadratic_cross(c0: Vec3, c1: Vec3, c2: Vec3) -> [Vec3; 3] {
    [c0.cross(c1) * 2.0, c0.cross(c2), c1.cross(c2) * 2.0]
}

/// Orthogonal projection of the segment's control polygon onto `pl`.
pub fn project_segment(seg: &CubicSegment, pl: &Plane) -> CubicSegment {
    let pts = seg.bezier().map(|p| project_point(p, pl));
    CubicSegment::from_bezier(pts, seg.h).expect("width already validated")
}
