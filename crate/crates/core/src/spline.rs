//! C¹ cubic splines through a data polygon.

use serde::{Deserialize, Serialize};

use crate::criteria::Tolerances;
use crate::cubic::CubicSegment;
use crate::discrete::DataPolygon;
use crate::error::{Error, Result};
use crate::geom::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TangentMode {
    CatmullRom,
    Provided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameterization {
    Uniform,
    Chord,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplineConfig {
    pub tangent_mode: TangentMode,
    /// Scale on Catmull-Rom tangent magnitudes.
    pub tension: f64,
    pub parameterization: Parameterization,
    pub tolerances: Tolerances,
    /// Parameter samples per segment for the sampled sub-checks.
    pub samples: usize,
}

impl Default for SplineConfig {
    fn default() -> Self {
        Self {
            tangent_mode: TangentMode::CatmullRom,
            tension: 0.5,
            parameterization: Parameterization::Chord,
            tolerances: Tolerances::default(),
            samples: 512,
        }
    }
}

impl SplineConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tension > 0.0 && self.tension.is_finite()) {
            return Err(Error::Config(format!("tension must be positive, got {}", self.tension)));
        }
        if self.samples < 3 {
            return Err(Error::Config(format!("samples must be at least 3, got {}", self.samples)));
        }
        self.tolerances.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spline {
    polygon: DataPolygon,
    knots: Vec<f64>,
    segments: Vec<CubicSegment>,
}

impl Spline {
    pub fn polygon(&self) -> &DataPolygon {
        &self.polygon
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn segments(&self) -> &[CubicSegment] {
        &self.segments
    }

    /// Segment `i in 1..=n`, from `x_{i-1}` to `x_i`.
    pub fn segment(&self, i: usize) -> Option<&CubicSegment> {
        i.checked_sub(1).and_then(|k| self.segments.get(k))
    }

    /// Tangent at every data point.
    pub fn tangents(&self) -> Vec<Vec3> {
        let mut out: Vec<Vec3> = self.segments.iter().map(|s| s.m0()).collect();
        out.push(self.segments[self.segments.len() - 1].m1());
        out
    }
}

fn make_knots(polygon: &DataPolygon, param: Parameterization) -> Vec<f64> {
    let mut knots = vec![0.0];
    let mut t = 0.0;
    for l in polygon.chords() {
        t += match param {
            Parameterization::Uniform => 1.0,
            Parameterization::Chord => l.norm(),
        };
        knots.push(t);
    }
    knots
}

/// Catmull-Rom tangents `2τ(x_{i+1} - x_{i-1}) / (t_{i+1} - t_{i-1})`,
/// one-sided `2τ L / h` at the two ends. With unit knot spacing this is
/// `τ(x_{i+1} - x_{i-1})`.
pub fn catmull_rom_tangents(points: &[Vec3], knots: &[f64], tension: f64) -> Vec<Vec3> {
    let n = points.len() - 1;
    (0..=n)
        .map(|i| {
            let (lo, hi) = (i.saturating_sub(1), (i + 1).min(n));
            (points[hi] - points[lo]) * (2.0 * tension / (knots[hi] - knots[lo]))
        })
        .collect()
}

/// Builds the spline. `knots`, when given, override the configured
/// parameterization; `tangents` are required in provided-tangent mode.
pub fn build_spline(
    polygon: DataPolygon,
    cfg: &SplineConfig,
    tangents: Option<&[Vec3]>,
    knots: Option<&[f64]>,
) -> Result<Spline> {
    cfg.validate()?;
    let n = polygon.n();
    let knots = match knots {
        Some(k) => {
            if k.len() != n + 1 {
                return Err(Error::KnotCountMismatch {
                    expected: n + 1,
                    got: k.len(),
                });
            }
            if let Some(i) = k.windows(2).position(|w| !(w[1] > w[0]) || !w[1].is_finite()) {
                return Err(Error::KnotsNotIncreasing(i + 1));
            }
            k.to_vec()
        }
        None => make_knots(&polygon, cfg.parameterization),
    };
    let tangents = match cfg.tangent_mode {
        TangentMode::CatmullRom => catmull_rom_tangents(polygon.points(), &knots, cfg.tension),
        TangentMode::Provided => {
            let t = tangents.ok_or(Error::TangentCountMismatch {
                expected: n + 1,
                got: 0,
            })?;
            if t.len() != n + 1 {
                return Err(Error::TangentCountMismatch {
                    expected: n + 1,
                    got: t.len(),
                });
            }
            t.to_vec()
        }
    };
    let segments = (1..=n)
        .map(|i| {
            CubicSegment::new(
                polygon.point(i - 1),
                polygon.point(i),
                tangents[i - 1],
                tangents[i],
                knots[i] - knots[i - 1],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Spline {
        polygon,
        knots,
        segments,
    })
}

/// One sample of the spline: segment index (1-based), global parameter,
/// position, curvature vector `γ′ × γ″`, torsion numerator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplineSample {
    pub segment: usize,
    pub t: f64,
    pub point: Vec3,
    pub omega: Vec3,
    pub tau_num: f64,
}

/// `per_segment` uniform samples on every segment, endpoints included.
pub fn sample_spline(spline: &Spline, per_segment: usize) -> Result<Vec<SplineSample>> {
    if per_segment < 2 {
        return Err(Error::Config(format!(
            "per-segment sample count must be at least 2, got {per_segment}"
        )));
    }
    let mut out = Vec::with_capacity(per_segment * spline.segments.len());
    for (k, seg) in spline.segments.iter().enumerate() {
        let (t0, h) = (spline.knots[k], seg.h());
        let q = seg.curvature_quad();
        let tau = seg.torsion_numerator();
        for j in 0..per_segment {
            let u = j as f64 / (per_segment - 1) as f64;
            out.push(SplineSample {
                segment: k + 1,
                t: if j + 1 == per_segment { spline.knots[k + 1] } else { t0 + u * h },
                point: seg.eval(u)?,
                omega: q.eval(u),
                tau_num: tau,
            });
        }
    }
    Ok(out)
}
