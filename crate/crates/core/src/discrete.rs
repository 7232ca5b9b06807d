//! Discrete shape measures of the data polygon: chords, discrete binormals,
//! discrete torsions, qualifying-condition flags, and inflection counts of
//! planar and spatial polygonal arcs.
//!
//! Indexing follows the data: points `x_0..=x_n`, chords `L_i = x_i - x_{i-1}`
//! for `i in 1..=n`. The binormal at an interior vertex `x_v` is
//! `L_v × L_{v+1}`; the span `x_{i-1}x_i` is bounded by the binormals at
//! `x_{i-1}` and `x_i` and carries the discrete torsion
//! `Δ_i = [L_{i-1} L_i L_{i+1}]`.

use serde::{Serialize, Serializer};

use crate::error::{Error, GeomError, Result};
use crate::geom::{bbox_diagonal, cross2, fibonacci_sphere, triple, Sign, Vec2, Vec3, EPS_ZERO};

/// Number of strict sign changes in `seq`; zeros are skipped.
pub fn sign_changes(seq: &[f64]) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for &v in seq {
        if v == 0.0 || v.is_nan() {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            count += 1;
        }
        last = v;
    }
    count
}

fn signed_values(values: impl Iterator<Item = (f64, f64)>, eps: f64) -> Vec<f64> {
    values
        .map(|(v, scale)| Sign::classify(v, scale, eps).as_i8() as f64)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DataPolygon {
    points: Vec<Vec3>,
    chords: Vec<Vec3>,
    // binormals[v - 1] belongs to vertex v, v in 1..=n-1
    binormals: Vec<Vec3>,
    // torsions[i - 2] belongs to span i, i in 2..=n-1
    torsions: Vec<f64>,
    diagonal: f64,
}

impl DataPolygon {
    /// Builds the polygon, rejecting non-finite coordinates and consecutive
    /// points closer than `EPS_ZERO` times the bounding-box diagonal.
    pub fn new(points: Vec<Vec3>) -> Result<Self> {
        Self::with_tolerance(points, EPS_ZERO)
    }

    pub fn with_tolerance(points: Vec<Vec3>, eps_zero: f64) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints {
                needed: 2,
                got: points.len(),
            });
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite.into());
        }
        let diagonal = bbox_diagonal(&points);
        let chords: Vec<Vec3> = points.windows(2).map(|w| w[1] - w[0]).collect();
        if let Some(index) = chords
            .iter()
            .position(|l| l.norm() <= eps_zero * diagonal || l.norm() == 0.0)
        {
            return Err(Error::DuplicatePoint { index });
        }
        let binormals = chords.windows(2).map(|w| w[0].cross(w[1])).collect();
        let torsions = chords
            .windows(3)
            .map(|w| triple(w[0], w[1], w[2]))
            .collect();
        Ok(Self {
            points,
            chords,
            binormals,
            torsions,
            diagonal,
        })
    }

    /// Number of chords (and spline segments).
    pub fn n(&self) -> usize {
        self.chords.len()
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn point(&self, k: usize) -> Vec3 {
        self.points[k]
    }

    pub fn diagonal(&self) -> f64 {
        self.diagonal
    }

    /// `L_i`, `i in 1..=n`.
    pub fn chord(&self, i: usize) -> Option<Vec3> {
        i.checked_sub(1).and_then(|k| self.chords.get(k)).copied()
    }

    pub fn chords(&self) -> &[Vec3] {
        &self.chords
    }

    /// Discrete binormal `L_v × L_{v+1}` at interior vertex `v in 1..=n-1`.
    pub fn binormal(&self, v: usize) -> Option<Vec3> {
        v.checked_sub(1).and_then(|k| self.binormals.get(k)).copied()
    }

    /// Binormals of all interior vertices in order; these are also the
    /// turn vectors of the polygonal arc.
    pub fn binormals(&self) -> &[Vec3] {
        &self.binormals
    }

    /// Discrete torsion `Δ_i`, `i in 2..=n-1`.
    pub fn torsion(&self, i: usize) -> Option<f64> {
        i.checked_sub(2).and_then(|k| self.torsions.get(k)).copied()
    }

    pub fn torsions(&self) -> &[f64] {
        &self.torsions
    }

    fn binormal_scale(&self, v: usize) -> f64 {
        self.chords[v - 1].norm() * self.chords[v].norm()
    }

    fn torsion_scale(&self, i: usize) -> f64 {
        self.chords[i - 2].norm() * self.chords[i - 1].norm() * self.chords[i].norm()
    }

    /// Whether the binormal at `v` vanishes to tolerance (parallel chords).
    pub fn is_degenerate_vertex(&self, v: usize, eps: f64) -> bool {
        match self.binormal(v) {
            Some(b) => b.norm() <= eps * self.binormal_scale(v),
            None => false,
        }
    }

    /// Parallel, co-directed chords meet at `v`.
    pub fn is_collinear_vertex(&self, v: usize, eps: f64) -> bool {
        self.is_degenerate_vertex(v, eps) && self.chords[v - 1].dot(self.chords[v]) > 0.0
    }

    /// Sign of `Δ_i` classified against `|L_{i-1}||L_i||L_{i+1}|`.
    pub fn torsion_sign(&self, i: usize, eps: f64) -> Option<Sign> {
        self.torsion(i)
            .map(|d| Sign::classify(d, self.torsion_scale(i), eps))
    }

    /// Sign of `N_{i-1} · N_i` for span `i`, classified against `|N_{i-1}||N_i|`.
    pub fn binormal_agreement(&self, i: usize, eps: f64) -> Option<Sign> {
        let prev = self.binormal(i.checked_sub(1)?)?;
        let cur = self.binormal(i)?;
        if self.is_degenerate_vertex(i - 1, eps) || self.is_degenerate_vertex(i, eps) {
            return Some(Sign::Zero);
        }
        Some(Sign::classify(prev.dot(cur), prev.norm() * cur.norm(), eps))
    }

    /// Qualifying data conditions for span `i` (between `x_{i-1}` and `x_i`).
    pub fn classify(&self, i: usize, eps: f64) -> Result<ShapeFlags> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: n,
            });
        }
        let mut flags = ShapeFlags::default();
        match self.binormal_agreement(i, eps) {
            Some(Sign::Positive) => flags.convex = true,
            Some(Sign::Negative) => flags.inflection = true,
            _ => {}
        }
        flags.collinear = (i >= 2 && self.is_collinear_vertex(i - 1, eps))
            || (i < n && self.is_collinear_vertex(i, eps));
        match self.torsion_sign(i, eps) {
            Some(Sign::Zero) => {
                flags.coplanar =
                    !self.is_degenerate_vertex(i - 1, eps) && !self.is_degenerate_vertex(i, eps);
            }
            Some(_) => flags.torsion = true,
            None => {}
        }
        Ok(flags)
    }
}

/// The set of qualifying data conditions that hold for a span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ShapeFlags {
    pub convex: bool,
    pub inflection: bool,
    pub collinear: bool,
    pub torsion: bool,
    pub coplanar: bool,
}

impl ShapeFlags {
    pub fn names(&self) -> Vec<&'static str> {
        let all = [
            (self.convex, "ConvexData"),
            (self.inflection, "InflectionData"),
            (self.collinear, "CollinearData"),
            (self.torsion, "TorsionData"),
            (self.coplanar, "CoplanarData"),
        ];
        all.iter().filter(|(on, _)| *on).map(|(_, n)| *n).collect()
    }
}

impl Serialize for ShapeFlags {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.names().serialize(s)
    }
}

/// A planar polygonal arc with distinct consecutive points.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyArc2 {
    points: Vec<Vec2>,
}

impl PolyArc2 {
    pub fn new(points: Vec<Vec2>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints {
                needed: 2,
                got: points.len(),
            });
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite.into());
        }
        if let Some(index) = points.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint { index });
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Vec2] {
        &self.points
    }

    fn edges(&self) -> Vec<Vec2> {
        self.points.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Turn values `V_i = (P_i - P_{i-1}) × (P_{i+1} - P_i)`.
    pub fn turns(&self) -> Vec<f64> {
        self.edges().windows(2).map(|w| cross2(w[0], w[1])).collect()
    }

    pub fn reversed(&self) -> PolyArc2 {
        let mut points = self.points.clone();
        points.reverse();
        PolyArc2 { points }
    }
}

/// Regularity of a planar arc: its edge directions fit in a closed
/// half-plane and no vertex turns through exactly π.
pub fn is_regular_arc(arc: &PolyArc2) -> bool {
    is_regular_arc_with(arc, EPS_ZERO)
}

pub fn is_regular_arc_with(arc: &PolyArc2, eps: f64) -> bool {
    let edges = arc.edges();
    let reversal = edges.windows(2).any(|w| {
        let scale = w[0].norm() * w[1].norm();
        Sign::classify(cross2(w[0], w[1]), scale, eps) == Sign::Zero && w[0].dot(w[1]) < 0.0
    });
    if reversal {
        return false;
    }
    let mut angles: Vec<f64> = edges.iter().map(|e| e.y.atan2(e.x)).collect();
    angles.sort_by(f64::total_cmp);
    let tau = std::f64::consts::TAU;
    let mut max_gap = angles[0] + tau - angles[angles.len() - 1];
    for w in angles.windows(2) {
        max_gap = max_gap.max(w[1] - w[0]);
    }
    max_gap >= std::f64::consts::PI - eps
}

/// `i(Γ)`: strict sign changes of the turn sequence.
pub fn planar_inflection_count(arc: &PolyArc2) -> usize {
    let edges = arc.edges();
    let signs = signed_values(
        edges
            .windows(2)
            .map(|w| (cross2(w[0], w[1]), w[0].norm() * w[1].norm())),
        EPS_ZERO,
    );
    sign_changes(&signs)
}

/// Default number of Fibonacci-sphere directions for spatial counts.
pub const DEFAULT_DIRECTIONS: usize = 2048;

fn arrangement_candidates(normals: &[Vec3]) -> Vec<Vec3> {
    const DELTA: f64 = 1e-5;
    let units: Vec<Vec3> = normals.iter().filter_map(|v| v.normalized()).collect();
    let mut out = Vec::new();
    for u in &units {
        out.push(*u);
        out.push(-*u);
    }
    for (a_idx, a) in units.iter().enumerate() {
        for b in &units[a_idx + 1..] {
            let Some(vertex) = a.cross(*b).normalized() else {
                continue;
            };
            for x in [vertex, -vertex] {
                // p moves off circle a only, q off circle b only
                let (Some(p), Some(q)) = (x.cross(*b).normalized(), x.cross(*a).normalized())
                else {
                    continue;
                };
                let p = if p.dot(*a) < 0.0 { -p } else { p };
                let q = if q.dot(*b) < 0.0 { -q } else { q };
                for (sa, sb) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                    if let Some(w) = (x + (p * sa + q * sb) * DELTA).normalized() {
                        out.push(w);
                    }
                }
            }
        }
    }
    out
}

/// Lower bound on `I(Γ) = sup_w S(w·V_1, …, w·V_{n-1})` over a deterministic
/// direction set: `directions` Fibonacci-sphere samples, the coordinate
/// axes, `±V_i`, and perturbations around every pairwise arrangement vertex.
pub fn spatial_arc_inflection_count(poly: &DataPolygon, directions: usize) -> usize {
    let turns = poly.binormals();
    if turns.len() < 2 {
        return 0;
    }
    let scales: Vec<f64> = turns.iter().map(|v| v.norm()).collect();
    let mut candidates = fibonacci_sphere(directions);
    candidates.extend([Vec3::X, -Vec3::X, Vec3::Y, -Vec3::Y]);
    candidates.extend(arrangement_candidates(turns));
    candidates
        .iter()
        .map(|w| {
            let signs = signed_values(
                turns.iter().zip(&scales).map(|(v, s)| (w.dot(*v), *s)),
                EPS_ZERO,
            );
            sign_changes(&signs)
        })
        .max()
        .unwrap_or(0)
}
