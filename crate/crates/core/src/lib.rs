//! Shape-preservation analysis for C¹ cubic interpolating splines in R³.
//!
//! The crate builds Catmull-Rom (or user-tangent) cubic splines through a
//! data polygon and checks whether each segment preserves the convexity,
//! inflection, collinearity, torsion and coplanarity of the data, using
//! closed-form conditions on the Bézier control points. The [`oracle`]
//! module holds independent sampling-based checks used for verification.

pub mod criteria;
pub mod cubic;
pub mod discrete;
pub mod error;
pub mod geom;
pub mod oracle;
pub mod report;
pub mod spline;

pub use cubic::{project_segment, quadratic_cross, CubicSegment, CurvatureQuad, Derivatives};
pub use discrete::{
    is_regular_arc, planar_inflection_count, sign_changes, spatial_arc_inflection_count,
    DataPolygon, PolyArc2, ShapeFlags,
};
pub use report::{analyze, check_collinearity_extended, SplineReport, Summary};
pub use spline::{
    build_spline, catmull_rom_tangents, sample_spline, Parameterization, Spline, SplineConfig,
    SplineSample, TangentMode,
};
pub use error::{Error, GeomError, Result};
pub use geom::{
    cross2, cross3, project_point, sine_angle, triple, Plane, Sign, Vec2, Vec3, EPS_ZERO,
};
