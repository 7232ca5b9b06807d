use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("plane normal is the zero vector")]
    InvalidPlane,
    #[error("zero-length vector where a direction is required")]
    DegenerateInput,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("points {index} and {} coincide", index + 1)]
    DuplicatePoint { index: usize },
    #[error("index {index} outside the valid range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("parameter {0} outside [0, 1]")]
    Domain(f64),
    #[error("parameter width must be positive, got {0}")]
    NonPositiveWidth(f64),
    #[error("segment endpoints coincide")]
    DegenerateChord,
    #[error("lines are parallel; no intersection")]
    ParallelLines,
    #[error("points are not coplanar with the supplied normal")]
    NotCoplanar,
    #[error("end tangent of the previous segment does not match the start tangent of the next")]
    NotC1,
    #[error("lines AB and CD are parallel; ratio test undefined")]
    UndefinedRatio,
    #[error("expected {expected} tangents, got {got}")]
    TangentCountMismatch { expected: usize, got: usize },
    #[error("expected {expected} knots, got {got}")]
    KnotCountMismatch { expected: usize, got: usize },
    #[error("knots must be strictly increasing (at index {0})")]
    KnotsNotIncreasing(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
