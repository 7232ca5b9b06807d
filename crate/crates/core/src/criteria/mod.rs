//! Shape-preservation checks for individual cubic segments and for the
//! joints between them.
//!
//! Every check returns a [`CriterionVerdict`]. A check whose qualifying data
//! condition does not hold is reported as not applicable rather than as an
//! error. Sign tests are relative: a scalar is treated as zero when it is
//! within `eps_zero` of the product of the magnitudes it was built from.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod collinearity;
mod compat;
mod convexity;
mod coplanarity;
mod inflection;
mod planar;
mod torsion;

pub use collinearity::check_collinearity_cubic;
pub use compat::{check_adjacency_compat, check_torsion_compat};
pub use convexity::{
    check_convexity_cubic, check_convexity_sampled, check_convexity_sampled_with,
    convex_control_polygon, intersect_lines, LineIntersection,
};
pub use coplanarity::{check_coplanarity_alternative, check_coplanarity_cubic, split_tangent};
pub use inflection::check_inflection_cubic;
pub use planar::{planar_cubic_inflection, total_turning};
pub use torsion::check_torsion_cubic;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    /// Sine bound for collinearity, in `(0, 1]`.
    pub eps0: f64,
    /// Sine bound for coplanarity, in `(0, 1]`.
    pub eps1: f64,
    pub eps_zero: f64,
    /// Fraction of each parameter interval used as the η window, in `(0, 1]`.
    pub eta_fraction: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eps0: 0.05,
            eps1: 0.05,
            eps_zero: crate::geom::EPS_ZERO,
            eta_fraction: 1.0,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let unit = |name: &str, v: f64| {
            if v > 0.0 && v <= 1.0 {
                Ok(())
            } else {
                Err(Error::Config(format!("{name} must lie in (0, 1], got {v}")))
            }
        };
        unit("eps0", self.eps0)?;
        unit("eps1", self.eps1)?;
        unit("eta_fraction", self.eta_fraction)?;
        if !(self.eps_zero >= 0.0 && self.eps_zero < 1.0) {
            return Err(Error::Config(format!(
                "eps_zero must lie in [0, 1), got {}",
                self.eps_zero
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Criterion {
    Convexity,
    Inflection,
    Collinearity,
    Torsion,
    Coplanarity,
    AdjacencyCompat,
    TorsionCompat,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of one criterion on one segment or joint. `passed` is `None`
/// exactly when the criterion is not applicable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionVerdict {
    pub criterion: Criterion,
    pub applicable: bool,
    pub passed: Option<bool>,
    pub diagnostics: BTreeMap<String, f64>,
}

impl CriterionVerdict {
    pub(crate) fn new(criterion: Criterion) -> Self {
        Self {
            criterion,
            applicable: false,
            passed: None,
            diagnostics: BTreeMap::new(),
        }
    }

    pub(crate) fn decide(mut self, passed: bool) -> Self {
        self.applicable = true;
        self.passed = Some(passed);
        self
    }

    pub(crate) fn with(mut self, name: &str, value: f64) -> Self {
        self.set(name, value);
        self
    }

    /// Records a diagnostic; non-finite values are dropped.
    pub fn set(&mut self, name: &str, value: f64) {
        if value.is_finite() {
            self.diagnostics.insert(name.to_string(), value);
        }
    }

    pub(crate) fn flag(self, name: &str, value: bool) -> Self {
        self.with(name, if value { 1.0 } else { 0.0 })
    }

    pub fn failed(&self) -> bool {
        self.passed == Some(false)
    }

    pub fn diagnostic(&self, name: &str) -> Option<f64> {
        self.diagnostics.get(name).copied()
    }
}

/// `value > 0` beyond `eps * scale`.
pub(crate) fn positive(value: f64, scale: f64, eps: f64) -> bool {
    value > eps * scale
}

/// `value < 0` beyond `eps * scale`.
pub(crate) fn negative(value: f64, scale: f64, eps: f64) -> bool {
    value < -eps * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_validation() {
        assert!(Tolerances::default().validate().is_ok());
        let bad = Tolerances {
            eps0: 0.0,
            ..Tolerances::default()
        };
        assert!(bad.validate().is_err());
        let bad = Tolerances {
            eta_fraction: 1.5,
            ..Tolerances::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn verdict_drops_non_finite_diagnostics() {
        let v = CriterionVerdict::new(Criterion::Torsion)
            .with("a", 1.0)
            .with("b", f64::NAN)
            .decide(true);
        assert_eq!(v.diagnostics.len(), 1);
        assert!(v.applicable && !v.failed());
    }
}
