//! Input documents and option merging.

use std::path::Path;

use serde::Deserialize;
use shapespline::criteria::Tolerances;
use shapespline::oracle::{DEFAULT_DIRECTIONS, DEFAULT_SAMPLES};
use shapespline::{DataPolygon, Parameterization, SplineConfig, TangentMode, Vec3};

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    pub eps0: Option<f64>,
    pub eps1: Option<f64>,
    pub eps_zero: Option<f64>,
    pub tension: Option<f64>,
    pub parameterization: Option<Parameterization>,
    pub tangent_mode: Option<TangentMode>,
    pub samples: Option<usize>,
    pub directions: Option<usize>,
    pub eta_fraction: Option<f64>,
}

impl ConfigOverrides {
    /// Fields set in `other` win.
    pub fn merged(&self, other: &ConfigOverrides) -> ConfigOverrides {
        ConfigOverrides {
            eps0: other.eps0.or(self.eps0),
            eps1: other.eps1.or(self.eps1),
            eps_zero: other.eps_zero.or(self.eps_zero),
            tension: other.tension.or(self.tension),
            parameterization: other.parameterization.or(self.parameterization),
            tangent_mode: other.tangent_mode.or(self.tangent_mode),
            samples: other.samples.or(self.samples),
            directions: other.directions.or(self.directions),
            eta_fraction: other.eta_fraction.or(self.eta_fraction),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub version: u32,
    pub points: Vec<Vec3>,
    #[serde(default)]
    pub tangents: Option<Vec<Vec3>>,
    #[serde(default)]
    pub knots: Option<Vec<f64>>,
    #[serde(default)]
    pub config: ConfigOverrides,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: InputDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }

    fn validate(&self) -> Result<()> {
        if self.version != SCHEMA_VERSION {
            return Err(CliError::Input(format!(
                "unsupported version {}, expected {SCHEMA_VERSION}",
                self.version
            )));
        }
        if self.points.len() < 2 {
            return Err(CliError::Input(format!(
                "need at least 2 points, got {}",
                self.points.len()
            )));
        }
        let want = self.points.len();
        if let Some(t) = &self.tangents {
            if t.len() != want {
                return Err(CliError::Input(format!("expected {want} tangents, got {}", t.len())));
            }
        }
        if let Some(k) = &self.knots {
            if k.len() != want {
                return Err(CliError::Input(format!("expected {want} knots, got {}", k.len())));
            }
        }
        Ok(())
    }

    pub fn polygon(&self, eps_zero: f64) -> Result<DataPolygon> {
        Ok(DataPolygon::with_tolerance(self.points.clone(), eps_zero)?)
    }
}

/// Fully resolved run settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub spline: SplineConfig,
    pub directions: usize,
}

impl Settings {
    /// Defaults, then the document's overrides, then `cli`. Provided
    /// tangents switch the default tangent mode to `provided`.
    pub fn resolve(doc: &InputDocument, cli: &ConfigOverrides) -> Result<Self> {
        let o = doc.config.merged(cli);
        let base = SplineConfig::default();
        let tol = Tolerances::default();
        let default_mode = if doc.tangents.is_some() {
            TangentMode::Provided
        } else {
            base.tangent_mode
        };
        let spline = SplineConfig {
            tangent_mode: o.tangent_mode.unwrap_or(default_mode),
            tension: o.tension.unwrap_or(base.tension),
            parameterization: o.parameterization.unwrap_or(base.parameterization),
            tolerances: Tolerances {
                eps0: o.eps0.unwrap_or(tol.eps0),
                eps1: o.eps1.unwrap_or(tol.eps1),
                eps_zero: o.eps_zero.unwrap_or(tol.eps_zero),
                eta_fraction: o.eta_fraction.unwrap_or(tol.eta_fraction),
            },
            samples: o.samples.unwrap_or(DEFAULT_SAMPLES),
        };
        spline.validate()?;
        let directions = o.directions.unwrap_or(DEFAULT_DIRECTIONS);
        if directions < 16 {
            return Err(CliError::Input(format!(
                "directions must be at least 16, got {directions}"
            )));
        }
        if spline.tangent_mode == TangentMode::Provided && doc.tangents.is_none() {
            return Err(CliError::Input("provided tangent mode needs a tangents array".into()));
        }
        Ok(Self { spline, directions })
    }
}
