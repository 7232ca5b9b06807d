//! Command-line front end for `shapespline`.

pub mod commands;
pub mod error;
pub mod input;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shapespline::{Parameterization, TangentMode};

use crate::commands::Outcome;
use crate::error::Result;
use crate::input::{ConfigOverrides, InputDocument, Settings};

#[derive(Debug, Parser)]
#[command(name = "shapespline", version, about = "Shape checks for C1 cubic interpolating splines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the spline and report every applicable shape criterion.
    Check {
        #[command(flatten)]
        common: Common,
        /// Cross-check closed-form verdicts against the sampling oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Chords, binormals, discrete torsions and vertex classes of the data.
    Measures {
        #[command(flatten)]
        common: Common,
    },
    /// Export spline samples as CSV.
    Sample {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 64)]
        per_segment: usize,
    },
    /// Inflection counts of the data polygon and of each spline segment.
    Inflection {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    Uniform,
    Chord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TangentArg {
    CatmullRom,
    Provided,
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON input document.
    pub input: PathBuf,
    #[arg(long)]
    pub eps_collinear: Option<f64>,
    #[arg(long)]
    pub eps_coplanar: Option<f64>,
    #[arg(long)]
    pub eps_zero: Option<f64>,
    #[arg(long)]
    pub tension: Option<f64>,
    #[arg(long, value_enum)]
    pub param: Option<ParamArg>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub directions: Option<usize>,
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long, value_enum)]
    pub tangents: Option<TangentArg>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Common {
    pub fn overrides(&self) -> ConfigOverrides {
        ConfigOverrides {
            eps0: self.eps_collinear,
            eps1: self.eps_coplanar,
            eps_zero: self.eps_zero,
            tension: self.tension,
            parameterization: self.param.map(|p| match p {
                ParamArg::Uniform => Parameterization::Uniform,
                ParamArg::Chord => Parameterization::Chord,
            }),
            tangent_mode: self.tangents.map(|t| match t {
                TangentArg::CatmullRom => TangentMode::CatmullRom,
                TangentArg::Provided => TangentMode::Provided,
            }),
            samples: self.samples,
            directions: self.directions,
            eta_fraction: self.eta,
        }
    }

    fn load(&self) -> Result<(InputDocument, Settings)> {
        let doc = InputDocument::load(&self.input)?;
        let settings = Settings::resolve(&doc, &self.overrides())?;
        Ok((doc, settings))
    }
}

/// Runs one parsed command. JSON output goes to `--out` when given.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let (common, outcome) = match &cli.command {
        Command::Check { common, verify } => {
            let (doc, s) = common.load()?;
            (common, commands::check(&doc, &s, *verify)?)
        }
        Command::Measures { common } => {
            let (doc, s) = common.load()?;
            (common, commands::measures(&doc, &s)?)
        }
        Command::Sample {
            common,
            per_segment,
        } => {
            let (doc, s) = common.load()?;
            return commands::sample(&doc, &s, *per_segment, common.out.as_deref());
        }
        Command::Inflection { common } => {
            let (doc, s) = common.load()?;
            (common, commands::inflection(&doc, &s)?)
        }
    };
    match &common.out {
        Some(path) => {
            std::fs::write(path, &outcome.output).map_err(|source| error::CliError::Write {
                path: path.clone(),
                source,
            })?;
            Ok(Outcome {
                output: String::new(),
                code: outcome.code,
            })
        }
        None => Ok(outcome),
    }
}
