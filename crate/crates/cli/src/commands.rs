//! Subcommand implementations. Each returns the text to print and an exit
//! code; only I/O and input problems surface as errors.

use std::io::Write;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use shapespline::oracle::{cross_check, projected_inflection_count, Disagreement};
use shapespline::{
    analyze, build_spline, sample_spline, spatial_arc_inflection_count, DataPolygon, Spline,
    SplineConfig, SplineReport, Vec3,
};

use crate::error::{CliError, Result};
use crate::input::{InputDocument, Settings, SCHEMA_VERSION};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

pub const SEED_VAR: &str = "SHAPESPLINE_SEED";
const SELF_CHECK_DATASETS: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

pub fn build(doc: &InputDocument, settings: &Settings) -> Result<Spline> {
    let poly = doc.polygon(settings.spline.tolerances.eps_zero)?;
    Ok(build_spline(
        poly,
        &settings.spline,
        doc.tangents.as_deref(),
        doc.knots.as_deref(),
    )?)
}

fn to_json(value: &Value) -> String {
    // serde_json maps are ordered by key, so this is byte-stable
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

fn report_value(report: &SplineReport) -> Value {
    let mut v = serde_json::to_value(report).expect("report serializes");
    v["version"] = json!(SCHEMA_VERSION);
    v
}

fn disagreements_value(list: &[Disagreement]) -> Value {
    list.iter()
        .map(|d| json!({"segment": d.segment, "criterion": d.criterion, "detail": d.detail}))
        .collect()
}

/// Seed for the random self-check datasets, from `SHAPESPLINE_SEED`.
pub fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{SEED_VAR} must be an unsigned integer, got {s:?}"))),
        Err(_) => Ok(0),
    }
}

/// Cross-checks random non-degenerate datasets under `cfg`.
fn self_check(cfg: &SplineConfig, seed: u64) -> Result<Vec<Disagreement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = SplineConfig {
        tangent_mode: shapespline::TangentMode::CatmullRom,
        ..*cfg
    };
    let mut out = Vec::new();
    let mut done = 0;
    while done < SELF_CHECK_DATASETS {
        let points: Vec<Vec3> = (0..6)
            .map(|_| Vec3::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
            .collect();
        let Ok(poly) = DataPolygon::new(points) else {
            continue;
        };
        let spline = build_spline(poly, &cfg, None, None)?;
        let report = analyze(&spline, &cfg)?;
        out.extend(cross_check(&spline, &report, cfg.samples));
        done += 1;
    }
    Ok(out)
}

pub fn check(doc: &InputDocument, settings: &Settings, verify: bool) -> Result<Outcome> {
    let spline = build(doc, settings)?;
    let report = analyze(&spline, &settings.spline)?;
    let mut value = report_value(&report);
    let mut code = if report.summary.all_passed { EXIT_PASS } else { EXIT_FAIL };
    if verify {
        let seed = seed_from_env()?;
        let found = cross_check(&spline, &report, settings.spline.samples);
        let random = self_check(&settings.spline, seed)?;
        value["verification"] = json!({
            "disagreements": disagreements_value(&found),
            "self_check": {
                "seed": seed,
                "datasets": SELF_CHECK_DATASETS,
                "disagreements": disagreements_value(&random),
            },
        });
        if !found.is_empty() || !random.is_empty() {
            code = EXIT_ERROR;
        }
    }
    Ok(Outcome {
        output: to_json(&value),
        code,
    })
}

pub fn measures(doc: &InputDocument, settings: &Settings) -> Result<Outcome> {
    let eps = settings.spline.tolerances.eps_zero;
    let p = doc.polygon(eps)?;
    let n = p.n();
    let chords: Vec<Value> = (1..=n)
        .map(|i| json!({"index": i, "L": p.chord(i)}))
        .collect();
    let vertices: Vec<Value> = (1..n)
        .map(|v| {
            json!({
                "index": v,
                "N": p.binormal(v),
                "collinear": p.is_collinear_vertex(v, eps),
                "degenerate": p.is_degenerate_vertex(v, eps),
            })
        })
        .collect();
    let torsions: Vec<Value> = (2..n)
        .map(|i| json!({"index": i, "delta": p.torsion(i)}))
        .collect();
    let segments = (1..=n)
        .map(|i| Ok(json!({"index": i, "flags": p.classify(i, eps)?})))
        .collect::<Result<Vec<Value>>>()?;
    let value = json!({
        "version": SCHEMA_VERSION,
        "points": p.points(),
        "chords": chords,
        "vertices": vertices,
        "torsions": torsions,
        "segments": segments,
    });
    Ok(Outcome {
        output: to_json(&value),
        code: EXIT_PASS,
    })
}

/// CSV rows `segment_index, t, x, y, z, wx, wy, wz, tau_num`.
pub fn sample_csv(spline: &Spline, per_segment: usize, sink: impl Write) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(["segment_index", "t", "x", "y", "z", "wx", "wy", "wz", "tau_num"])?;
    for s in sample_spline(spline, per_segment)? {
        let mut row = vec![s.segment.to_string()];
        let reals = [
            s.t, s.point.x, s.point.y, s.point.z, s.omega.x, s.omega.y, s.omega.z, s.tau_num,
        ];
        row.extend(reals.iter().map(|v| format!("{v:.16e}")));
        w.write_record(&row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn sample(
    doc: &InputDocument,
    settings: &Settings,
    per_segment: usize,
    out: Option<&Path>,
) -> Result<Outcome> {
    let spline = build(doc, settings)?;
    match out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|source| CliError::Write {
                path: path.to_path_buf(),
                source,
            })?;
            sample_csv(&spline, per_segment, std::io::BufWriter::new(file))?;
            Ok(Outcome {
                output: String::new(),
                code: EXIT_PASS,
            })
        }
        None => {
            let mut buf = Vec::new();
            sample_csv(&spline, per_segment, &mut buf)?;
            Ok(Outcome {
                output: String::from_utf8(buf).expect("csv output is ascii"),
                code: EXIT_PASS,
            })
        }
    }
}

pub fn inflection(doc: &InputDocument, settings: &Settings) -> Result<Outcome> {
    let spline = build(doc, settings)?;
    let arc = spatial_arc_inflection_count(spline.polygon(), settings.directions);
    let curves: Vec<usize> = spline
        .segments()
        .iter()
        .map(|s| projected_inflection_count(s, settings.directions))
        .collect();
    let value = json!({
        "version": SCHEMA_VERSION,
        "directions": settings.directions,
        "arc_count": arc,
        "per_segment_curve_counts": curves,
    });
    Ok(Outcome {
        output: to_json(&value),
        code: EXIT_PASS,
    })
}
