//! CSV dataset emitters: bound curves, Monte Carlo samples and
//! geometry figure data. All floats use the 17-digit format of the state
//! files; sampling datasets get a JSON metadata sidecar
//! (`<path>.meta.json`) naming generator, seed, n and dims.

use std::fs;
use std::path::Path;

use serde_json::json;

use entanglekit_core::geometry::{octant_entropy_samples, segre_ruling_polylines};
use entanglekit_core::measures;
use entanglekit_core::sampling::SampleMetadata;
use entanglekit_core::Result as CoreResult;

use crate::statefile::fmt_f64;
use crate::{IoError, IoResult};

/// Bound-curve families selectable from the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundPair {
    ConcurrenceNegativity,
    ConcurrenceFidelity,
    NegativityFidelity,
    EofRelativeEntropy,
}

impl BoundPair {
    pub fn parse(id: &str) -> IoResult<Self> {
        Ok(match id {
            "concurrence:negativity" => BoundPair::ConcurrenceNegativity,
            "concurrence:fidelity" => BoundPair::ConcurrenceFidelity,
            "negativity:fidelity" => BoundPair::NegativityFidelity,
            "eof:relative-entropy" => BoundPair::EofRelativeEntropy,
            other => {
                return Err(IoError::Input(format!(
                    "unknown bound pair {other:?}; expected one of concurrence:negativity, \
                     concurrence:fidelity, negativity:fidelity, eof:relative-entropy"
                )))
            }
        })
    }
}

/// Bound-curve table at `grid` evenly spaced parameter values.
pub fn bounds_csv(pair: BoundPair, grid: usize) -> IoResult<String> {
    if grid < 2 {
        return Err(IoError::Input(String::from("grid must be at least 2")));
    }
    let step = |k: usize, hi: f64| hi * k as f64 / (grid - 1) as f64;
    let mut out = String::new();
    let row = |out: &mut String, values: &[f64]| {
        let parts: Vec<String> = values.iter().map(|&v| fmt_f64(v)).collect();
        out.push_str(&parts.join(","));
        out.push('\n');
    };
    let map_err = |e: entanglekit_core::Error| IoError::Internal(e.to_string());
    match pair {
        BoundPair::ConcurrenceNegativity => {
            out.push_str("concurrence,negativity_lower\n");
            for k in 0..grid {
                let c = step(k, 1.0);
                row(&mut out, &[c, measures::neg_lower_bound(c).map_err(map_err)?]);
            }
        }
        BoundPair::ConcurrenceFidelity => {
            out.push_str("concurrence,fidelity_lower,fidelity_upper\n");
            for k in 0..grid {
                let c = step(k, 1.0);
                let (lo, hi) = measures::fid_bounds_from_concurrence(c).map_err(map_err)?;
                row(&mut out, &[c, lo, hi]);
            }
        }
        BoundPair::NegativityFidelity => {
            out.push_str("negativity,fidelity_lower,fidelity_upper\n");
            for k in 0..grid {
                let nt = step(k, 1.0);
                let (lo, hi) = measures::fid_bounds_from_negativity(nt).map_err(map_err)?;
                row(&mut out, &[nt, lo, hi]);
            }
        }
        BoundPair::EofRelativeEntropy => {
            out.push_str("eof,relative_entropy_lower\n");
            for k in 0..grid {
                let e = step(k, std::f64::consts::LN_2);
                row(&mut out, &[e, measures::er_lower_bound(e).map_err(map_err)?]);
            }
        }
    }
    Ok(out)
}

/// Single-measure sample column.
pub fn samples_csv(measure: &str, samples: &[f64]) -> String {
    let mut out = String::with_capacity(samples.len() * 26);
    out.push_str(measure);
    out.push('\n');
    for &x in samples {
        out.push_str(&fmt_f64(x));
        out.push('\n');
    }
    out
}

/// Two-measure scatter table.
pub fn scatter_csv(measure_x: &str, measure_y: &str, rows: &[(f64, f64)]) -> String {
    let mut out = String::with_capacity(rows.len() * 52);
    out.push_str(&format!("{measure_x},{measure_y}\n"));
    for &(x, y) in rows {
        out.push_str(&format!("{},{}\n", fmt_f64(x), fmt_f64(y)));
    }
    out
}

/// Octant cross-section rows `(x, y, z, E₁)`.
pub fn octant_csv(resolution: usize) -> String {
    let mut out = String::from("x,y,z,entropy\n");
    for s in octant_entropy_samples(resolution) {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f64(s.gnomonic[0]),
            fmt_f64(s.gnomonic[1]),
            fmt_f64(s.gnomonic[2]),
            fmt_f64(s.entanglement_entropy)
        ));
    }
    out
}

/// Separable-surface ruling polylines `(line, point, x, y, z)`.
pub fn segre_rulings_csv(lines: usize, points: usize) -> String {
    let mut out = String::from("line,point,x,y,z\n");
    for p in segre_ruling_polylines(lines, points) {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            p.line,
            p.point,
            fmt_f64(p.gnomonic[0]),
            fmt_f64(p.gnomonic[1]),
            fmt_f64(p.gnomonic[2])
        ));
    }
    out
}

/// Writes a dataset plus its metadata sidecar.
pub fn write_dataset(path: &Path, csv: &str, meta: &SampleMetadata) -> IoResult<()> {
    fs::write(path, csv)?;
    let sidecar = json!({
        "generator": meta.generator,
        "seed": meta.seed,
        "n": meta.n,
        "dims": [meta.dims.0, meta.dims.1],
    });
    let mut meta_path = path.as_os_str().to_owned();
    meta_path.push(".meta.json");
    fs::write(std::path::PathBuf::from(meta_path), format!("{sidecar:#}\n"))?;
    Ok(())
}

/// Maps a core error to the internal-failure class.
pub fn internal(e: entanglekit_core::Error) -> IoError {
    IoError::Internal(e.to_string())
}

/// Maps a core result whose failure indicates bad user input.
pub fn input_err<T>(r: CoreResult<T>) -> IoResult<T> {
    r.map_err(|e| IoError::Input(e.to_string()))
}
