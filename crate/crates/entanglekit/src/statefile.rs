//! State file format.
//!
//! A JSON document
//! `{"kind": "pure"|"density", "dims": [n_a, n_b], "re": [...], "im": [...]}`
//! with flat amplitude vectors for pure states and row-major matrices for
//! density states. Floats are emitted with 17 significant digits so files
//! round-trip exactly.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use entanglekit_core::linalg::ComplexMatrix;
use entanglekit_core::states::{BipartiteDims, DensityMatrix, PureState};
use entanglekit_core::Error as CoreError;

use crate::{IoError, IoResult};

/// A state loaded from or destined for disk.
#[derive(Debug, Clone)]
pub enum StateFile {
    Pure(PureState),
    Density(DensityMatrix),
}

impl StateFile {
    pub fn dims(&self) -> BipartiteDims {
        match self {
            StateFile::Pure(psi) => psi.dims(),
            StateFile::Density(rho) => rho.dims(),
        }
    }

    /// The state as a density matrix (projector for pure inputs).
    pub fn to_density(&self) -> DensityMatrix {
        match self {
            StateFile::Pure(psi) => psi.projector(),
            StateFile::Density(rho) => rho.clone(),
        }
    }
}

#[derive(Deserialize)]
struct RawState {
    kind: String,
    dims: [usize; 2],
    re: Vec<f64>,
    im: Vec<f64>,
}

fn invariant_name(e: &CoreError) -> String {
    match e {
        CoreError::NotHermitian { .. } => format!("hermiticity violated: {e}"),
        CoreError::NotPsd { .. } => format!("positivity violated: {e}"),
        CoreError::TraceNotUnit { .. } => format!("trace violated: {e}"),
        CoreError::ZeroVector => String::from("normalisation violated: zero state vector"),
        other => other.to_string(),
    }
}

/// Parses a state document, naming the violated invariant on failure.
pub fn parse_state(text: &str) -> IoResult<StateFile> {
    let raw: RawState =
        serde_json::from_str(text).map_err(|e| IoError::Input(format!("invalid state file: {e}")))?;
    let dims = BipartiteDims::new(raw.dims[0], raw.dims[1])
        .map_err(|e| IoError::Input(format!("invalid dims {:?}: {e}", raw.dims)))?;
    if raw.re.len() != raw.im.len() {
        return Err(IoError::Input(format!(
            "re/im length mismatch: {} vs {}",
            raw.re.len(),
            raw.im.len()
        )));
    }
    let entries: Vec<Complex64> = raw
        .re
        .iter()
        .zip(raw.im.iter())
        .map(|(&re, &im)| Complex64::new(re, im))
        .collect();
    match raw.kind.as_str() {
        "pure" => {
            let psi = PureState::new(dims, entries)
                .map_err(|e| IoError::Input(invariant_name(&e)))?;
            Ok(StateFile::Pure(psi))
        }
        "density" => {
            let d = dims.total();
            if entries.len() != d * d {
                return Err(IoError::Input(format!(
                    "density matrix needs {} entries, got {}",
                    d * d,
                    entries.len()
                )));
            }
            let m = ComplexMatrix::new(d, d, entries)
                .map_err(|e| IoError::Input(invariant_name(&e)))?;
            let rho =
                DensityMatrix::new(dims, m).map_err(|e| IoError::Input(invariant_name(&e)))?;
            Ok(StateFile::Density(rho))
        }
        other => Err(IoError::Input(format!(
            "unknown state kind {other:?} (expected \"pure\" or \"density\")"
        ))),
    }
}

pub fn read_state(path: &Path) -> IoResult<StateFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| IoError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_state(&text)
}

/// 17 significant digits; round-trips any f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn float_array(values: impl Iterator<Item = f64>) -> String {
    let parts: Vec<String> = values.map(fmt_f64).collect();
    format!("[{}]", parts.join(","))
}

/// Serialises a state to the document format.
pub fn render_state(state: &StateFile) -> String {
    let (kind, dims, entries): (&str, BipartiteDims, Vec<Complex64>) = match state {
        StateFile::Pure(psi) => ("pure", psi.dims(), psi.amplitudes().to_vec()),
        StateFile::Density(rho) => ("density", rho.dims(), rho.matrix().data().to_vec()),
    };
    format!(
        "{{\"kind\":\"{kind}\",\"dims\":[{},{}],\"re\":{},\"im\":{}}}\n",
        dims.n_a(),
        dims.n_b(),
        float_array(entries.iter().map(|z| z.re)),
        float_array(entries.iter().map(|z| z.im)),
    )
}

pub fn write_state(path: &Path, state: &StateFile) -> IoResult<()> {
    fs::write(path, render_state(state))
        .map_err(|e| IoError::Input(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}
