//! Geometric diagnostics of two-qubit pure states and the state-space
//! ball/volume formulas.
//!
//! The octant chart writes a two-qubit state as
//! `Z = (n₀, n₁e^{iν₁}, n₂e^{iν₂}, n₃e^{iν₃})` and projects the modulus
//! vector gnomonically from the 3-sphere onto the tangent space at
//! `c = ½(1,1,1,1)`, where separable states appear as a ruled surface.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::measures;
use crate::states::{BipartiteDims, DensityMatrix, PureState};

/// Projection centre `½(1,1,1,1)`.
const CENTRE: [f64; 4] = [0.5, 0.5, 0.5, 0.5];
/// Orthonormal tangent basis at the centre.
const TANGENT_BASIS: [[f64; 4]; 3] = [
    [core::f64::consts::FRAC_1_SQRT_2, -core::f64::consts::FRAC_1_SQRT_2, 0.0, 0.0],
    [0.0, 0.0, core::f64::consts::FRAC_1_SQRT_2, -core::f64::consts::FRAC_1_SQRT_2],
    [0.5, 0.5, -0.5, -0.5],
];

/// Octant-chart coordinates of a two-qubit pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctantCoords {
    /// Nonnegative moduli with `Σ n² = 1`.
    pub moduli: [f64; 4],
    /// Phases of components 1..3 in `[0, 2π)`, relative to the global
    /// phase convention (component 0 real nonnegative when possible).
    pub phases: [f64; 3],
    /// Gnomonic tangent-space coordinates of the modulus vector.
    pub gnomonic: [f64; 3],
}

fn wrap_phase(phi: f64) -> f64 {
    let tau = core::f64::consts::TAU;
    let mut w = phi % tau;
    if w < 0.0 {
        w += tau;
    }
    if w >= tau {
        w -= tau;
    }
    w
}

fn gnomonic_of_moduli(n: &[f64; 4]) -> [f64; 3] {
    let dot_c: f64 = n.iter().zip(CENTRE.iter()).map(|(a, b)| a * b).sum();
    let p: Vec<f64> = n.iter().map(|x| x / dot_c).collect();
    let mut out = [0.0; 3];
    for (k, basis) in TANGENT_BASIS.iter().enumerate() {
        out[k] = p
            .iter()
            .zip(CENTRE.iter())
            .zip(basis.iter())
            .map(|((pi, ci), bi)| (pi - ci) * bi)
            .sum();
    }
    out
}

/// Octant coordinates of a two-qubit state. The global phase is fixed by
/// the first component of modulus above `1e-12` (component 0 in the
/// generic case), which is rotated to the positive real axis.
pub fn octant_coords(psi: &PureState) -> Result<OctantCoords> {
    if !psi.dims().is_two_qubit() {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: psi.dims().total(),
        });
    }
    let raw = psi.amplitudes();
    let anchor = raw
        .iter()
        .position(|z| z.norm() > 1e-12)
        .expect("unit vector has a nonzero component");
    let phase = raw[anchor] / raw[anchor].norm();
    let rotated: Vec<Complex64> = raw.iter().map(|z| z * phase.conj()).collect();

    let mut moduli = [0.0; 4];
    for (m, z) in moduli.iter_mut().zip(rotated.iter()) {
        *m = z.norm();
    }
    let mut phases = [0.0; 3];
    for k in 0..3 {
        phases[k] = if moduli[k + 1] > 1e-12 {
            wrap_phase(rotated[k + 1].arg())
        } else {
            0.0
        };
    }
    Ok(OctantCoords {
        moduli,
        phases,
        gnomonic: gnomonic_of_moduli(&moduli),
    })
}

/// Residuals of the Segre (separability) conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegreResiduals {
    /// `|Z⁰Z³ − Z¹Z²|`; zero iff the state is a product state.
    pub quadric: f64,
    /// `|n₀n₃ − n₁n₂|`.
    pub modulus_eq: f64,
    /// Wrapped `|ν₁ + ν₂ − ν₃|`, reported 0 when any modulus vanishes.
    pub phase_eq: f64,
}

/// Evaluates the quadric `Z⁰Z³ = Z¹Z²` and its modulus/phase split.
pub fn segre_residuals(psi: &PureState) -> Result<SegreResiduals> {
    let coords = octant_coords(psi)?;
    let z = psi.amplitudes();
    let quadric = (z[0] * z[3] - z[1] * z[2]).norm();
    let n = &coords.moduli;
    let modulus_eq = (n[0] * n[3] - n[1] * n[2]).abs();
    let phase_eq = if n.iter().any(|&x| x <= 1e-9) {
        0.0
    } else {
        let s = wrap_phase(coords.phases[0] + coords.phases[1] - coords.phases[2]);
        s.min(core::f64::consts::TAU - s)
    };
    Ok(SegreResiduals {
        quadric,
        modulus_eq,
        phase_eq,
    })
}

/// Distance of a square-system pure state from the maximally entangled
/// manifold: `‖N·A·A† − 𝟙‖_F`, zero iff `√N·A` is unitary.
pub fn max_entangled_residual(psi: &PureState) -> Result<f64> {
    let dims = psi.dims();
    if dims.n_a() != dims.n_b() {
        return Err(Error::DimensionMismatch {
            expected: dims.n_a(),
            got: dims.n_b(),
        });
    }
    let n = dims.n_a();
    let a = psi.amplitude_matrix();
    let gram = a.mul(&a.adjoint()).scale_re(n as f64);
    Ok(gram.sub(&ComplexMatrix::identity(n)).frobenius_norm())
}

/// Dimension of the local-unitary orbit of an `N×N` pure state with
/// degeneracy profile `(m₀, m₁, …, m_J)`:
/// `D_o = 2N² − 1 − 2m₀² − Σ_{n≥1} m_n²`.
pub fn orbit_dimension(n: usize, profile: &[usize]) -> Result<usize> {
    if profile.is_empty() || profile.iter().sum::<usize>() != n {
        return Err(Error::MalformedProfile);
    }
    if profile[1..].contains(&0) || profile.len() < 2 {
        return Err(Error::MalformedProfile);
    }
    let m0 = profile[0];
    let nonzero_sq: usize = profile[1..].iter().map(|&m| m * m).sum();
    Ok(2 * n * n - 1 - 2 * m0 * m0 - nonzero_sq)
}

/// Radius of the maximal ball inscribed in the set of `d`-dimensional
/// mixed states, in the `D₂` metric: `√(1/(2d(d−1)))`.
pub fn insphere_radius(d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: d });
    }
    Ok((1.0 / (2.0 * d as f64 * (d as f64 - 1.0))).sqrt())
}

/// Hilbert–Schmidt distance `D₂(ρ,σ) = √(½·Tr(ρ−σ)²)`.
pub fn d2_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: sigma.dim(),
        });
    }
    let diff = rho.matrix().sub(sigma.matrix());
    Ok(core::f64::consts::FRAC_1_SQRT_2 * diff.frobenius_norm())
}

/// Whether `ρ` lies inside the maximal (separable for two qubits) ball
/// around `𝟙/d`. Equivalent to the purity test `1/Tr ρ² ≥ d − 1`.
pub fn in_separable_ball(rho: &DensityMatrix) -> bool {
    let d = rho.dim();
    let centre = DensityMatrix::new(
        rho.dims(),
        ComplexMatrix::identity(d).scale_re(1.0 / d as f64),
    )
    .expect("maximally mixed state is valid");
    let dist = d2_distance(rho, &centre).expect("same dimensions");
    dist <= insphere_radius(d).expect("d >= 4") + 1e-12
}

/// Volume ratio of the maximal separable ball to the full body of mixed
/// states for an `N×N` system, evaluated in log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeRatio {
    pub log_value: f64,
    /// The ratio itself when representable in `f64`.
    pub value: Option<f64>,
}

/// Log-domain evaluation of the closed-form ball-to-body volume ratio.
pub fn volume_ratio(n: usize) -> Result<VolumeRatio> {
    if n < 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: n });
    }
    let n2 = (n * n) as f64;
    let n4 = n2 * n2;
    let ln_pi = core::f64::consts::PI.ln();
    let mut log_value = 0.5 * (n2 - 1.0) * ln_pi;
    log_value += 0.5 * (n2 - n4) * 2.0_f64.ln();
    log_value += ln_gamma(n4);
    log_value -= ln_gamma(0.5 * (n4 + 1.0));
    log_value -= n4 * (n as f64).ln();
    log_value -= 0.5 * (n4 - 1.0) * (n2 - 1.0).ln();
    for k in 1..=(n * n) {
        log_value -= ln_gamma(k as f64);
    }
    let value = if log_value > f64::MIN_POSITIVE.ln() {
        Some(log_value.exp())
    } else {
        None
    };
    Ok(VolumeRatio { log_value, value })
}

/// Pseudo-pure separability threshold `ε_c = 1/(N²−1)`.
pub fn pseudo_pure_threshold(n: usize) -> f64 {
    1.0 / ((n * n) as f64 - 1.0)
}

/// Lanczos log-gamma (g = 7, 9 coefficients), |relative error| ≲ 1e-13
/// for positive arguments.
#[allow(clippy::excessive_precision)] // published coefficients kept verbatim
fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        // reflection formula
        let pi = core::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = 0.99999999999980993;
    for (i, &c) in COEFFS.iter().enumerate() {
        acc += c / (x + i as f64 + 1.0);
    }
    let t = x + 7.5;
    0.5 * (core::f64::consts::TAU).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// One row of the octant cross-section dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctantSample {
    pub gnomonic: [f64; 3],
    pub entanglement_entropy: f64,
}

/// Samples the real-amplitude octant on a `resolution³` angular grid and
/// tags each point with its entanglement entropy.
pub fn octant_entropy_samples(resolution: usize) -> Vec<OctantSample> {
    let dims = BipartiteDims::new(2, 2).unwrap();
    let res = resolution.max(2);
    let step = core::f64::consts::FRAC_PI_2 / (res - 1) as f64;
    let mut rows = Vec::with_capacity(res * res * res);
    for i in 0..res {
        let t1 = i as f64 * step;
        for j in 0..res {
            let t2 = j as f64 * step;
            for k in 0..res {
                let t3 = k as f64 * step;
                let n = [
                    t1.cos(),
                    t1.sin() * t2.cos(),
                    t1.sin() * t2.sin() * t3.cos(),
                    t1.sin() * t2.sin() * t3.sin(),
                ];
                let psi = PureState::new(
                    dims,
                    n.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
                )
                .expect("grid point has unit norm");
                rows.push(OctantSample {
                    gnomonic: gnomonic_of_moduli(&n),
                    entanglement_entropy: measures::entanglement_entropy(&psi),
                });
            }
        }
    }
    rows
}

/// One vertex of a ruling polyline on the separable surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RulingPoint {
    pub line: usize,
    pub point: usize,
    pub gnomonic: [f64; 3],
}

/// Product states with a fixed second factor trace straight lines in the
/// gnomonic chart; emits `lines` polylines of `points` vertices each.
pub fn segre_ruling_polylines(lines: usize, points: usize) -> Vec<RulingPoint> {
    let dims = BipartiteDims::new(2, 2).unwrap();
    let lines = lines.max(1);
    let points = points.max(2);
    let mut rows = Vec::with_capacity(lines * points);
    for l in 0..lines {
        let phi_b = (l as f64 + 0.5) / lines as f64 * core::f64::consts::FRAC_PI_2;
        let b = [phi_b.cos(), phi_b.sin()];
        for p in 0..points {
            let phi_a = p as f64 / (points - 1) as f64 * core::f64::consts::FRAC_PI_2;
            let a = [phi_a.cos(), phi_a.sin()];
            let amps: Vec<Complex64> = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
                .iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect();
            let psi = PureState::new(dims, amps).expect("product of unit vectors");
            let coords = octant_coords(&psi).expect("two-qubit state");
            rows.push(RulingPoint {
                line: l,
                point: p,
                gnomonic: coords.gnomonic,
            });
        }
    }
    rows
}
