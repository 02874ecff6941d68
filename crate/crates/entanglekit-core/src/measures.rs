//! Entanglement quantifiers.
//!
//! Pure-state measures are functions of the Schmidt vector. For two-qubit
//! mixed states the closed forms are available: concurrence from the
//! spin-flipped spectrum, entanglement of formation as a function of
//! concurrence, and maximal fidelity from the singular values of the
//! Fano correlation matrix. Negativities work in any dimension. The
//! ensemble-search and overlap-sampling routines are independent oracles
//! for the closed forms, not fast paths.

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};
use crate::sampling::StateRng;
use crate::states::{
    self, fano_form, partial_transpose, schmidt, spin_flip_2q, BipartiteDims, DensityMatrix,
    PureState, Subsystem,
};

/// Validation tolerance for PSD square roots inside the concurrence
/// pipeline.
const SQRT_TOL: f64 = 1e-8;

/// Entanglement entropy `E₁ = S(λ⃗)` of the Schmidt vector.
pub fn entanglement_entropy(psi: &PureState) -> f64 {
    states::von_neumann_of_spectrum(&schmidt(psi).coefficients)
}

/// Rényi entanglement `E_q = S_q(λ⃗)`.
pub fn renyi_entanglement(psi: &PureState, q: f64) -> Result<f64> {
    states::renyi_of_spectrum(&schmidt(psi).coefficients, q)
}

/// Tangle `τ = 2(1 − Σλᵢ²)`, in `[0, 2(N−1)/N]`.
pub fn tangle(psi: &PureState) -> f64 {
    let sum_sq: f64 = schmidt(psi).coefficients.iter().map(|l| l * l).sum();
    (2.0 * (1.0 - sum_sq)).max(0.0)
}

/// Pure-state concurrence `C = √τ`; for two qubits this equals
/// `2|det A|` of the amplitude matrix.
pub fn concurrence_pure(psi: &PureState) -> f64 {
    tangle(psi).sqrt()
}

/// Distances from a pure state to the closest separable pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosestSeparablePure {
    /// Fubini–Study distance `arccos √λ_max`.
    pub distance_fs: f64,
    /// Bures distance `√(2 − 2√λ_max)`.
    pub distance_bures: f64,
    /// `E_∞ = −ln λ_max`.
    pub e_infinity: f64,
}

/// Geometry of the closest separable pure state, all functions of the
/// largest Schmidt coefficient.
pub fn closest_separable_pure(psi: &PureState) -> ClosestSeparablePure {
    let lambda_max = schmidt(psi).coefficients[0].clamp(0.0, 1.0);
    ClosestSeparablePure {
        distance_fs: lambda_max.sqrt().clamp(0.0, 1.0).acos(),
        distance_bures: (2.0 - 2.0 * lambda_max.sqrt()).max(0.0).sqrt(),
        e_infinity: -lambda_max.max(1e-300).ln(),
    }
}

/// Negativity `N_T = ‖ρ^{T_A}‖_Tr − 1` (signed; ≥ 0 up to rounding).
pub fn negativity(rho: &DensityMatrix) -> f64 {
    let pt = partial_transpose(rho, Subsystem::A);
    linalg::trace_norm(&pt).expect("partial transpose is nonempty") - 1.0
}

/// Log-negativity `ln ‖ρ^{T_A}‖_Tr`.
pub fn log_negativity(rho: &DensityMatrix) -> f64 {
    let pt = partial_transpose(rho, Subsystem::A);
    linalg::trace_norm(&pt)
        .expect("partial transpose is nonempty")
        .max(1e-300)
        .ln()
}

/// Reshuffling negativity `N_R = ‖ρ^R‖_Tr − 1` (may be negative).
pub fn reshuffling_negativity(rho: &DensityMatrix) -> f64 {
    let r = states::reshuffle(rho);
    linalg::trace_norm(&r).expect("reshuffled matrix is nonempty") - 1.0
}

fn require_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if !rho.dims().is_two_qubit() {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    Ok(())
}

/// Spin-flip spectrum: descending square roots of the eigenvalues of
/// `ρ·ρ̃`, computed as singular values of `√ρ·√ρ̃`.
pub fn spin_flip_spectrum(rho: &DensityMatrix) -> Result<[f64; 4]> {
    require_two_qubit(rho)?;
    let tilde = spin_flip_2q(rho)?;
    let sqrt_rho = linalg::psd_sqrt(rho.matrix(), SQRT_TOL)?;
    let sqrt_tilde = linalg::psd_sqrt(tilde.matrix(), SQRT_TOL)?;
    let sv = linalg::singular_values(&sqrt_rho.mul(&sqrt_tilde))?;
    Ok([sv[0], sv[1], sv[2], sv[3]])
}

/// Wootters concurrence `C = max{0, λ₁−λ₂−λ₃−λ₄}` of a two-qubit state.
pub fn concurrence_2q(rho: &DensityMatrix) -> Result<f64> {
    let l = spin_flip_spectrum(rho)?;
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// Entanglement of formation as a function of concurrence:
/// binary entropy (nats) of `μ₁ = (1 + √(1−C²))/2`.
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    let mu = 0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt());
    binary_entropy_nats(mu)
}

fn binary_entropy_nats(p: f64) -> f64 {
    let mut h = 0.0;
    for x in [p, 1.0 - p] {
        if x > 0.0 {
            h -= x * x.ln();
        }
    }
    h
}

/// Two-qubit entanglement of formation (Wootters closed form).
pub fn eof_2q(rho: &DensityMatrix) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence_2q(rho)?))
}

/// Maximal fidelity (singlet fraction) of a two-qubit state:
/// `F_m = ¼[1 + κ₁ + κ₂ − Sign(det β)·κ₃]` with `κᵢ` the descending
/// singular values of the Fano correlation matrix. `Sign(0)` is taken
/// as `+1`.
pub fn max_fidelity_2q(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubit(rho)?;
    let beta = fano_form(rho).beta_matrix();
    let kappa = linalg::singular_values(&beta)?;
    let det = det3(&beta);
    let sign = if det < 0.0 { -1.0 } else { 1.0 };
    Ok(0.25 * (1.0 + kappa[0] + kappa[1] - sign * kappa[2]))
}

fn det3(m: &ComplexMatrix) -> f64 {
    let e = |i: usize, j: usize| m[(i, j)].re;
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// Overlap-sampling lower bound on the maximal fidelity: the best
/// `⟨φ|ρ|φ⟩` over `samples` maximally entangled states `(W ⊗ 𝟙)|φ⁺⟩`.
/// Most of the budget draws Haar-random `W`; the last tenth refines the
/// best candidate by greedy local perturbation. Every candidate is a
/// genuine maximally entangled state, so the result never exceeds the
/// true maximum.
pub fn max_fidelity_bruteforce(rho: &DensityMatrix, samples: usize, seed: u64) -> Result<f64> {
    require_two_qubit(rho)?;
    if samples == 0 {
        return Err(Error::Empty);
    }
    let mut rng = StateRng::new(seed);
    let overlap = |w: &ComplexMatrix| {
        let mut amps = [Complex64::new(0.0, 0.0); 4];
        for i in 0..2 {
            for j in 0..2 {
                amps[i * 2 + j] = w[(i, j)] * core::f64::consts::FRAC_1_SQRT_2;
            }
        }
        rho.matrix().quadratic_form(&amps, &amps).re
    };
    let refine_steps = samples / 10;
    let mut best_w = crate::sampling::random_unitary(2, &mut rng);
    let mut best = overlap(&best_w);
    for _ in 1..(samples - refine_steps) {
        let w = crate::sampling::random_unitary(2, &mut rng);
        let f = overlap(&w);
        if f > best {
            best = f;
            best_w = w;
        }
    }
    for step in 0..refine_steps {
        let frac = step as f64 / refine_steps.max(1) as f64;
        let scale = 0.2 * (1e-4_f64 / 0.2).powf(frac);
        let cols: IsometryCols = (0..2)
            .map(|j| {
                (0..2)
                    .map(|i| best_w[(i, j)] + rng.next_complex_gaussian() * scale)
                    .collect()
            })
            .collect();
        if let Some(ortho) = orthonormalise(cols) {
            let w = ComplexMatrix::from_fn(2, 2, |i, j| ortho[j][i]);
            let f = overlap(&w);
            if f > best {
                best = f;
                best_w = w;
            }
        }
    }
    Ok(best)
}

/// Configuration of the ensemble-search EoF oracle.
#[derive(Debug, Clone, Copy)]
pub struct EofSearchConfig {
    /// Ensemble length; clamped into `[rank, rank²]`.
    pub ensemble_size: usize,
    pub restarts: usize,
    pub steps: usize,
}

impl Default for EofSearchConfig {
    fn default() -> Self {
        Self {
            ensemble_size: 4,
            restarts: 20,
            steps: 2000,
        }
    }
}

/// Upper estimate of the entanglement of formation by direct search over
/// ensemble decompositions (Schrödinger mixture theorem: isometries
/// applied to the eigenensemble), with greedy random refinement.
/// Deterministic per seed; monotonically nonincreasing across restarts.
pub fn eof_ensemble_search(
    rho: &DensityMatrix,
    config: &EofSearchConfig,
    seed: u64,
) -> Result<f64> {
    let dims = rho.dims();
    let (eigenvalues, vectors) = linalg::hermitian_eigensystem(rho.matrix(), 1e-9)?;
    let d = dims.total();
    // subnormalised eigenvectors w_j = √d_j v_j
    let mut w: Vec<Vec<Complex64>> = Vec::new();
    for (j, &val) in eigenvalues.iter().enumerate() {
        if val > 1e-12 {
            let s = val.sqrt();
            w.push((0..d).map(|i| vectors[(i, j)] * s).collect());
        }
    }
    let rank = w.len().max(1);
    let m = config.ensemble_size.clamp(rank, rank * rank);

    let mut rng = StateRng::new(seed);
    let average = |v: &IsometryCols| ensemble_average(dims, &w, v);

    // restart 0 from the eigenensemble itself; the search result can then
    // never exceed the eigenensemble average
    let mut best = f64::INFINITY;
    for restart in 0..config.restarts.max(1) {
        let mut v = if restart == 0 {
            identity_isometry(m, rank)
        } else {
            random_isometry(m, rank, &mut rng)
        };
        let mut current = average(&v);
        best = best.min(current);
        for step in 0..config.steps {
            // step size decays geometrically over the schedule
            let frac = step as f64 / config.steps.max(1) as f64;
            let scale = 0.35 * (0.01_f64 / 0.35).powf(frac);
            let candidate = perturb_isometry(&v, scale, &mut rng);
            let value = average(&candidate);
            if value <= current {
                current = value;
                v = candidate;
                best = best.min(current);
            }
        }
    }
    Ok(best)
}

type IsometryCols = Vec<Vec<Complex64>>;

fn identity_isometry(rows: usize, cols: usize) -> IsometryCols {
    (0..cols)
        .map(|j| {
            let mut c = alloc::vec![Complex64::new(0.0, 0.0); rows];
            c[j] = Complex64::new(1.0, 0.0);
            c
        })
        .collect()
}

fn random_isometry(rows: usize, cols: usize, rng: &mut StateRng) -> IsometryCols {
    loop {
        let raw: IsometryCols = (0..cols)
            .map(|_| (0..rows).map(|_| rng.next_complex_gaussian()).collect())
            .collect();
        if let Some(v) = orthonormalise(raw) {
            return v;
        }
    }
}

fn perturb_isometry(v: &IsometryCols, scale: f64, rng: &mut StateRng) -> IsometryCols {
    let perturbed: IsometryCols = v
        .iter()
        .map(|col| {
            col.iter()
                .map(|z| z + rng.next_complex_gaussian() * scale)
                .collect()
        })
        .collect();
    orthonormalise(perturbed).unwrap_or_else(|| v.clone())
}

fn orthonormalise(mut cols: IsometryCols) -> Option<IsometryCols> {
    let n = cols.len();
    for j in 0..n {
        for k in 0..j {
            let overlap: Complex64 = cols[k]
                .iter()
                .zip(cols[j].iter())
                .map(|(q, v)| q.conj() * v)
                .sum();
            let (head, tail) = cols.split_at_mut(j);
            for (v, q) in tail[0].iter_mut().zip(head[k].iter()) {
                *v -= overlap * q;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-9 {
            return None;
        }
        for v in cols[j].iter_mut() {
            *v /= norm;
        }
    }
    Some(cols)
}

/// `Σᵢ pᵢ E₁(φᵢ)` for the decomposition `φ̃ᵢ = Σⱼ V*ᵢⱼ wⱼ`; the isometry
/// is stored column-wise (`cols[j][i] = Vᵢⱼ`).
#[allow(clippy::needless_range_loop)]
fn ensemble_average(dims: BipartiteDims, w: &[Vec<Complex64>], cols: &IsometryCols) -> f64 {
    let d = dims.total();
    let m = cols[0].len();
    let mut total = 0.0;
    for i in 0..m {
        let mut phi = alloc::vec![Complex64::new(0.0, 0.0); d];
        for (j, wj) in w.iter().enumerate() {
            let coeff = cols[j][i].conj();
            for (p, x) in phi.iter_mut().zip(wj.iter()) {
                *p += coeff * x;
            }
        }
        let weight: f64 = phi.iter().map(|z| z.norm_sqr()).sum();
        if weight < 1e-14 {
            continue;
        }
        if let Ok(psi) = PureState::new(dims, phi) {
            total += weight * entanglement_entropy(&psi);
        }
    }
    total
}

// ---------------------------------------------------------------------
// Bound curves between two-qubit measures
// ---------------------------------------------------------------------

fn check_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if !(lo..=hi).contains(&value) || value.is_nan() {
        return Err(Error::ParameterOutOfRange { name, value });
    }
    Ok(())
}

/// Tight lower bound of negativity at fixed concurrence:
/// `√((1−C)² + C²) + C − 1`.
pub fn neg_lower_bound(c: f64) -> Result<f64> {
    check_range("concurrence", c, 0.0, 1.0)?;
    Ok(((1.0 - c) * (1.0 - c) + c * c).sqrt() + c - 1.0)
}

/// Tight bounds `(lo, hi)` of the maximal fidelity at fixed concurrence:
/// `hi = (1+C)/2`, `lo = (1+C)/4` for `C ≤ 1/3` and `C` above.
pub fn fid_bounds_from_concurrence(c: f64) -> Result<(f64, f64)> {
    check_range("concurrence", c, 0.0, 1.0)?;
    let hi = (1.0 + c) / 2.0;
    let lo = if c <= 1.0 / 3.0 { (1.0 + c) / 4.0 } else { c };
    Ok((lo, hi))
}

/// Tight bounds `(lo, hi)` of the maximal fidelity at fixed negativity.
pub fn fid_bounds_from_negativity(nt: f64) -> Result<(f64, f64)> {
    check_range("negativity", nt, 0.0, 1.0)?;
    let hi = (1.0 + nt) / 2.0;
    let threshold = (5.0_f64.sqrt() - 2.0) / 3.0;
    let lo = if nt <= threshold {
        0.25 + (nt + (5.0 * nt * nt + 4.0 * nt).sqrt()) / 8.0
    } else {
        (2.0 * nt * (nt + 1.0)).sqrt() - nt
    };
    Ok((lo, hi))
}

/// Relative-entropy-of-entanglement value of the `σ_H` family:
/// `E_R(a) = (a−2)·ln(1−a/2) + (1−a)·ln(1−a)`.
pub fn er_sigma_h(a: f64) -> Result<f64> {
    check_range("a", a, 0.0, 1.0)?;
    let mut v = (a - 2.0) * (1.0 - a / 2.0).ln();
    if a < 1.0 {
        v += (1.0 - a) * (1.0 - a).ln();
    }
    Ok(v)
}

/// Lower bound on the relative entropy of entanglement at fixed
/// entanglement of formation: inverts the EoF-concurrence map (taking
/// the larger preimage `μ₁ ∈ [½, 1]`) and evaluates the `σ_H` curve.
pub fn er_lower_bound(e_f: f64) -> Result<f64> {
    check_range("eof", e_f, 0.0, 2.0_f64.ln() + 1e-12)?;
    // binary entropy is strictly decreasing in μ on [½, 1]
    let mut lo = 0.5;
    let mut hi = 1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy_nats(mid) > e_f {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mu = 0.5 * (lo + hi);
    let c = (1.0 - (2.0 * mu - 1.0) * (2.0 * mu - 1.0)).max(0.0).sqrt();
    er_sigma_h(c)
}

// ---------------------------------------------------------------------
// Measure reports
// ---------------------------------------------------------------------

/// Flat list of measure values plus a record of inapplicable measures.
#[derive(Debug, Clone, Default)]
pub struct MeasureReport {
    pub entries: Vec<(String, f64)>,
    /// `(measure id, reason)` for measures skipped on this input.
    pub skipped: Vec<(String, String)>,
}

impl MeasureReport {
    pub fn get(&self, id: &str) -> Option<f64> {
        self.entries.iter().find(|(k, _)| k == id).map(|(_, v)| *v)
    }
}

/// All applicable measures of a pure state.
pub fn measure_report_pure(psi: &PureState) -> MeasureReport {
    let mut report = MeasureReport::default();
    let mut push = |id: &str, v: f64| report.entries.push((String::from(id), v));
    push("entropy", entanglement_entropy(psi));
    push("renyi2", renyi_entanglement(psi, 2.0).expect("q = 2 is valid"));
    push("tangle", tangle(psi));
    push("concurrence", concurrence_pure(psi));
    let geo = closest_separable_pure(psi);
    push("e_infinity", geo.e_infinity);
    push("distance_fs", geo.distance_fs);
    push("distance_bures_pure", geo.distance_bures);
    let rho = psi.projector();
    push("negativity", negativity(&rho));
    push("reshuffling_negativity", reshuffling_negativity(&rho));
    if psi.dims().is_two_qubit() {
        push(
            "fidelity",
            max_fidelity_2q(&rho).expect("two-qubit state"),
        );
    } else {
        report.skipped.push((
            String::from("fidelity"),
            String::from("closed form requires a two-qubit state"),
        ));
    }
    report
}

/// All applicable measures of a density matrix.
pub fn measure_report_density(rho: &DensityMatrix) -> MeasureReport {
    let mut report = MeasureReport::default();
    report.entries.push((String::from("purity"), rho.purity()));
    report
        .entries
        .push((String::from("negativity"), negativity(rho)));
    report
        .entries
        .push((String::from("log_negativity"), log_negativity(rho)));
    report.entries.push((
        String::from("reshuffling_negativity"),
        reshuffling_negativity(rho),
    ));
    if rho.dims().is_two_qubit() {
        let c = concurrence_2q(rho).expect("two-qubit state");
        report.entries.push((String::from("concurrence"), c));
        report
            .entries
            .push((String::from("eof"), eof_from_concurrence(c)));
        report.entries.push((
            String::from("fidelity"),
            max_fidelity_2q(rho).expect("two-qubit state"),
        ));
    } else {
        for id in ["concurrence", "eof", "fidelity"] {
            report.skipped.push((
                String::from(id),
                String::from("closed form requires a two-qubit state"),
            ));
        }
    }
    report
}
