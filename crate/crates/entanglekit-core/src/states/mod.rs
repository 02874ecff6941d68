//! Bipartite quantum states and their structural transforms.
//!
//! Pure states are stored as unit-norm amplitude vectors over
//! `H_A ⊗ H_B`, mixed states as validated density matrices. Index
//! convention throughout: the composite index of `|i⟩_A ⊗ |μ⟩_B` is
//! `i·n_b + μ` (row-major over the A factor).

mod families;
mod fano;
mod generators;

pub use families::{
    bell, max_entangled, max_entangled_from_unitary, pseudo_pure, rho_m, rho_xtheta, sigma_b,
    sigma_h, tiles_upb_basis, tiles_upb_state, werner, BellKind,
};
pub use fano::{fano_form, fano_reconstruct, fano_flip, spin_flip_2q, FanoForm, FlipSide};
pub use generators::GeneratorBasis;

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};

/// Entrywise Hermiticity tolerance used by state validation.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Most negative eigenvalue tolerated (and clamped) by state validation.
pub const PSD_FLOOR: f64 = -1e-9;
/// Schmidt coefficients below this are treated as zero.
pub const SCHMIDT_RANK_TOL: f64 = 1e-10;

/// Subsystem selector for partial operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Dimensions of the two tensor factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteDims {
    n_a: usize,
    n_b: usize,
}

impl BipartiteDims {
    pub fn new(n_a: usize, n_b: usize) -> Result<Self> {
        if n_a < 2 || n_b < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: n_a.min(n_b),
            });
        }
        Ok(Self { n_a, n_b })
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    /// Total Hilbert-space dimension `n_a · n_b`.
    pub fn total(&self) -> usize {
        self.n_a * self.n_b
    }

    pub fn is_two_qubit(&self) -> bool {
        self.n_a == 2 && self.n_b == 2
    }
}

/// Normalised pure state of a bipartite system.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: BipartiteDims,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Builds a pure state, rescaling the amplitudes to unit norm.
    pub fn new(dims: BipartiteDims, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                got: amplitudes.len(),
            });
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-150 {
            return Err(Error::ZeroVector);
        }
        let amplitudes = amplitudes.into_iter().map(|z| z / norm).collect();
        Ok(Self { dims, amplitudes })
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude matrix `A` with `A[i][j] = ⟨i|⟨j|ψ⟩`, shape `n_a × n_b`.
    pub fn amplitude_matrix(&self) -> ComplexMatrix {
        let nb = self.dims.n_b;
        ComplexMatrix::from_fn(self.dims.n_a, nb, |i, j| self.amplitudes[i * nb + j])
    }

    /// Projector `|ψ⟩⟨ψ|` as a density matrix.
    pub fn projector(&self) -> DensityMatrix {
        let d = self.dims.total();
        let m = ComplexMatrix::from_fn(d, d, |i, j| {
            self.amplitudes[i] * self.amplitudes[j].conj()
        });
        DensityMatrix::new(self.dims, m).expect("projector from unit vector is a valid state")
    }

    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Applies a local unitary `U_A ⊗ U_B`.
    pub fn apply_local(&self, u_a: &ComplexMatrix, u_b: &ComplexMatrix) -> Result<PureState> {
        if u_a.rows() != self.dims.n_a || u_a.cols() != self.dims.n_a {
            return Err(Error::DimensionMismatch {
                expected: self.dims.n_a,
                got: u_a.rows(),
            });
        }
        if u_b.rows() != self.dims.n_b || u_b.cols() != self.dims.n_b {
            return Err(Error::DimensionMismatch {
                expected: self.dims.n_b,
                got: u_b.rows(),
            });
        }
        let a = u_a.mul(&self.amplitude_matrix()).mul(&u_b.transpose());
        PureState::new(self.dims, a.data().to_vec())
    }
}

/// Validated bipartite density matrix (Hermitian, PSD up to a clamped
/// floor, unit trace).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: BipartiteDims,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates and stores a density matrix. Eigenvalues in
    /// `[PSD_FLOOR, 0)` are clamped to zero and the trace renormalised.
    pub fn new(dims: BipartiteDims, matrix: ComplexMatrix) -> Result<Self> {
        let d = dims.total();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: matrix.rows(),
            });
        }
        let dev = matrix.hermitian_deviation();
        if dev.is_nan() || dev > HERMITICITY_TOL {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > 1e-10 {
            return Err(Error::TraceNotUnit { trace });
        }
        let (eigenvalues, vectors) = linalg::hermitian_eigensystem(&matrix, HERMITICITY_TOL)?;
        let min = eigenvalues.last().copied().unwrap_or(0.0);
        if min < PSD_FLOOR {
            return Err(Error::NotPsd {
                min_eigenvalue: min,
            });
        }
        let matrix = if min < 0.0 {
            // Clamp the noisy tail and renormalise.
            let clamped: Vec<f64> = eigenvalues.iter().map(|&l| l.max(0.0)).collect();
            let total: f64 = clamped.iter().sum();
            let mut scaled = vectors.clone();
            for j in 0..d {
                for i in 0..d {
                    scaled[(i, j)] *= clamped[j] / total;
                }
            }
            scaled.mul(&vectors.adjoint()).hermitize()
        } else if (trace - 1.0).abs() > 0.0 {
            matrix.scale_re(1.0 / trace).hermitize()
        } else {
            matrix
        };
        Ok(Self { dims, matrix })
    }

    pub fn from_pure(psi: &PureState) -> Self {
        psi.projector()
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.dims.total()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        let f = self.matrix.frobenius_norm();
        f * f
    }

    /// Eigenvalues, descending.
    pub fn spectrum(&self) -> Vec<f64> {
        linalg::hermitian_eigensystem(&self.matrix, HERMITICITY_TOL)
            .expect("stored density matrix is Hermitian")
            .0
    }

    /// Conjugation by a local unitary `U_A ⊗ U_B`.
    pub fn apply_local(&self, u_a: &ComplexMatrix, u_b: &ComplexMatrix) -> Result<DensityMatrix> {
        let u = u_a.kron(u_b);
        if u.rows() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: u.rows(),
            });
        }
        DensityMatrix::new(self.dims, u.mul(&self.matrix).mul(&u.adjoint()).hermitize())
    }
}

/// Result of the Schmidt decomposition of a pure state.
///
/// `coefficients` are the squared singular values of the amplitude matrix
/// (descending, unit sum). Reconstruction reads
/// `|ψ⟩ = Σ_k √λ_k |u_k⟩|w_k⟩` with `u_k`/`w_k` the columns of
/// `left_vectors`/`right_vectors`.
#[derive(Debug, Clone)]
pub struct SchmidtData {
    pub coefficients: Vec<f64>,
    pub left_vectors: ComplexMatrix,
    pub right_vectors: ComplexMatrix,
    /// Number of coefficients above [`SCHMIDT_RANK_TOL`].
    pub rank: usize,
    /// Schmidt angle `arctan √(λ₂/λ₁)`; two-qubit states only.
    pub angle_chi: Option<f64>,
    /// Degeneracy profile `(m₀, m₁, …)`: count of vanishing coefficients
    /// first, then group sizes of equal nonzero coefficients in
    /// descending coefficient order.
    pub multiplicities: Vec<usize>,
}

/// Schmidt decomposition via SVD of the amplitude matrix.
pub fn schmidt(psi: &PureState) -> SchmidtData {
    let a = psi.amplitude_matrix();
    let f = linalg::svd(&a).expect("amplitude matrix is nonempty");
    let coefficients: Vec<f64> = f.singular_values.iter().map(|s| s * s).collect();
    let rank = coefficients
        .iter()
        .filter(|&&l| l > SCHMIDT_RANK_TOL)
        .count();
    let angle_chi = if psi.dims.is_two_qubit() {
        let chi = (coefficients[1].max(0.0) / coefficients[0].max(1e-300))
            .sqrt()
            .atan();
        Some(chi.clamp(0.0, core::f64::consts::FRAC_PI_4))
    } else {
        None
    };
    let multiplicities = degeneracy_profile(&coefficients);
    SchmidtData {
        coefficients,
        left_vectors: f.u,
        right_vectors: f.v.conj(),
        rank,
        angle_chi,
        multiplicities,
    }
}

/// Groups a descending coefficient list into `(m₀, m₁, …)`, merging
/// values equal within `1e-8` relative tolerance.
pub fn degeneracy_profile(coefficients: &[f64]) -> Vec<usize> {
    let zeros = coefficients
        .iter()
        .filter(|&&l| l <= SCHMIDT_RANK_TOL)
        .count();
    let mut profile = vec![zeros];
    let mut group_head = f64::NAN;
    for &l in coefficients.iter().filter(|&&l| l > SCHMIDT_RANK_TOL) {
        if !group_head.is_nan() && (group_head - l) <= 1e-8 * group_head {
            *profile.last_mut().unwrap() += 1;
        } else {
            profile.push(1);
            group_head = l;
        }
    }
    profile
}

/// Partial trace over the selected subsystem; returns the reduced state
/// on the remaining one (Hermitian, PSD, unit trace).
pub fn partial_trace(rho: &DensityMatrix, traced_out: Subsystem) -> ComplexMatrix {
    let (na, nb) = (rho.dims.n_a, rho.dims.n_b);
    let m = rho.matrix();
    match traced_out {
        Subsystem::B => ComplexMatrix::from_fn(na, na, |i, k| {
            (0..nb).map(|mu| m[(i * nb + mu, k * nb + mu)]).sum()
        }),
        Subsystem::A => ComplexMatrix::from_fn(nb, nb, |mu, nu| {
            (0..na).map(|i| m[(i * nb + mu, i * nb + nu)]).sum()
        }),
    }
}

/// Partial transpose on the selected subsystem. Hermitian, unit trace,
/// not necessarily positive.
pub fn partial_transpose(rho: &DensityMatrix, side: Subsystem) -> ComplexMatrix {
    let (na, nb) = (rho.dims.n_a, rho.dims.n_b);
    let d = na * nb;
    let m = rho.matrix();
    ComplexMatrix::from_fn(d, d, |r, c| {
        let (i, mu) = (r / nb, r % nb);
        let (j, nu) = (c / nb, c % nb);
        match side {
            Subsystem::A => m[(j * nb + mu, i * nb + nu)],
            Subsystem::B => m[(i * nb + nu, j * nb + mu)],
        }
    })
}

/// Reshuffling (realignment): `R[(i,j),(μ,ν)] = ρ[(i,μ),(j,ν)]`, of shape
/// `n_a² × n_b²`.
pub fn reshuffle(rho: &DensityMatrix) -> ComplexMatrix {
    let (na, nb) = (rho.dims.n_a, rho.dims.n_b);
    let m = rho.matrix();
    ComplexMatrix::from_fn(na * na, nb * nb, |r, c| {
        let (i, j) = (r / na, r % na);
        let (mu, nu) = (c / nb, c % nb);
        m[(i * nb + mu, j * nb + nu)]
    })
}

/// Von Neumann entropy of a probability spectrum (natural log).
pub fn von_neumann_of_spectrum(spectrum: &[f64]) -> f64 {
    spectrum
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.ln())
        .sum()
}

/// Rényi entropy `S_q` of a probability spectrum. `q = 1` is the von
/// Neumann limit (taken exactly for `|q−1| < 1e-9`), `q = 0` gives
/// `ln rank`, `q = ∞` gives `−ln λ_max`.
pub fn renyi_of_spectrum(spectrum: &[f64], q: f64) -> Result<f64> {
    if q < 0.0 || q.is_nan() {
        return Err(Error::ParameterOutOfRange {
            name: "q",
            value: q,
        });
    }
    if q == f64::INFINITY {
        let max = spectrum.iter().cloned().fold(0.0, f64::max);
        return Ok(-max.max(1e-300).ln());
    }
    if q == 0.0 {
        let rank = spectrum.iter().filter(|&&l| l > SCHMIDT_RANK_TOL).count();
        return Ok((rank.max(1) as f64).ln());
    }
    if (q - 1.0).abs() < 1e-9 {
        return Ok(von_neumann_of_spectrum(spectrum));
    }
    let sum: f64 = spectrum
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| l.powf(q))
        .sum();
    Ok(sum.max(1e-300).ln() / (1.0 - q))
}

/// Rényi entropy of a Hermitian PSD unit-trace matrix.
pub fn matrix_entropy(m: &ComplexMatrix, q: f64) -> Result<f64> {
    let (vals, _) = linalg::hermitian_eigensystem(m, HERMITICITY_TOL)?;
    let clamped: Vec<f64> = vals.iter().map(|&l| l.max(0.0)).collect();
    renyi_of_spectrum(&clamped, q)
}

/// Rényi entropy `S_q(ρ)`.
pub fn entropies(rho: &DensityMatrix, q: f64) -> Result<f64> {
    let spectrum: Vec<f64> = rho.spectrum().iter().map(|&l| l.max(0.0)).collect();
    renyi_of_spectrum(&spectrum, q)
}

/// Conditional entropy `S(A|B) = S(ρ_AB) − S(ρ_A)`; negative values
/// certify entanglement.
pub fn conditional_entropy(rho: &DensityMatrix) -> f64 {
    let global = entropies(rho, 1.0).expect("q = 1 is valid");
    let reduced = matrix_entropy(&partial_trace(rho, Subsystem::B), 1.0)
        .expect("reduction of a valid state is a valid state");
    global - reduced
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn dims22() -> BipartiteDims {
        BipartiteDims::new(2, 2).unwrap()
    }

    #[test]
    fn normalises_amplitudes() {
        let psi = PureState::new(dims22(), vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
            .unwrap();
        let r = core::f64::consts::FRAC_1_SQRT_2;
        assert!((psi.amplitudes()[0].re - r).abs() < 1e-15);
        assert!((psi.amplitudes()[3].re - r).abs() < 1e-15);

        let product = PureState::new(dims22(), vec![c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert!((product.amplitudes()[0].re - 1.0).abs() < 1e-15);

        let mut v = vec![c(0.0, 0.0); 6];
        v[1] = c(0.3, -0.4);
        v[4] = c(0.0, 1.2);
        let psi = PureState::new(BipartiteDims::new(2, 3).unwrap(), v).unwrap();
        let n: f64 = psi.amplitudes().iter().map(|z| z.norm_sqr()).sum();
        assert!((n - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_zero_vector_and_bad_length() {
        assert!(matches!(
            PureState::new(dims22(), vec![c(0.0, 0.0); 4]),
            Err(Error::ZeroVector)
        ));
        assert!(matches!(
            PureState::new(dims22(), vec![c(1.0, 0.0); 3]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn schmidt_of_schmidt_form_state() {
        let chi = 0.4_f64;
        let psi = PureState::new(
            dims22(),
            vec![c(chi.cos(), 0.0), c(0.0, 0.0), c(0.0, 0.0), c(chi.sin(), 0.0)],
        )
        .unwrap();
        let s = schmidt(&psi);
        assert!((s.coefficients[0] - chi.cos().powi(2)).abs() < 1e-14);
        assert!((s.coefficients[1] - chi.sin().powi(2)).abs() < 1e-14);
        assert!((s.angle_chi.unwrap() - chi).abs() < 1e-12);

        let reduced = partial_trace(&psi.projector(), Subsystem::B);
        assert!((reduced[(0, 0)].re - chi.cos().powi(2)).abs() < 1e-12);
        assert!((reduced[(1, 1)].re - chi.sin().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn schmidt_of_product_and_bell() {
        let product = PureState::new(dims22(), vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let s = schmidt(&product);
        assert_eq!(s.rank, 1);
        assert!((s.coefficients[0] - 1.0).abs() < 1e-14);
        assert!(s.coefficients[1].abs() < 1e-14);
        assert_eq!(s.multiplicities, vec![1, 1]);

        let bell = bell(BellKind::PsiPlus);
        let s = schmidt(&bell);
        assert!((s.coefficients[0] - 0.5).abs() < 1e-14);
        assert!((s.coefficients[1] - 0.5).abs() < 1e-14);
        assert!((s.angle_chi.unwrap() - core::f64::consts::FRAC_PI_4).abs() < 1e-12);
        assert_eq!(s.multiplicities, vec![0, 2]);
    }

    #[test]
    fn schmidt_reconstruction() {
        let dims = BipartiteDims::new(3, 4).unwrap();
        let mut arg = 0.3_f64;
        let amps: Vec<Complex64> = (0..12)
            .map(|_| {
                arg = (arg * 997.0).sin();
                c(arg, (arg * 2.0).cos())
            })
            .collect();
        let psi = PureState::new(dims, amps).unwrap();
        let s = schmidt(&psi);
        // rebuild Σ √λ u_k ⊗ w_k
        let mut rebuilt = [c(0.0, 0.0); 12];
        for (k, coeff) in s.coefficients.iter().enumerate() {
            let w = coeff.max(0.0).sqrt();
            for i in 0..3 {
                for j in 0..4 {
                    rebuilt[i * 4 + j] += s.left_vectors[(i, k)] * s.right_vectors[(j, k)] * w;
                }
            }
        }
        // global phase is fixed by SVD convention here; compare directly up to phase
        let overlap: Complex64 = rebuilt
            .iter()
            .zip(psi.amplitudes())
            .map(|(r, a)| r.conj() * a)
            .sum();
        assert!((overlap.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn partial_trace_examples() {
        let bell = bell(BellKind::PhiPlus).projector();
        let ra = partial_trace(&bell, Subsystem::B);
        assert!(ra.sub(&ComplexMatrix::identity(2).scale_re(0.5)).max_abs() < 1e-14);

        // product state factorisation
        let rho_a = ComplexMatrix::new(2, 2, vec![c(0.7, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.3, 0.0)])
            .unwrap();
        let rho_b = ComplexMatrix::from_diag(&[0.25, 0.75]);
        let prod = DensityMatrix::new(dims22(), rho_a.kron(&rho_b)).unwrap();
        assert!(partial_trace(&prod, Subsystem::B).sub(&rho_a).max_abs() < 1e-12);
        assert!(partial_trace(&prod, Subsystem::A).sub(&rho_b).max_abs() < 1e-12);

        let dims = BipartiteDims::new(2, 3).unwrap();
        let mixed = DensityMatrix::new(dims, ComplexMatrix::identity(6).scale_re(1.0 / 6.0)).unwrap();
        let rb = partial_trace(&mixed, Subsystem::A);
        assert!(rb.sub(&ComplexMatrix::identity(3).scale_re(1.0 / 3.0)).max_abs() < 1e-14);
    }

    #[test]
    fn pure_state_reductions_share_spectrum() {
        let dims = BipartiteDims::new(2, 3).unwrap();
        let amps: Vec<Complex64> = (0..6).map(|k| c(0.3 + k as f64, 0.1 * k as f64)).collect();
        let rho = PureState::new(dims, amps).unwrap().projector();
        let sa = linalg::hermitian_eigensystem(&partial_trace(&rho, Subsystem::B), 1e-9)
            .unwrap()
            .0;
        let sb = linalg::hermitian_eigensystem(&partial_trace(&rho, Subsystem::A), 1e-9)
            .unwrap()
            .0;
        for i in 0..2 {
            assert!((sa[i] - sb[i]).abs() < 1e-12);
        }
        assert!(sb[2].abs() < 1e-12);
    }

    #[test]
    fn partial_transpose_bell_and_involution() {
        let bell = bell(BellKind::PhiPlus).projector();
        let pt = partial_transpose(&bell, Subsystem::A);
        let vals = linalg::hermitian_eigensystem(&pt, 1e-10).unwrap().0;
        assert!((vals[0] - 0.5).abs() < 1e-12);
        assert!((vals[1] - 0.5).abs() < 1e-12);
        assert!((vals[2] - 0.5).abs() < 1e-12);
        assert!((vals[3] + 0.5).abs() < 1e-12);
        assert!((pt.trace().re - 1.0).abs() < 1e-12);
        assert!((pt.frobenius_norm() - bell.matrix().frobenius_norm()).abs() < 1e-12);

        // involution and T_A ∘ T_B = full transpose, via a raw entrywise
        // T_B that works on non-PSD matrices too
        let transpose_b = |m: &ComplexMatrix| {
            let nb = 2;
            ComplexMatrix::from_fn(4, 4, |r, cidx| {
                let (i, mu) = (r / nb, r % nb);
                let (j, nu) = (cidx / nb, cidx % nb);
                m[(i * nb + nu, j * nb + mu)]
            })
        };
        let w = werner(2, 0.7).unwrap();
        let ta = partial_transpose(&w, Subsystem::A);
        let back = transpose_b(&transpose_b(w.matrix()));
        assert!(back.sub(w.matrix()).max_abs() < 1e-14);
        assert!(transpose_b(&ta).sub(&w.matrix().transpose()).max_abs() < 1e-14);

        // spectra of the two variants agree
        let va = linalg::hermitian_eigensystem(&partial_transpose(&w, Subsystem::A), 1e-10)
            .unwrap()
            .0;
        let vb = linalg::hermitian_eigensystem(&partial_transpose(&w, Subsystem::B), 1e-10)
            .unwrap()
            .0;
        for i in 0..4 {
            assert!((va[i] - vb[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn partial_transpose_of_product_stays_positive() {
        let rho_a = ComplexMatrix::new(2, 2, vec![c(0.6, 0.0), c(0.2, 0.1), c(0.2, -0.1), c(0.4, 0.0)])
            .unwrap();
        let rho_b = ComplexMatrix::new(2, 2, vec![c(0.5, 0.0), c(0.0, 0.3), c(0.0, -0.3), c(0.5, 0.0)])
            .unwrap();
        let prod = DensityMatrix::new(dims22(), rho_a.kron(&rho_b)).unwrap();
        let pt = partial_transpose(&prod, Subsystem::A);
        let vals = linalg::hermitian_eigensystem(&pt, 1e-10).unwrap().0;
        assert!(vals.last().unwrap() > &-1e-12);
        // spectrum of ρ_Aᵀ ⊗ ρ_B equals spectrum of ρ_A ⊗ ρ_B
        let before = prod.spectrum();
        for (x, y) in before.iter().zip(vals.iter()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn reshuffle_examples() {
        // product state: rank one, norm √Trσ_A² · √Trσ_B²
        let sa = ComplexMatrix::new(2, 2, vec![c(0.8, 0.0), c(0.1, 0.1), c(0.1, -0.1), c(0.2, 0.0)])
            .unwrap();
        let sb = ComplexMatrix::from_diag(&[0.65, 0.35]);
        let prod = DensityMatrix::new(dims22(), sa.kron(&sb)).unwrap();
        let r = reshuffle(&prod);
        let sv = linalg::singular_values(&r).unwrap();
        let expected = (sa.mul(&sa.adjoint()).trace().re * sb.mul(&sb.adjoint()).trace().re).sqrt();
        assert!((sv[0] - expected).abs() < 1e-12);
        assert!(sv[1].abs() < 1e-12);
        assert!(expected <= 1.0 + 1e-12);

        let mixed = DensityMatrix::new(dims22(), ComplexMatrix::identity(4).scale_re(0.25)).unwrap();
        assert!((linalg::trace_norm(&reshuffle(&mixed)).unwrap() - 0.5).abs() < 1e-12);

        let bell = bell(BellKind::PhiPlus).projector();
        assert!((linalg::trace_norm(&reshuffle(&bell)).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn reshuffle_is_linear() {
        let x = werner(2, 0.3).unwrap();
        let y = bell(BellKind::PsiMinus).projector();
        let mix = DensityMatrix::new(
            dims22(),
            x.matrix().scale_re(0.25).add(&y.matrix().scale_re(0.75)),
        )
        .unwrap();
        let lhs = reshuffle(&mix);
        let rhs = reshuffle(&x).scale_re(0.25).add(&reshuffle(&y).scale_re(0.75));
        assert!(lhs.sub(&rhs).max_abs() < 1e-12);
    }

    #[test]
    fn entropy_examples() {
        let mixed = DensityMatrix::new(dims22(), ComplexMatrix::identity(4).scale_re(0.25)).unwrap();
        assert!((entropies(&mixed, 1.0).unwrap() - 4.0_f64.ln()).abs() < 1e-12);

        let pure = bell(BellKind::PhiPlus).projector();
        for q in [0.5, 1.0, 2.0, f64::INFINITY] {
            assert!(entropies(&pure, q).unwrap().abs() < 1e-9);
        }

        // S(A|B) = 0 − ln 2 for a Bell state
        assert!((conditional_entropy(&pure) + 2.0_f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn renyi_continuity_near_one() {
        let spec = [0.62, 0.25, 0.1, 0.03];
        let s1 = renyi_of_spectrum(&spec, 1.0).unwrap();
        for dq in [1e-6, -1e-6, 1e-8, -1e-8] {
            let sq = renyi_of_spectrum(&spec, 1.0 + dq).unwrap();
            assert!((sq - s1).abs() < 1e-5, "dq={dq} diff={}", (sq - s1).abs());
        }
    }

    #[test]
    fn validation_rejects_bad_density_matrices() {
        // not hermitian
        let mut m = ComplexMatrix::identity(4).scale_re(0.25);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(matches!(
            DensityMatrix::new(dims22(), m),
            Err(Error::NotHermitian { .. })
        ));
        // negative eigenvalue beyond the floor
        let m = ComplexMatrix::from_diag(&[1.1, -0.1, 0.0, 0.0]);
        assert!(matches!(
            DensityMatrix::new(dims22(), m),
            Err(Error::NotPsd { .. })
        ));
        // wrong trace
        let m = ComplexMatrix::identity(4).scale_re(0.3);
        assert!(matches!(
            DensityMatrix::new(dims22(), m),
            Err(Error::TraceNotUnit { .. })
        ));
    }

    #[test]
    fn validation_clamps_noise_floor() {
        let m = ComplexMatrix::from_diag(&[0.6, 0.4 + 5e-10, -5e-10, 0.0]);
        let rho = DensityMatrix::new(dims22(), m).unwrap();
        let spec = rho.spectrum();
        assert!(spec.last().unwrap() >= &-1e-15);
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degeneracy_profiles() {
        assert_eq!(degeneracy_profile(&[1.0, 0.0]), vec![1, 1]);
        assert_eq!(degeneracy_profile(&[0.5, 0.5]), vec![0, 2]);
        assert_eq!(degeneracy_profile(&[0.7, 0.25, 0.05]), vec![0, 1, 1, 1]);
        assert_eq!(degeneracy_profile(&[0.4, 0.3, 0.3, 0.0]), vec![1, 1, 2]);
    }
}
