//! Fano form of a bipartite density matrix and the associated flips.
//!
//! A state on `H_N ⊗ H_K` expands as
//! `ρ = (1/NK)[𝟙 + Σ τ^A_i σ_i⊗𝟙 + Σ τ^B_j 𝟙⊗σ_j + Σ β_ij σ_i⊗σ_j]`
//! over the generator bases of both factors.

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

use super::{partial_trace, BipartiteDims, DensityMatrix, GeneratorBasis, Subsystem};

/// Bloch vectors and correlation matrix of a state.
#[derive(Debug, Clone)]
pub struct FanoForm {
    pub dims: BipartiteDims,
    /// Length `n_a² − 1`.
    pub tau_a: Vec<f64>,
    /// Length `n_b² − 1`.
    pub tau_b: Vec<f64>,
    /// Row-major `(n_a² − 1) × (n_b² − 1)` correlation matrix.
    pub beta: Vec<f64>,
    /// Generator basis identifiers for the A and B side.
    pub basis_a: String,
    pub basis_b: String,
}

impl FanoForm {
    pub fn beta_matrix(&self) -> ComplexMatrix {
        let (ra, rb) = (self.dims.n_a() * self.dims.n_a() - 1, self.dims.n_b() * self.dims.n_b() - 1);
        ComplexMatrix::from_fn(ra, rb, |i, j| Complex64::new(self.beta[i * rb + j], 0.0))
    }
}

/// Expansion coefficients of `ρ` over the canonical generator bases:
/// `τ^A_i = (n_a/2)·Tr(ρ_A σ_i)`, `τ^B_j = (n_b/2)·Tr(ρ_B σ_j)`,
/// `β_ij = (n_a n_b/4)·Tr(ρ σ_i⊗σ_j)`.
pub fn fano_form(rho: &DensityMatrix) -> FanoForm {
    let dims = rho.dims();
    let (na, nb) = (dims.n_a(), dims.n_b());
    let basis_a = GeneratorBasis::new(na).expect("n_a >= 2");
    let basis_b = GeneratorBasis::new(nb).expect("n_b >= 2");

    let rho_a = partial_trace(rho, Subsystem::B);
    let rho_b = partial_trace(rho, Subsystem::A);
    let tau_a: Vec<f64> = basis_a
        .matrices()
        .iter()
        .map(|s| 0.5 * na as f64 * s.mul(&rho_a).trace().re)
        .collect();
    let tau_b: Vec<f64> = basis_b
        .matrices()
        .iter()
        .map(|s| 0.5 * nb as f64 * s.mul(&rho_b).trace().re)
        .collect();

    let m = rho.matrix();
    let mut beta = Vec::with_capacity(tau_a.len() * tau_b.len());
    for s in basis_a.matrices() {
        for t in basis_b.matrices() {
            // Tr(ρ · σ_i ⊗ σ_j) without forming the Kronecker product
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..na {
                for j in 0..na {
                    let s_ji = s[(j, i)];
                    if s_ji == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    for mu in 0..nb {
                        for nu in 0..nb {
                            acc += m[(i * nb + mu, j * nb + nu)] * s_ji * t[(nu, mu)];
                        }
                    }
                }
            }
            beta.push(0.25 * (na * nb) as f64 * acc.re);
        }
    }

    FanoForm {
        dims,
        tau_a,
        tau_b,
        beta,
        basis_a: basis_a.id(),
        basis_b: basis_b.id(),
    }
}

fn assemble(
    dims: BipartiteDims,
    tau_a: &[f64],
    tau_b: &[f64],
    beta: &[f64],
) -> ComplexMatrix {
    let (na, nb) = (dims.n_a(), dims.n_b());
    let basis_a = GeneratorBasis::new(na).expect("n_a >= 2");
    let basis_b = GeneratorBasis::new(nb).expect("n_b >= 2");
    let d = dims.total();
    let mut acc = ComplexMatrix::identity(d);
    let id_a = ComplexMatrix::identity(na);
    let id_b = ComplexMatrix::identity(nb);
    for (i, s) in basis_a.matrices().iter().enumerate() {
        if tau_a[i] != 0.0 {
            acc = acc.add(&s.kron(&id_b).scale_re(tau_a[i]));
        }
    }
    for (j, t) in basis_b.matrices().iter().enumerate() {
        if tau_b[j] != 0.0 {
            acc = acc.add(&id_a.kron(t).scale_re(tau_b[j]));
        }
    }
    let cols = basis_b.len();
    for (i, s) in basis_a.matrices().iter().enumerate() {
        for (j, t) in basis_b.matrices().iter().enumerate() {
            let b = beta[i * cols + j];
            if b != 0.0 {
                acc = acc.add(&s.kron(t).scale_re(b));
            }
        }
    }
    acc.scale_re(1.0 / d as f64).hermitize()
}

/// Rebuilds the density matrix from its Fano data.
pub fn fano_reconstruct(f: &FanoForm) -> Result<DensityMatrix> {
    let m = assemble(f.dims, &f.tau_a, &f.tau_b, &f.beta);
    DensityMatrix::new(f.dims, m)
}

/// Which Bloch vector(s) to flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipSide {
    /// `τ^B → −τ^B`, `β → −β`; isospectral to the partial transpose.
    B,
    /// `τ^A → −τ^A`, `τ^B → −τ^B`, `β` unchanged; for two qubits this is
    /// the spin flip `ρ̃`.
    Both,
}

/// Flips Bloch vectors in the Fano form. The single-side flip requires
/// `n_a = n_b`; the result is Hermitian with unit trace but not
/// necessarily positive.
pub fn fano_flip(rho: &DensityMatrix, side: FlipSide) -> Result<ComplexMatrix> {
    let dims = rho.dims();
    if side == FlipSide::B && dims.n_a() != dims.n_b() {
        return Err(Error::DimensionMismatch {
            expected: dims.n_a(),
            got: dims.n_b(),
        });
    }
    let f = fano_form(rho);
    let neg = |v: &[f64]| -> Vec<f64> { v.iter().map(|x| -x).collect() };
    let m = match side {
        FlipSide::B => assemble(dims, &f.tau_a, &neg(&f.tau_b), &neg(&f.beta)),
        FlipSide::Both => assemble(dims, &neg(&f.tau_a), &neg(&f.tau_b), &f.beta),
    };
    Ok(m)
}

/// Two-qubit spin flip `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)` in the standard
/// basis.
pub fn spin_flip_2q(rho: &DensityMatrix) -> Result<DensityMatrix> {
    let dims = rho.dims();
    if !dims.is_two_qubit() {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: dims.total(),
        });
    }
    let yy = sigma_y_sigma_y();
    let flipped = yy.mul(&rho.matrix().conj()).mul(&yy).hermitize();
    DensityMatrix::new(dims, flipped)
}

pub(crate) fn sigma_y_sigma_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    // σ_y ⊗ σ_y = antidiag(-1, 1, 1, -1)
    m[(0, 3)] = Complex64::new(-1.0, 0.0);
    m[(1, 2)] = Complex64::new(1.0, 0.0);
    m[(2, 1)] = Complex64::new(1.0, 0.0);
    m[(3, 0)] = Complex64::new(-1.0, 0.0);
    m
}
