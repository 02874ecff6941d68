//! Named state families used throughout the test batteries and the CLI.

use alloc::vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

use super::{BipartiteDims, DensityMatrix, PureState};

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) || value.is_nan() {
        return Err(Error::ParameterOutOfRange { name, value });
    }
    Ok(())
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellKind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

/// `|φ±⟩ = (|00⟩ ± |11⟩)/√2`, `|ψ±⟩ = (|01⟩ ± |10⟩)/√2`.
pub fn bell(kind: BellKind) -> PureState {
    let r = core::f64::consts::FRAC_1_SQRT_2;
    let z = Complex64::new(0.0, 0.0);
    let p = Complex64::new(r, 0.0);
    let m = Complex64::new(-r, 0.0);
    let amps = match kind {
        BellKind::PhiPlus => vec![p, z, z, p],
        BellKind::PhiMinus => vec![p, z, z, m],
        BellKind::PsiPlus => vec![z, p, p, z],
        BellKind::PsiMinus => vec![z, p, m, z],
    };
    PureState::new(BipartiteDims::new(2, 2).unwrap(), amps).unwrap()
}

/// Maximally entangled `|φ⁺⟩ = (1/√N) Σᵢ |ii⟩` on `H_N ⊗ H_N`.
pub fn max_entangled(n: usize) -> Result<PureState> {
    let dims = BipartiteDims::new(n, n)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); n * n];
    let w = 1.0 / (n as f64).sqrt();
    for i in 0..n {
        amps[i * n + i] = Complex64::new(w, 0.0);
    }
    PureState::new(dims, amps)
}

/// Maximally entangled state with amplitude matrix `U/√N`; `U` must be
/// unitary.
pub fn max_entangled_from_unitary(u: &ComplexMatrix) -> Result<PureState> {
    if !u.is_square() {
        return Err(Error::NotSquare {
            rows: u.rows(),
            cols: u.cols(),
        });
    }
    let n = u.rows();
    let dims = BipartiteDims::new(n, n)?;
    let dev = u.adjoint().mul(u).sub(&ComplexMatrix::identity(n)).max_abs();
    if dev > 1e-8 {
        return Err(Error::ParameterOutOfRange {
            name: "unitarity_deviation",
            value: dev,
        });
    }
    PureState::new(dims, u.data().to_vec())
}

/// Generalised Werner state `x·|φ⁺⟩⟨φ⁺| + (1−x)·𝟙/N²` on `H_N ⊗ H_N`.
///
/// Spectrum `{[1 + (N²−1)x]/N²} ∪ {(1−x)/N²}` with multiplicity `N²−1`;
/// for `N = 2` the partial transpose has spectrum
/// `¼{1+x, 1+x, 1+x, 1−3x}`.
pub fn werner(n: usize, x: f64) -> Result<DensityMatrix> {
    check_unit_interval("x", x)?;
    let dims = BipartiteDims::new(n, n)?;
    let d = dims.total();
    let plus = max_entangled(n)?;
    let proj = plus.projector();
    let m = proj
        .matrix()
        .scale_re(x)
        .add(&ComplexMatrix::identity(d).scale_re((1.0 - x) / d as f64));
    DensityMatrix::new(dims, m)
}

/// `σ_H(a) = a·|ψ⁻⟩⟨ψ⁻| + (1−a)·|00⟩⟨00|`; concurrence equals `a` by
/// construction.
pub fn sigma_h(a: f64) -> Result<DensityMatrix> {
    check_unit_interval("a", a)?;
    let dims = BipartiteDims::new(2, 2).unwrap();
    let psi_minus = bell(BellKind::PsiMinus).projector();
    let mut ket00 = ComplexMatrix::zeros(4, 4);
    ket00[(0, 0)] = Complex64::new(1.0, 0.0);
    let m = psi_minus.matrix().scale_re(a).add(&ket00.scale_re(1.0 - a));
    DensityMatrix::new(dims, m)
}

/// `σ_B(b) = b·|ψ⁻⟩⟨ψ⁻| + (1−b)·|ψ⁺⟩⟨ψ⁺|`; maximal fidelity equals
/// `max{b, 1−b}` by construction.
pub fn sigma_b(b: f64) -> Result<DensityMatrix> {
    check_unit_interval("b", b)?;
    let dims = BipartiteDims::new(2, 2).unwrap();
    let minus = bell(BellKind::PsiMinus).projector();
    let plus = bell(BellKind::PsiPlus).projector();
    let m = minus.matrix().scale_re(b).add(&plus.matrix().scale_re(1.0 - b));
    DensityMatrix::new(dims, m)
}

/// Maximal-concurrence-at-fixed-purity family: concurrence `y` with
/// purity `1/3 + y²/2` for `y ≤ 2/3` and `1 − 2y(1−y)` above.
pub fn rho_m(y: f64) -> Result<DensityMatrix> {
    check_unit_interval("y", y)?;
    let a = if y <= 2.0 / 3.0 { 1.0 / 3.0 } else { y / 2.0 };
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = Complex64::new(a, 0.0);
    m[(1, 1)] = Complex64::new(1.0 - 2.0 * a, 0.0);
    m[(3, 3)] = Complex64::new(a, 0.0);
    m[(0, 3)] = Complex64::new(y / 2.0, 0.0);
    m[(3, 0)] = Complex64::new(y / 2.0, 0.0);
    DensityMatrix::new(BipartiteDims::new(2, 2).unwrap(), m)
}

/// `ρ(x,ϑ) = x·|ψ_ϑ⟩⟨ψ_ϑ| + (1−x)·𝟙/4` with
/// `|ψ_ϑ⟩ ∝ sin(ϑ/2)|01⟩ + cos(ϑ/2)|10⟩`.
pub fn rho_xtheta(x: f64, theta: f64) -> Result<DensityMatrix> {
    check_unit_interval("x", x)?;
    if !(0.0..core::f64::consts::TAU).contains(&theta) {
        return Err(Error::ParameterOutOfRange {
            name: "theta",
            value: theta,
        });
    }
    let dims = BipartiteDims::new(2, 2).unwrap();
    let z = Complex64::new(0.0, 0.0);
    let psi = PureState::new(
        dims,
        vec![
            z,
            Complex64::new((theta / 2.0).sin(), 0.0),
            Complex64::new((theta / 2.0).cos(), 0.0),
            z,
        ],
    )?;
    let m = psi
        .projector()
        .matrix()
        .scale_re(x)
        .add(&ComplexMatrix::identity(4).scale_re((1.0 - x) / 4.0));
    DensityMatrix::new(dims, m)
}

/// Pseudo-pure state `(1−ε)·𝟙/d + ε·|φ⟩⟨φ|`.
pub fn pseudo_pure(dims: BipartiteDims, phi: &PureState, epsilon: f64) -> Result<DensityMatrix> {
    check_unit_interval("epsilon", epsilon)?;
    if phi.dims() != dims {
        return Err(Error::DimensionMismatch {
            expected: dims.total(),
            got: phi.dims().total(),
        });
    }
    let d = dims.total();
    let m = phi
        .projector()
        .matrix()
        .scale_re(epsilon)
        .add(&ComplexMatrix::identity(d).scale_re((1.0 - epsilon) / d as f64));
    DensityMatrix::new(dims, m)
}

/// The five "tiles" unextendible product basis vectors on `H_3 ⊗ H_3`.
pub fn tiles_upb_basis() -> [PureState; 5] {
    let dims = BipartiteDims::new(3, 3).unwrap();
    let mk = |pairs: &[(usize, usize, f64)]| -> PureState {
        let mut amps = vec![Complex64::new(0.0, 0.0); 9];
        for &(i, j, w) in pairs {
            amps[i * 3 + j] = Complex64::new(w, 0.0);
        }
        PureState::new(dims, amps).unwrap()
    };
    [
        // |0⟩ ⊗ (|0⟩−|1⟩)/√2
        mk(&[(0, 0, 1.0), (0, 1, -1.0)]),
        // |2⟩ ⊗ (|1⟩−|2⟩)/√2
        mk(&[(2, 1, 1.0), (2, 2, -1.0)]),
        // (|0⟩−|1⟩)/√2 ⊗ |2⟩
        mk(&[(0, 2, 1.0), (1, 2, -1.0)]),
        // (|1⟩−|2⟩)/√2 ⊗ |0⟩
        mk(&[(1, 0, 1.0), (2, 0, -1.0)]),
        // (|0⟩+|1⟩+|2⟩)/√3 ⊗ (|0⟩+|1⟩+|2⟩)/√3
        mk(&[
            (0, 0, 1.0),
            (0, 1, 1.0),
            (0, 2, 1.0),
            (1, 0, 1.0),
            (1, 1, 1.0),
            (1, 2, 1.0),
            (2, 0, 1.0),
            (2, 1, 1.0),
            (2, 2, 1.0),
        ]),
    ]
}

/// PPT entangled state `(𝟙 − P)/4` with `P` the projector onto the tiles
/// UPB; rank 4, trace 1, orthogonal to all five basis vectors.
pub fn tiles_upb_state() -> DensityMatrix {
    let dims = BipartiteDims::new(3, 3).unwrap();
    let mut p = ComplexMatrix::zeros(9, 9);
    for u in tiles_upb_basis() {
        p = p.add(&u.projector().matrix().clone());
    }
    let m = ComplexMatrix::identity(9).sub(&p).scale_re(0.25).hermitize();
    DensityMatrix::new(dims, m).expect("UPB complement is a valid state")
}
