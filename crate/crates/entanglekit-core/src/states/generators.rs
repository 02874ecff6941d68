//! Traceless Hermitian generator bases.
//!
//! For `n = 2` this is the Pauli basis (x, y, z); for larger `n` the
//! generalised Gell-Mann basis in the fixed order symmetric,
//! antisymmetric, diagonal. All elements satisfy `Tr σ_i σ_j = 2δ_ij`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    dim: usize,
    matrices: Vec<ComplexMatrix>,
}

impl GeneratorBasis {
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: dim,
            });
        }
        let mut matrices = Vec::with_capacity(dim * dim - 1);
        // symmetric: |j⟩⟨k| + |k⟩⟨j|
        for j in 0..dim {
            for k in (j + 1)..dim {
                let mut m = ComplexMatrix::zeros(dim, dim);
                m[(j, k)] = Complex64::new(1.0, 0.0);
                m[(k, j)] = Complex64::new(1.0, 0.0);
                matrices.push(m);
            }
        }
        // antisymmetric: -i|j⟩⟨k| + i|k⟩⟨j|
        for j in 0..dim {
            for k in (j + 1)..dim {
                let mut m = ComplexMatrix::zeros(dim, dim);
                m[(j, k)] = Complex64::new(0.0, -1.0);
                m[(k, j)] = Complex64::new(0.0, 1.0);
                matrices.push(m);
            }
        }
        // diagonal: √(2/(l(l+1))) (Σ_{m<l} |m⟩⟨m| − l|l⟩⟨l|)
        for l in 1..dim {
            let w = (2.0 / (l as f64 * (l as f64 + 1.0))).sqrt();
            let mut m = ComplexMatrix::zeros(dim, dim);
            for k in 0..l {
                m[(k, k)] = Complex64::new(w, 0.0);
            }
            m[(l, l)] = Complex64::new(-w * l as f64, 0.0);
            matrices.push(m);
        }
        Ok(Self { dim, matrices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of generators, `n² − 1`.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn matrices(&self) -> &[ComplexMatrix] {
        &self.matrices
    }

    /// Stable identifier recorded alongside Fano data.
    pub fn id(&self) -> String {
        if self.dim == 2 {
            String::from("pauli")
        } else {
            format!("gellmann-{}", self.dim)
        }
    }
}
