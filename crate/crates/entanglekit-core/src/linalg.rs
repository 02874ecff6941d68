//! Dense complex linear algebra for small matrices (dimension ≲ 100).
//!
//! The eigensolver is a cyclic Jacobi iteration for Hermitian matrices and
//! the SVD a one-sided Jacobi orthogonalisation; both visit index pairs in
//! a fixed order, so results are deterministic for a fixed input.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Dense rectangular complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting length mismatches
    /// and non-finite values.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Diagonal matrix from real entries.
    pub fn from_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        Self::from_fn(ra * rb, ca * cb, |i, j| {
            self[(i / rb, j / cb)] * other[(i % rb, j % cb)]
        })
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max entrywise deviation from `self = self†`.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Symmetrises rounding noise: `(m + m†)/2`.
    pub fn hermitize(&self) -> Self {
        assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }

    /// `⟨x|M|y⟩` for column vectors given as slices.
    pub fn quadratic_form(&self, x: &[Complex64], y: &[Complex64]) -> Complex64 {
        assert_eq!(self.rows, x.len());
        assert_eq!(self.cols, y.len());
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.rows {
            let mut row = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                row += self[(i, j)] * y[j];
            }
            acc += x[i].conj() * row;
        }
        acc
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues sorted descending and the matrix whose columns are
/// the corresponding orthonormal eigenvectors. `tol` bounds the accepted
/// entrywise deviation from Hermiticity. The eigenvector basis inside a
/// degenerate eigenspace is an implementation detail.
pub fn hermitian_eigensystem(m: &ComplexMatrix, tol: f64) -> Result<(Vec<f64>, ComplexMatrix)> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let dev = m.hermitian_deviation();
    if dev.is_nan() || dev > tol {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let n = m.rows;
    let mut a = m.hermitize();
    let mut v = ComplexMatrix::identity(n);

    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    let stop = f64::EPSILON * scale;

    for _sweep in 0..100 {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[(p, q)].norm());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let g = a[(p, q)];
                let beta = g.norm();
                if beta <= stop * 1e-2 {
                    continue;
                }
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                let u = g / beta;
                let tau = (alpha - gamma) / (2.0 * beta);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let su = u * s;
                let suc = u.conj() * s;

                // A <- A·R
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c + akq * suc;
                    a[(k, q)] = akq * c - akp * su;
                }
                // A <- R†·A
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c + aqk * su;
                    a[(q, k)] = aqk * c - apk * suc;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                // V <- V·R
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c + vkq * suc;
                    v[(k, q)] = vkq * c - vkp * su;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.partial_cmp(&a[(i, i)].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok((eigenvalues, eigenvectors))
}

/// Thin singular value decomposition `m = U·diag(σ)·V†`.
pub struct Svd {
    /// Left singular vectors, `rows × k` with `k = min(rows, cols)`.
    pub u: ComplexMatrix,
    /// Singular values, descending.
    pub singular_values: Vec<f64>,
    /// Right singular vectors, `cols × k`.
    pub v: ComplexMatrix,
}

/// One-sided Jacobi SVD. Deterministic for fixed input.
pub fn svd(m: &ComplexMatrix) -> Result<Svd> {
    if m.rows >= m.cols {
        svd_tall(m)
    } else {
        let t = svd_tall(&m.adjoint())?;
        Ok(Svd {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        })
    }
}

fn svd_tall(m: &ComplexMatrix) -> Result<Svd> {
    let (rows, cols) = (m.rows, m.cols);
    let mut w = m.clone();
    let mut v = ComplexMatrix::identity(cols);
    let scale = w.max_abs().max(f64::MIN_POSITIVE);
    let stop = f64::EPSILON * scale * scale;

    for _sweep in 0..100 {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let mut hp = 0.0;
                let mut hq = 0.0;
                let mut g = Complex64::new(0.0, 0.0);
                for k in 0..rows {
                    let wp = w[(k, p)];
                    let wq = w[(k, q)];
                    hp += wp.norm_sqr();
                    hq += wq.norm_sqr();
                    g += wp.conj() * wq;
                }
                let gn = g.norm();
                if gn <= stop || gn * gn <= f64::EPSILON * f64::EPSILON * hp * hq {
                    continue;
                }
                rotated = true;
                let u = g / gn;
                let tau = (hp - hq) / (2.0 * gn);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let su = u * s;
                let suc = u.conj() * s;
                for k in 0..rows {
                    let wp = w[(k, p)];
                    let wq = w[(k, q)];
                    w[(k, p)] = wp * c + wq * suc;
                    w[(k, q)] = wq * c - wp * su;
                }
                for k in 0..cols {
                    let vp = v[(k, p)];
                    let vq = v[(k, q)];
                    v[(k, p)] = vp * c + vq * suc;
                    v[(k, q)] = vq * c - vp * su;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut norms: Vec<f64> = (0..cols)
        .map(|j| {
            (0..rows)
                .map(|k| w[(k, j)].norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());
    norms = order.iter().map(|&j| norms[j]).collect();

    let sigma_max = norms.first().copied().unwrap_or(0.0);
    let rank_floor = sigma_max * (rows.max(cols) as f64) * f64::EPSILON;

    let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(cols);
    for (slot, &j) in order.iter().enumerate() {
        if norms[slot] > rank_floor {
            u_cols.push((0..rows).map(|k| w[(k, j)] / norms[slot]).collect());
        } else {
            u_cols.push(vec![Complex64::new(0.0, 0.0); rows]);
        }
    }
    complete_zero_columns(&mut u_cols, rows);

    let u = ComplexMatrix::from_fn(rows, cols, |i, j| u_cols[j][i]);
    let vv = ComplexMatrix::from_fn(cols, cols, |i, j| v[(i, order[j])]);
    Ok(Svd {
        u,
        singular_values: norms,
        v: vv,
    })
}

/// Replaces all-zero columns by standard basis vectors orthogonalised
/// against the rest, keeping the column set orthonormal.
fn complete_zero_columns(columns: &mut [Vec<Complex64>], dim: usize) {
    for idx in 0..columns.len() {
        if columns[idx].iter().any(|z| z.norm_sqr() > 0.0) {
            continue;
        }
        'basis: for b in 0..dim {
            let mut cand = vec![Complex64::new(0.0, 0.0); dim];
            cand[b] = Complex64::new(1.0, 0.0);
            for other in columns.iter() {
                let overlap: Complex64 = other
                    .iter()
                    .zip(cand.iter())
                    .map(|(o, c)| o.conj() * c)
                    .sum();
                for (c, o) in cand.iter_mut().zip(other.iter()) {
                    *c -= overlap * o;
                }
            }
            let norm = cand.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.5 {
                for c in cand.iter_mut() {
                    *c /= norm;
                }
                columns[idx] = cand;
                break 'basis;
            }
        }
    }
}

/// Singular values of `m`, descending.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(svd(m)?.singular_values)
}

/// Trace norm (sum of singular values).
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(m)?.iter().sum())
}

/// Positive semidefinite square root of a Hermitian PSD matrix.
///
/// Eigenvalues in `[-tol, 0)` are clamped to zero; anything below `-tol`
/// is rejected as not PSD.
pub fn psd_sqrt(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let (eigenvalues, vectors) = hermitian_eigensystem(m, tol)?;
    if let Some(&min) = eigenvalues.last() {
        if min < -tol {
            return Err(Error::NotPsd {
                min_eigenvalue: min,
            });
        }
    }
    let sqrt_diag: Vec<f64> = eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let n = m.rows;
    let mut scaled = vectors.clone();
    for j in 0..n {
        for i in 0..n {
            scaled[(i, j)] *= sqrt_diag[j];
        }
    }
    Ok(scaled.mul(&vectors.adjoint()).hermitize())
}
