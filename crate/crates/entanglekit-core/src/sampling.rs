//! Seeded random state generation and Monte Carlo estimation.
//!
//! The generator is ChaCha12 with Box–Muller Gaussians on top; both are
//! fixed algorithms, so a seed pins the sample stream across platforms
//! and releases. Pure states are drawn from the Fubini–Study measure
//! (normalised complex Gaussian vectors), mixed states from the
//! Hilbert–Schmidt measure (ρ = GG†/Tr GG† with square Ginibre G).

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::measures;
use crate::states::{BipartiteDims, DensityMatrix, PureState};

/// Identifier of the sample-stream algorithm, embedded in dataset
/// metadata so outputs stay attributable.
pub const GENERATOR_ID: &str = "chacha12+box-muller/v1";

/// Seeded, platform-stable random stream.
#[derive(Debug, Clone)]
pub struct StateRng {
    seed: u64,
    rng: ChaCha12Rng,
    spare_gaussian: Option<f64>,
}

impl StateRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha12Rng::seed_from_u64(seed),
            spare_gaussian: None,
        }
    }

    /// Seed for a parallel worker: `seed XOR worker_index`, merged back
    /// in worker order.
    pub fn for_worker(seed: u64, worker: u64) -> Self {
        Self::new(seed ^ worker)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(0, 1]`.
    fn next_f64_open(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box–Muller.
    pub fn next_gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare_gaussian.take() {
            return z;
        }
        let r = (-2.0 * self.next_f64_open().ln()).sqrt();
        let phi = core::f64::consts::TAU * self.next_f64();
        self.spare_gaussian = Some(r * phi.sin());
        r * phi.cos()
    }

    /// Standard complex Gaussian (unit variance per complex entry).
    pub fn next_complex_gaussian(&mut self) -> Complex64 {
        Complex64::new(self.next_gaussian(), self.next_gaussian())
            * core::f64::consts::FRAC_1_SQRT_2
    }
}

/// Fubini–Study random pure state: normalised vector of independent
/// standard complex Gaussians.
pub fn random_pure(dims: BipartiteDims, rng: &mut StateRng) -> PureState {
    loop {
        let amps: Vec<Complex64> = (0..dims.total())
            .map(|_| rng.next_complex_gaussian())
            .collect();
        if let Ok(psi) = PureState::new(dims, amps) {
            return psi;
        }
    }
}

/// Hilbert–Schmidt random density matrix: `GG†/Tr(GG†)` with `G` a
/// square complex Ginibre matrix.
pub fn random_density_hs(dims: BipartiteDims, rng: &mut StateRng) -> DensityMatrix {
    let d = dims.total();
    loop {
        let g = ComplexMatrix::from_fn(d, d, |_, _| rng.next_complex_gaussian());
        let gg = g.mul(&g.adjoint()).hermitize();
        let trace = gg.trace().re;
        if trace < 1e-100 {
            continue;
        }
        if let Ok(rho) = DensityMatrix::new(dims, gg.scale_re(1.0 / trace)) {
            return rho;
        }
    }
}

/// Haar-random unitary via QR of a Ginibre matrix (modified
/// Gram–Schmidt, positive diagonal of R).
pub fn random_unitary(n: usize, rng: &mut StateRng) -> ComplexMatrix {
    loop {
        let g = ComplexMatrix::from_fn(n, n, |_, _| rng.next_complex_gaussian());
        if let Some(q) = gram_schmidt(&g) {
            return q;
        }
    }
}

fn gram_schmidt(g: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = g.rows();
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| g.column(j)).collect();
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
        if norm < 1e-12 {
            return None;
        }
        for v in cols[j].iter_mut() {
            *v /= norm;
        }
    }
    Some(ComplexMatrix::from_fn(n, n, |i, j| cols[j][i]))
}

/// Random product pure state `|a⟩ ⊗ |b⟩`.
pub fn random_product_pure(dims: BipartiteDims, rng: &mut StateRng) -> PureState {
    loop {
        let a: Vec<Complex64> = (0..dims.n_a())
            .map(|_| rng.next_complex_gaussian())
            .collect();
        let b: Vec<Complex64> = (0..dims.n_b())
            .map(|_| rng.next_complex_gaussian())
            .collect();
        let mut amps = Vec::with_capacity(dims.total());
        for x in &a {
            for y in &b {
                amps.push(x * y);
            }
        }
        if let Ok(psi) = PureState::new(dims, amps) {
            return psi;
        }
    }
}

/// Explicitly separable state: convex mixture of `terms` random product
/// projectors with a random weight vector.
pub fn random_separable(dims: BipartiteDims, terms: usize, rng: &mut StateRng) -> DensityMatrix {
    let terms = terms.max(1);
    let mut weights: Vec<f64> = (0..terms).map(|_| -rng.next_f64_open().ln()).collect();
    let total: f64 = weights.iter().sum();
    for w in weights.iter_mut() {
        *w /= total;
    }
    let d = dims.total();
    let mut acc = ComplexMatrix::zeros(d, d);
    for &w in &weights {
        let p = random_product_pure(dims, rng).projector();
        acc = acc.add(&p.matrix().scale_re(w));
    }
    DensityMatrix::new(dims, acc.hermitize()).expect("convex mixture of projectors is a state")
}

/// Random point of the probability simplex (flat Dirichlet), sorted
/// descending — a generic Schmidt vector.
pub fn random_schmidt_vector(n: usize, rng: &mut StateRng) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).map(|_| -rng.next_f64_open().ln()).collect();
    let total: f64 = v.iter().sum();
    for x in v.iter_mut() {
        *x /= total;
    }
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// Measures available to the Monte Carlo driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McMeasure {
    Concurrence,
    Negativity,
    EntanglementEntropy,
    Tangle,
    EntanglementOfFormation,
    MaxFidelity,
}

impl McMeasure {
    pub fn id(&self) -> &'static str {
        match self {
            McMeasure::Concurrence => "concurrence",
            McMeasure::Negativity => "negativity",
            McMeasure::EntanglementEntropy => "entropy",
            McMeasure::Tangle => "tangle",
            McMeasure::EntanglementOfFormation => "eof",
            McMeasure::MaxFidelity => "fidelity",
        }
    }

    pub fn parse(id: &str) -> Result<Self> {
        Ok(match id {
            "concurrence" | "c" => McMeasure::Concurrence,
            "negativity" | "nt" => McMeasure::Negativity,
            "entropy" | "e1" => McMeasure::EntanglementEntropy,
            "tangle" | "tau" => McMeasure::Tangle,
            "eof" => McMeasure::EntanglementOfFormation,
            "fidelity" | "fm" => McMeasure::MaxFidelity,
            _ => return Err(Error::UnknownMeasure),
        })
    }
}

/// Sampling ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ensemble {
    /// Fubini–Study random pure states.
    PureFs,
    /// Hilbert–Schmidt random mixed states.
    MixedHs,
}

impl Ensemble {
    pub fn id(&self) -> &'static str {
        match self {
            Ensemble::PureFs => "pure",
            Ensemble::MixedHs => "mixed",
        }
    }

    pub fn parse(id: &str) -> Result<Self> {
        Ok(match id {
            "pure" | "fs" => Ensemble::PureFs,
            "mixed" | "hs" => Ensemble::MixedHs,
            _ => return Err(Error::UnknownMeasure),
        })
    }
}

fn eval_pure(measure: McMeasure, psi: &PureState) -> Result<f64> {
    Ok(match measure {
        McMeasure::Concurrence => measures::concurrence_pure(psi),
        McMeasure::Tangle => measures::tangle(psi),
        McMeasure::EntanglementEntropy | McMeasure::EntanglementOfFormation => {
            measures::entanglement_entropy(psi)
        }
        McMeasure::Negativity => measures::negativity(&psi.projector()),
        McMeasure::MaxFidelity => {
            if !psi.dims().is_two_qubit() {
                return Err(Error::UnknownMeasure);
            }
            measures::max_fidelity_2q(&psi.projector())?
        }
    })
}

fn eval_mixed(measure: McMeasure, rho: &DensityMatrix) -> Result<f64> {
    Ok(match measure {
        McMeasure::Concurrence => measures::concurrence_2q(rho)?,
        McMeasure::Negativity => measures::negativity(rho).max(0.0),
        McMeasure::EntanglementOfFormation => measures::eof_2q(rho)?,
        McMeasure::MaxFidelity => measures::max_fidelity_2q(rho)?,
        McMeasure::Tangle | McMeasure::EntanglementEntropy => return Err(Error::UnknownMeasure),
    })
}

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation divided by √n.
    pub standard_error: f64,
    pub n: usize,
}

/// Individual samples of `measure` over `n` draws from `ensemble`;
/// deterministic per seed. The sample stream underlying [`mc_average`].
pub fn mc_samples(
    measure: McMeasure,
    ensemble: Ensemble,
    dims: BipartiteDims,
    n: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut rng = StateRng::new(seed);
    let mut samples = Vec::with_capacity(n);
    for _ in 0..n {
        samples.push(match ensemble {
            Ensemble::PureFs => eval_pure(measure, &random_pure(dims, &mut rng))?,
            Ensemble::MixedHs => eval_mixed(measure, &random_density_hs(dims, &mut rng))?,
        });
    }
    Ok(samples)
}

/// Summarises a sample vector into mean and standard error.
pub fn estimate_from_samples(samples: &[f64]) -> McEstimate {
    let n = samples.len();
    let sum: f64 = samples.iter().sum();
    let mean = sum / n as f64;
    let variance = if n > 1 {
        samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n as f64 - 1.0)
    } else {
        0.0
    };
    McEstimate {
        mean,
        standard_error: (variance / n as f64).sqrt(),
        n,
    }
}

/// Mean of `measure` over `n` draws from `ensemble`; deterministic per
/// seed.
pub fn mc_average(
    measure: McMeasure,
    ensemble: Ensemble,
    dims: BipartiteDims,
    n: usize,
    seed: u64,
) -> Result<McEstimate> {
    Ok(estimate_from_samples(&mc_samples(
        measure, ensemble, dims, n, seed,
    )?))
}

/// Paired samples of two measures evaluated on the same draws.
pub fn mc_scatter(
    measure_x: McMeasure,
    measure_y: McMeasure,
    ensemble: Ensemble,
    dims: BipartiteDims,
    n: usize,
    seed: u64,
) -> Result<Vec<(f64, f64)>> {
    let mut rng = StateRng::new(seed);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let row = match ensemble {
            Ensemble::PureFs => {
                let psi = random_pure(dims, &mut rng);
                (eval_pure(measure_x, &psi)?, eval_pure(measure_y, &psi)?)
            }
            Ensemble::MixedHs => {
                let rho = random_density_hs(dims, &mut rng);
                (eval_mixed(measure_x, &rho)?, eval_mixed(measure_y, &rho)?)
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

/// Metadata describing a sampling run, serialised alongside datasets.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleMetadata {
    pub generator: String,
    pub seed: u64,
    pub n: usize,
    pub dims: (usize, usize),
}

impl SampleMetadata {
    pub fn new(seed: u64, n: usize, dims: BipartiteDims) -> Self {
        Self {
            generator: String::from(GENERATOR_ID),
            seed,
            n,
            dims: (dims.n_a(), dims.n_b()),
        }
    }
}
