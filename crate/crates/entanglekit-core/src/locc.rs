//! Pure-state LOCC convertibility.
//!
//! Deterministic convertibility is ordered by Schmidt-vector
//! majorisation; the probabilistic rate is Vidal's tail-sum ratio.
//! Partial-sum ties within `1e-9` count as satisfied so that boundary
//! pairs (equal vectors) classify as convertible.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::states::{schmidt, PureState};

const TIE_TOL: f64 = 1e-9;

/// Descending probability vector of Schmidt coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtVector {
    values: Vec<f64>,
}

impl SchmidtVector {
    /// Validates and sorts a coefficient vector (descending). Entries in
    /// `[-1e-12, 0)` are clamped to zero; the sum must be 1 within 1e-9.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        for v in values.iter_mut() {
            if !v.is_finite() || *v < -1e-12 {
                return Err(Error::MalformedSpectrum);
            }
            *v = v.max(0.0);
        }
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::MalformedSpectrum);
        }
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(Self { values })
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self::new(schmidt(psi).coefficients).expect("Schmidt coefficients form a probability vector")
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of coefficients above `1e-12`.
    pub fn rank(&self) -> usize {
        self.values.iter().filter(|&&l| l > 1e-12).count()
    }
}

/// Tests `b ≺ a`: every partial sum of `a` dominates the corresponding
/// partial sum of `b` (zero-padded to common length).
pub fn majorizes(a: &SchmidtVector, b: &SchmidtVector) -> bool {
    let len = a.len().max(b.len());
    let mut sum_a = 0.0;
    let mut sum_b = 0.0;
    for k in 0..len {
        sum_a += a.values.get(k).copied().unwrap_or(0.0);
        sum_b += b.values.get(k).copied().unwrap_or(0.0);
        if sum_a < sum_b - TIE_TOL {
            return false;
        }
    }
    true
}

/// Deterministic LOCC convertibility of Schmidt vectors:
/// `source → target` iff `λ_source ≺ λ_target`.
pub fn nielsen_convertible_vectors(source: &SchmidtVector, target: &SchmidtVector) -> bool {
    majorizes(target, source)
}

/// Deterministic LOCC convertibility `ψ → φ` (Nielsen's theorem).
pub fn nielsen_convertible(psi: &PureState, phi: &PureState) -> bool {
    nielsen_convertible_vectors(&SchmidtVector::from_pure(psi), &SchmidtVector::from_pure(phi))
}

/// Relation of the target state to the source under LOCC.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConversionRelation {
    /// `source → target` deterministically (target lies in the future).
    Future,
    /// `target → source` deterministically (target lies in the past).
    Past,
    /// Both directions work: equal Schmidt vectors.
    Interconvertible,
    /// Neither direction works.
    Incomparable,
}

impl ConversionRelation {
    pub fn name(&self) -> &'static str {
        match self {
            ConversionRelation::Future => "future",
            ConversionRelation::Past => "past",
            ConversionRelation::Interconvertible => "interconvertible",
            ConversionRelation::Incomparable => "incomparable",
        }
    }
}

/// Relation plus the optimal conversion probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConversionReport {
    pub relation: ConversionRelation,
    pub p_c: f64,
}

/// Classifies the pair and computes Vidal's probability.
pub fn classify_vectors(source: &SchmidtVector, target: &SchmidtVector) -> ConversionReport {
    let forward = nielsen_convertible_vectors(source, target);
    let backward = nielsen_convertible_vectors(target, source);
    let relation = match (forward, backward) {
        (true, true) => ConversionRelation::Interconvertible,
        (true, false) => ConversionRelation::Future,
        (false, true) => ConversionRelation::Past,
        (false, false) => ConversionRelation::Incomparable,
    };
    ConversionReport {
        relation,
        p_c: vidal_probability_vectors(source, target),
    }
}

/// Classifies a pure-state pair under LOCC.
pub fn classify(psi: &PureState, phi: &PureState) -> ConversionReport {
    classify_vectors(&SchmidtVector::from_pure(psi), &SchmidtVector::from_pure(phi))
}

/// Vidal's optimal conversion probability:
/// `p_c = min_k (Σ_{i≥k} λ_ψ↓) / (Σ_{i≥k} λ_φ↓)`, clamped to `[0, 1]`.
/// Zero when the target rank exceeds the source rank.
pub fn vidal_probability_vectors(source: &SchmidtVector, target: &SchmidtVector) -> f64 {
    let len = source.len().max(target.len());
    let tail = |v: &SchmidtVector, k: usize| -> f64 {
        (k..len).map(|i| v.values.get(i).copied().unwrap_or(0.0)).sum()
    };
    let mut p = 1.0_f64;
    for k in 0..len {
        let t_target = tail(target, k);
        if t_target <= 1e-15 {
            // both tails empty from here on
            continue;
        }
        p = p.min(tail(source, k) / t_target);
    }
    p.clamp(0.0, 1.0)
}

/// Vidal probability for a pure-state pair.
pub fn vidal_probability(psi: &PureState, phi: &PureState) -> f64 {
    vidal_probability_vectors(&SchmidtVector::from_pure(psi), &SchmidtVector::from_pure(phi))
}
