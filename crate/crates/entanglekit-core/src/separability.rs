//! Separability criteria and the aggregate report.
//!
//! Each criterion is a necessary condition: a detection proves
//! entanglement, a pass proves nothing on its own. The aggregate claims
//! `Separable` only when a decisive rule applies (PPT in total dimension
//! ≤ 6, or membership of the separable ball for two qubits).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};
use crate::states::{
    self, partial_trace, partial_transpose, reshuffle, DensityMatrix, Subsystem,
};

/// Uniform violation threshold: evidence beyond this margin counts as a
/// detection, anything inside it as boundary.
pub const VIOLATION_TOL: f64 = 1e-9;

/// Criterion identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionKind {
    Ppt,
    Reduction,
    Majorisation,
    Entropy,
    Reshuffling,
    MehtaBall,
}

impl CriterionKind {
    pub fn name(&self) -> &'static str {
        match self {
            CriterionKind::Ppt => "ppt",
            CriterionKind::Reduction => "reduction",
            CriterionKind::Majorisation => "majorisation",
            CriterionKind::Entropy => "entropy",
            CriterionKind::Reshuffling => "reshuffling",
            CriterionKind::MehtaBall => "mehta-ball",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionOutcome {
    EntanglementDetected,
    Passed,
    NotApplicable,
}

/// Outcome of one criterion with its numeric evidence.
#[derive(Debug, Clone)]
pub struct CriterionVerdict {
    pub criterion: CriterionKind,
    /// Criterion parameter where one exists (Rényi order for the entropy
    /// criterion).
    pub parameter: Option<f64>,
    pub outcome: CriterionOutcome,
    /// Criterion-specific scalar; positive evidence beyond
    /// [`VIOLATION_TOL`] means detection for norm/sum-style criteria,
    /// negative beyond the threshold for eigenvalue-style ones.
    pub evidence: f64,
    pub detail: String,
}

impl CriterionVerdict {
    pub fn detected(&self) -> bool {
        self.outcome == CriterionOutcome::EntanglementDetected
    }

    /// Re-derives the outcome from the stored evidence at a different
    /// violation threshold. Eigenvalue-style criteria detect below `−t`,
    /// norm/sum-style ones above `+t`; the ball test never detects.
    pub fn at_threshold(mut self, t: f64) -> Self {
        if self.outcome == CriterionOutcome::NotApplicable {
            return self;
        }
        let detected = match self.criterion {
            CriterionKind::Ppt | CriterionKind::Reduction => self.evidence < -t,
            CriterionKind::Majorisation | CriterionKind::Entropy | CriterionKind::Reshuffling => {
                self.evidence > t
            }
            CriterionKind::MehtaBall => false,
        };
        self.outcome = if detected {
            CriterionOutcome::EntanglementDetected
        } else {
            CriterionOutcome::Passed
        };
        self
    }
}

fn min_eigenvalue(m: &ComplexMatrix) -> f64 {
    linalg::hermitian_eigensystem(m, 1e-8)
        .expect("criterion operand is Hermitian")
        .0
        .last()
        .copied()
        .unwrap_or(0.0)
}

/// PPT criterion: detection iff the partial transpose has an eigenvalue
/// below `−tol`.
pub fn ppt_criterion(rho: &DensityMatrix) -> CriterionVerdict {
    let min = min_eigenvalue(&partial_transpose(rho, Subsystem::A));
    let detected = min < -VIOLATION_TOL;
    CriterionVerdict {
        criterion: CriterionKind::Ppt,
        parameter: None,
        outcome: if detected {
            CriterionOutcome::EntanglementDetected
        } else {
            CriterionOutcome::Passed
        },
        evidence: min,
        detail: format!("min eigenvalue of partial transpose = {min:.6e}"),
    }
}

/// Reduction criterion: both `ρ_A⊗𝟙 − ρ` and `𝟙⊗ρ_B − ρ` must stay
/// positive.
pub fn reduction_criterion(rho: &DensityMatrix) -> CriterionVerdict {
    let dims = rho.dims();
    let rho_a = partial_trace(rho, Subsystem::B);
    let rho_b = partial_trace(rho, Subsystem::A);
    let lhs_a = rho_a
        .kron(&ComplexMatrix::identity(dims.n_b()))
        .sub(rho.matrix());
    let lhs_b = ComplexMatrix::identity(dims.n_a())
        .kron(&rho_b)
        .sub(rho.matrix());
    let min = min_eigenvalue(&lhs_a).min(min_eigenvalue(&lhs_b));
    let detected = min < -VIOLATION_TOL;
    CriterionVerdict {
        criterion: CriterionKind::Reduction,
        parameter: None,
        outcome: if detected {
            CriterionOutcome::EntanglementDetected
        } else {
            CriterionOutcome::Passed
        },
        evidence: min,
        detail: format!("min eigenvalue over both reduction operators = {min:.6e}"),
    }
}

fn descending_clamped_spectrum(m: &ComplexMatrix) -> Vec<f64> {
    linalg::hermitian_eigensystem(m, 1e-8)
        .expect("criterion operand is Hermitian")
        .0
        .iter()
        .map(|&l| l.max(0.0))
        .collect()
}

/// Largest violation of `λ(ρ) ≺ λ(σ)` over partial sums, positive when
/// the global spectrum is less disordered than `σ`'s.
fn majorisation_excess(global: &[f64], reduced: &[f64]) -> f64 {
    let len = global.len().max(reduced.len());
    let mut excess: f64 = f64::NEG_INFINITY;
    let mut sum_g = 0.0;
    let mut sum_r = 0.0;
    for k in 0..len {
        sum_g += global.get(k).copied().unwrap_or(0.0);
        sum_r += reduced.get(k).copied().unwrap_or(0.0);
        excess = excess.max(sum_g - sum_r);
    }
    excess
}

/// Majorisation criterion: separable states satisfy `λ(ρ) ≺ λ(ρ_A)` and
/// `λ(ρ) ≺ λ(ρ_B)` (zero-padded).
pub fn majorisation_criterion(rho: &DensityMatrix) -> CriterionVerdict {
    let global = rho
        .spectrum()
        .iter()
        .map(|&l| l.max(0.0))
        .collect::<Vec<_>>();
    let spec_a = descending_clamped_spectrum(&partial_trace(rho, Subsystem::B));
    let spec_b = descending_clamped_spectrum(&partial_trace(rho, Subsystem::A));
    let excess = majorisation_excess(&global, &spec_a).max(majorisation_excess(&global, &spec_b));
    let detected = excess > VIOLATION_TOL;
    CriterionVerdict {
        criterion: CriterionKind::Majorisation,
        parameter: None,
        outcome: if detected {
            CriterionOutcome::EntanglementDetected
        } else {
            CriterionOutcome::Passed
        },
        evidence: excess,
        detail: format!("max partial-sum excess over both reductions = {excess:.6e}"),
    }
}

/// Entropy criterion at Rényi order `q`: separable states satisfy
/// `S_q(ρ) ≥ S_q(ρ_A)` and `S_q(ρ) ≥ S_q(ρ_B)`.
pub fn entropy_criterion(rho: &DensityMatrix, q: f64) -> Result<CriterionVerdict> {
    let global = states::entropies(rho, q)?;
    let s_a = states::matrix_entropy(&partial_trace(rho, Subsystem::B), q)?;
    let s_b = states::matrix_entropy(&partial_trace(rho, Subsystem::A), q)?;
    let deficit = (s_a - global).max(s_b - global);
    let detected = deficit > VIOLATION_TOL;
    Ok(CriterionVerdict {
        criterion: CriterionKind::Entropy,
        parameter: Some(q),
        outcome: if detected {
            CriterionOutcome::EntanglementDetected
        } else {
            CriterionOutcome::Passed
        },
        evidence: deficit,
        detail: format!("max S_q(reduced) − S_q(ρ) at q = {q} is {deficit:.6e}"),
    })
}

/// Reshuffling (realignment) criterion: separable states keep
/// `‖ρ^R‖_Tr ≤ 1`.
pub fn reshuffling_criterion(rho: &DensityMatrix) -> CriterionVerdict {
    let excess = linalg::trace_norm(&reshuffle(rho)).expect("reshuffled matrix is nonempty") - 1.0;
    let detected = excess > VIOLATION_TOL;
    CriterionVerdict {
        criterion: CriterionKind::Reshuffling,
        parameter: None,
        outcome: if detected {
            CriterionOutcome::EntanglementDetected
        } else {
            CriterionOutcome::Passed
        },
        evidence: excess,
        detail: format!("trace norm of reshuffled state exceeds 1 by {excess:.6e}"),
    }
}

/// Membership in the maximal ball around `𝟙/d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallMembership {
    InsideSeparableBall,
    Outside,
}

/// Purity test for the maximal inscribed ball: inside iff
/// `1/Tr ρ² ≥ N² − 1`. Every state inside is PPT; for two qubits inside
/// implies separable. Requires `n_a = n_b`.
pub fn mehta_ball_test(rho: &DensityMatrix) -> Result<BallMembership> {
    let dims = rho.dims();
    if dims.n_a() != dims.n_b() {
        return Err(Error::NotApplicable);
    }
    let n = dims.n_a();
    let participation = 1.0 / rho.purity();
    Ok(
        if participation >= (n * n - 1) as f64 - 1e-12 {
            BallMembership::InsideSeparableBall
        } else {
            BallMembership::Outside
        },
    )
}

/// Absolute-separability classification of a two-qubit spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbsoluteSeparability {
    /// `C* = x₁ − x₃ − 2√(x₂x₄)`; nonpositive means absolutely
    /// separable.
    pub c_star: f64,
    pub absolutely_separable: bool,
}

/// Tests `x₁ − x₃ − 2√(x₂x₄) ≤ 0` on a descending two-qubit spectrum.
pub fn absolute_separability_2q(spectrum: &[f64]) -> Result<AbsoluteSeparability> {
    if spectrum.len() != 4 {
        return Err(Error::MalformedSpectrum);
    }
    let sum: f64 = spectrum.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::MalformedSpectrum);
    }
    for w in spectrum.windows(2) {
        if w[1] > w[0] + 1e-12 {
            return Err(Error::MalformedSpectrum);
        }
    }
    if spectrum.iter().any(|&x| x < -1e-12) {
        return Err(Error::MalformedSpectrum);
    }
    let c_star =
        spectrum[0] - spectrum[2] - 2.0 * (spectrum[1].max(0.0) * spectrum[3].max(0.0)).sqrt();
    Ok(AbsoluteSeparability {
        c_star,
        absolutely_separable: c_star <= 1e-12,
    })
}

/// Position of a PPT two-qubit state relative to the separable boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMembership {
    InteriorSeparable,
    BoundarySeparable,
    /// The state is NPT, hence entangled and not in the separable set.
    NotOnSeparableBoundaryOrEntangled,
}

/// Two-qubit boundary test: a PPT state sits on the separable boundary
/// iff `det ρ = 0` or `det ρ^{T_A} = 0`.
pub fn boundary_membership_2q(rho: &DensityMatrix) -> Result<BoundaryMembership> {
    if !rho.dims().is_two_qubit() {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    let pt_spectrum = linalg::hermitian_eigensystem(&partial_transpose(rho, Subsystem::A), 1e-8)
        .expect("partial transpose is Hermitian")
        .0;
    if pt_spectrum.last().copied().unwrap_or(0.0) < -VIOLATION_TOL {
        return Ok(BoundaryMembership::NotOnSeparableBoundaryOrEntangled);
    }
    let det_rho: f64 = rho.spectrum().iter().product();
    let det_pt: f64 = pt_spectrum.iter().product();
    if det_rho.abs() <= 1e-12 || det_pt.abs() <= 1e-12 {
        Ok(BoundaryMembership::BoundarySeparable)
    } else {
        Ok(BoundaryMembership::InteriorSeparable)
    }
}

/// Hermitian unit-trace witness operator.
#[derive(Debug, Clone)]
pub struct WitnessOperator {
    matrix: ComplexMatrix,
}

impl WitnessOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let dev = matrix.hermitian_deviation();
        if dev.is_nan() || dev > 1e-10 {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > 1e-8 {
            return Err(Error::TraceNotUnit { trace });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// `Tr(ρW)` and whether it certifies entanglement (`< −1e-12`).
pub fn witness_expectation(rho: &DensityMatrix, w: &WitnessOperator) -> Result<(f64, bool)> {
    if w.matrix.rows() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: w.matrix.rows(),
        });
    }
    let value = rho.matrix().mul(&w.matrix).trace().re;
    Ok((value, value < -1e-12))
}

/// Criterion selection for [`aggregate_report`].
#[derive(Debug, Clone)]
pub struct CriterionConfig {
    pub ppt: bool,
    pub reduction: bool,
    pub majorisation: bool,
    /// Rényi orders for the entropy criterion.
    pub entropy_orders: Vec<f64>,
    pub reshuffling: bool,
    /// Separable-ball membership (square systems only).
    pub mehta_ball: bool,
    /// Violation threshold applied to all verdicts.
    pub threshold: f64,
}

impl Default for CriterionConfig {
    fn default() -> Self {
        Self {
            ppt: true,
            reduction: true,
            majorisation: true,
            entropy_orders: vec![0.5, 1.0, 2.0, f64::INFINITY],
            reshuffling: true,
            mehta_ball: true,
            threshold: VIOLATION_TOL,
        }
    }
}

/// Joint classification after running the selected criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aggregate {
    Separable,
    Entangled,
    Inconclusive,
}

/// Verdict list plus the aggregate classification.
#[derive(Debug, Clone)]
pub struct SeparabilityReport {
    pub verdicts: Vec<CriterionVerdict>,
    pub aggregate: Aggregate,
}

/// Runs the selected criteria in declared order and combines them.
/// `Entangled` on any detection; `Separable` only from a decisive rule:
/// PPT passing with total dimension ≤ 6, or two-qubit separable-ball
/// membership.
pub fn aggregate_report(rho: &DensityMatrix, config: &CriterionConfig) -> SeparabilityReport {
    let mut verdicts = Vec::new();
    let mut ppt_passed = false;
    let mut inside_ball_2q = false;
    let t = config.threshold;

    if config.ppt {
        let v = ppt_criterion(rho).at_threshold(t);
        ppt_passed = v.outcome == CriterionOutcome::Passed;
        verdicts.push(v);
    }
    if config.reduction {
        verdicts.push(reduction_criterion(rho).at_threshold(t));
    }
    if config.majorisation {
        verdicts.push(majorisation_criterion(rho).at_threshold(t));
    }
    for &q in &config.entropy_orders {
        match entropy_criterion(rho, q) {
            Ok(v) => verdicts.push(v.at_threshold(t)),
            Err(_) => verdicts.push(CriterionVerdict {
                criterion: CriterionKind::Entropy,
                parameter: Some(q),
                outcome: CriterionOutcome::NotApplicable,
                evidence: 0.0,
                detail: String::from("invalid Rényi order"),
            }),
        }
    }
    if config.reshuffling {
        verdicts.push(reshuffling_criterion(rho).at_threshold(t));
    }
    if config.mehta_ball {
        let dims = rho.dims();
        match mehta_ball_test(rho) {
            Ok(membership) => {
                let inside = membership == BallMembership::InsideSeparableBall;
                inside_ball_2q = inside && dims.is_two_qubit();
                let margin = 1.0 / rho.purity() - ((dims.n_a() * dims.n_a()) as f64 - 1.0);
                verdicts.push(CriterionVerdict {
                    criterion: CriterionKind::MehtaBall,
                    parameter: None,
                    outcome: CriterionOutcome::Passed,
                    evidence: margin,
                    detail: if inside {
                        String::from("inside the maximal separable ball")
                    } else {
                        String::from("outside the maximal ball")
                    },
                });
            }
            Err(_) => verdicts.push(CriterionVerdict {
                criterion: CriterionKind::MehtaBall,
                parameter: None,
                outcome: CriterionOutcome::NotApplicable,
                evidence: 0.0,
                detail: String::from("requires equal subsystem dimensions"),
            }),
        }
    }

    let any_detection = verdicts.iter().any(CriterionVerdict::detected);
    let aggregate = if any_detection {
        Aggregate::Entangled
    } else if (ppt_passed && rho.dim() <= 6) || inside_ball_2q {
        Aggregate::Separable
    } else {
        Aggregate::Inconclusive
    };
    SeparabilityReport {
        verdicts,
        aggregate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell, tiles_upb_state, werner, BellKind, BipartiteDims, PureState};
    use num_complex::Complex64;

    fn dims22() -> BipartiteDims {
        BipartiteDims::new(2, 2).unwrap()
    }

    fn ket00() -> PureState {
        PureState::new(
            dims22(),
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn ppt_on_werner_family() {
        let v = ppt_criterion(&werner(2, 0.5).unwrap());
        assert!(v.detected());
        assert!((v.evidence + 0.125).abs() < 1e-10);

        let v = ppt_criterion(&werner(2, 1.0 / 3.0).unwrap());
        assert!(!v.detected());
        assert!(v.evidence.abs() < 1e-10);

        let v = ppt_criterion(&tiles_upb_state());
        assert!(!v.detected());
        assert!(v.evidence > -1e-10);
    }

    #[test]
    fn reduction_examples() {
        let v = reduction_criterion(&bell(BellKind::PhiPlus).projector());
        assert!(v.detected());
        assert!((v.evidence + 0.5).abs() < 1e-10);

        // product state passes
        let v = reduction_criterion(&ket00().projector());
        assert!(!v.detected());

        // weaker than PPT on the tiles state
        let v = reduction_criterion(&tiles_upb_state());
        assert!(!v.detected());
    }

    #[test]
    fn majorisation_examples() {
        let v = majorisation_criterion(&bell(BellKind::PhiPlus).projector());
        assert!(v.detected());
        assert!((v.evidence - 0.5).abs() < 1e-10);

        let mixed = DensityMatrix::new(dims22(), ComplexMatrix::identity(4).scale_re(0.25)).unwrap();
        assert!(!majorisation_criterion(&mixed).detected());

        // Werner x = 0.9: largest eigenvalue (1+3x)/4 = 0.925 > 1/2
        let v = majorisation_criterion(&werner(2, 0.9).unwrap());
        assert!(v.detected());
        assert!((v.evidence - 0.425).abs() < 1e-9);
    }

    #[test]
    fn entropy_examples() {
        let v = entropy_criterion(&bell(BellKind::PsiPlus).projector(), 1.0).unwrap();
        assert!(v.detected());
        assert!((v.evidence - 2.0_f64.ln()).abs() < 1e-9);

        // product states pass at all orders
        let product = ket00().projector();
        for q in [0.5, 1.0, 2.0, f64::INFINITY] {
            assert!(!entropy_criterion(&product, q).unwrap().detected());
        }
    }

    #[test]
    fn reshuffling_examples() {
        let v = reshuffling_criterion(&bell(BellKind::PhiPlus).projector());
        assert!(v.detected());
        assert!((v.evidence - 1.0).abs() < 1e-10);

        let v = reshuffling_criterion(&ket00().projector());
        assert!(!v.detected());
        assert!(v.evidence <= 1e-12);
    }

    #[test]
    fn mehta_ball_examples() {
        let mixed = DensityMatrix::new(dims22(), ComplexMatrix::identity(4).scale_re(0.25)).unwrap();
        assert_eq!(
            mehta_ball_test(&mixed).unwrap(),
            BallMembership::InsideSeparableBall
        );
        assert_eq!(
            mehta_ball_test(&bell(BellKind::PhiPlus).projector()).unwrap(),
            BallMembership::Outside
        );
        // boundary Werner state x = 1/3: purity exactly 1/3
        let w = werner(2, 1.0 / 3.0).unwrap();
        assert!((w.purity() - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(
            mehta_ball_test(&w).unwrap(),
            BallMembership::InsideSeparableBall
        );
        // non-square systems are out of scope
        let rect = DensityMatrix::new(
            BipartiteDims::new(2, 3).unwrap(),
            ComplexMatrix::identity(6).scale_re(1.0 / 6.0),
        )
        .unwrap();
        assert!(matches!(mehta_ball_test(&rect), Err(Error::NotApplicable)));
    }

    #[test]
    fn absolute_separability_examples() {
        let r = absolute_separability_2q(&[0.25, 0.25, 0.25, 0.25]).unwrap();
        assert!(r.absolutely_separable);
        assert!((r.c_star + 0.5).abs() < 1e-12);

        let r = absolute_separability_2q(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(!r.absolutely_separable);
        assert!((r.c_star - 1.0).abs() < 1e-12);

        // Werner(1/3) spectrum (1/2, 1/6, 1/6, 1/6): C* = 0, boundary
        let r = absolute_separability_2q(&[0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0]).unwrap();
        assert!(r.c_star.abs() < 1e-12);
        assert!(r.absolutely_separable);

        assert!(absolute_separability_2q(&[0.5, 0.5]).is_err());
        assert!(absolute_separability_2q(&[0.1, 0.2, 0.3, 0.4]).is_err());
    }

    #[test]
    fn boundary_membership_examples() {
        // Werner(1/3): det ρ^{T_A} = 0
        let w = werner(2, 1.0 / 3.0).unwrap();
        assert_eq!(
            boundary_membership_2q(&w).unwrap(),
            BoundaryMembership::BoundarySeparable
        );
        let mixed = DensityMatrix::new(dims22(), ComplexMatrix::identity(4).scale_re(0.25)).unwrap();
        assert_eq!(
            boundary_membership_2q(&mixed).unwrap(),
            BoundaryMembership::InteriorSeparable
        );
        // rank-deficient separable state: det ρ = 0
        assert_eq!(
            boundary_membership_2q(&ket00().projector()).unwrap(),
            BoundaryMembership::BoundarySeparable
        );
        // NPT input
        assert_eq!(
            boundary_membership_2q(&bell(BellKind::PhiPlus).projector()).unwrap(),
            BoundaryMembership::NotOnSeparableBoundaryOrEntangled
        );
    }

    #[test]
    fn witness_examples() {
        // W = 𝟙/2 − |φ⁺⟩⟨φ⁺| has trace 1 and detects the Bell state
        let p = bell(BellKind::PhiPlus).projector();
        let w = WitnessOperator::new(
            ComplexMatrix::identity(4).scale_re(0.5).sub(p.matrix()),
        )
        .unwrap();
        let (value, detected) = witness_expectation(&p, &w).unwrap();
        assert!(detected);
        assert!((value + 0.5).abs() < 1e-12);

        let mixed = DensityMatrix::new(dims22(), ComplexMatrix::identity(4).scale_re(0.25)).unwrap();
        let (value, detected) = witness_expectation(&mixed, &w).unwrap();
        assert!(!detected);
        assert!(value >= 0.0);

        // trivial witness 𝟙/d
        let trivial = WitnessOperator::new(ComplexMatrix::identity(4).scale_re(0.25)).unwrap();
        let (value, detected) = witness_expectation(&p, &trivial).unwrap();
        assert!(!detected);
        assert!((value - 0.25).abs() < 1e-12);

        // dimension mismatch and rejected operators
        let small = WitnessOperator::new(ComplexMatrix::identity(2).scale_re(0.5)).unwrap();
        assert!(matches!(
            witness_expectation(&p, &small),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(WitnessOperator::new(ComplexMatrix::identity(4)).is_err());
    }

    #[test]
    fn boundary_test_rejects_other_dimensions() {
        let rect = DensityMatrix::new(
            BipartiteDims::new(2, 3).unwrap(),
            ComplexMatrix::identity(6).scale_re(1.0 / 6.0),
        )
        .unwrap();
        assert!(matches!(
            boundary_membership_2q(&rect),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn aggregate_decisions() {
        let config = CriterionConfig::default();
        assert_eq!(
            aggregate_report(&werner(2, 0.5).unwrap(), &config).aggregate,
            Aggregate::Entangled
        );
        assert_eq!(
            aggregate_report(&werner(2, 0.2).unwrap(), &config).aggregate,
            Aggregate::Separable
        );
        // tiles state with PPT only: d = 9 > 6, nothing decisive
        let ppt_only = CriterionConfig {
            reduction: false,
            majorisation: false,
            entropy_orders: vec![],
            reshuffling: false,
            mehta_ball: false,
            ..CriterionConfig::default()
        };
        assert_eq!(
            aggregate_report(&tiles_upb_state(), &ppt_only).aggregate,
            Aggregate::Inconclusive
        );
    }
}
