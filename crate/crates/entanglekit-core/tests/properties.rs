//! Property tests over arbitrary inputs.

use entanglekit_core::linalg::{self, ComplexMatrix};
use entanglekit_core::locc::{self, SchmidtVector};
use entanglekit_core::states::{self, BipartiteDims, DensityMatrix, PureState};
use num_complex::Complex64;
use proptest::prelude::*;

fn complex_entry() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix(n: usize, m: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec(complex_entry(), n * m)
        .prop_map(move |data| ComplexMatrix::new(n, m, data).unwrap())
}

fn hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(n, n).prop_map(|g| g.add(&g.adjoint()).scale_re(0.5))
}

fn density(dims: BipartiteDims) -> impl Strategy<Value = DensityMatrix> {
    let d = dims.total();
    matrix(d, d).prop_map(move |g| {
        let gg = g.mul(&g.adjoint()).hermitize();
        let tr = gg.trace().re.max(1e-6);
        let mixed = gg
            .scale_re(0.95 / tr)
            .add(&ComplexMatrix::identity(d).scale_re(0.05 / d as f64));
        DensityMatrix::new(dims, mixed.hermitize()).unwrap()
    })
}

fn probability_vector(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(1e-3..1.0f64, n).prop_map(|mut v| {
        let total: f64 = v.iter().sum();
        for x in v.iter_mut() {
            *x /= total;
        }
        v
    })
}

fn dims22() -> BipartiteDims {
    BipartiteDims::new(2, 2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigensystem_reconstructs_hermitian(h in hermitian(5)) {
        let (vals, vecs) = linalg::hermitian_eigensystem(&h, 1e-9).unwrap();
        let mut scaled = vecs.clone();
        for j in 0..5 {
            for i in 0..5 {
                scaled[(i, j)] *= vals[j];
            }
        }
        let err = scaled.mul(&vecs.adjoint()).sub(&h).frobenius_norm();
        prop_assert!(err <= 1e-9 * (1.0 + h.frobenius_norm()));
        for w in vals.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn singular_values_are_transpose_invariant(m in matrix(3, 5)) {
        let s = linalg::singular_values(&m).unwrap();
        let st = linalg::singular_values(&m.transpose()).unwrap();
        let sa = linalg::singular_values(&m.adjoint()).unwrap();
        for i in 0..3 {
            prop_assert!((s[i] - st[i]).abs() < 1e-10);
            prop_assert!((s[i] - sa[i]).abs() < 1e-10);
        }
    }

    #[test]
    fn trace_norm_triangle_inequality(a in matrix(4, 4), b in matrix(4, 4)) {
        let lhs = linalg::trace_norm(&a.add(&b)).unwrap();
        let rhs = linalg::trace_norm(&a).unwrap() + linalg::trace_norm(&b).unwrap();
        prop_assert!(lhs <= rhs + 1e-9);
    }

    #[test]
    fn partial_transpose_preserves_spectral_pairing(rho in density(BipartiteDims::new(2, 2).unwrap())) {
        let ta = states::partial_transpose(&rho, states::Subsystem::A);
        let tb = states::partial_transpose(&rho, states::Subsystem::B);
        prop_assert!((ta.trace().re - 1.0).abs() < 1e-10);
        prop_assert!(ta.hermitian_deviation() < 1e-10);
        let sa = linalg::hermitian_eigensystem(&ta, 1e-9).unwrap().0;
        let sb = linalg::hermitian_eigensystem(&tb, 1e-9).unwrap().0;
        for (x, y) in sa.iter().zip(sb.iter()) {
            prop_assert!((x - y).abs() < 1e-10);
        }
        // Frobenius norm is preserved
        prop_assert!((ta.frobenius_norm() - rho.matrix().frobenius_norm()).abs() < 1e-10);
    }

    #[test]
    fn reshuffling_is_linear(
        a in density(BipartiteDims::new(2, 2).unwrap()),
        b in density(BipartiteDims::new(2, 2).unwrap()),
        t in 0.0..1.0f64,
    ) {
        let mix = DensityMatrix::new(
            dims22(),
            a.matrix().scale_re(t).add(&b.matrix().scale_re(1.0 - t)),
        ).unwrap();
        let lhs = states::reshuffle(&mix);
        let rhs = states::reshuffle(&a).scale_re(t).add(&states::reshuffle(&b).scale_re(1.0 - t));
        prop_assert!(lhs.sub(&rhs).max_abs() < 1e-12);
    }

    #[test]
    fn renyi_entropy_is_nonincreasing_in_q(spec in probability_vector(4)) {
        let orders = [0.0, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0, f64::INFINITY];
        let mut previous = f64::INFINITY;
        for &q in &orders {
            let s = states::renyi_of_spectrum(&spec, q).unwrap();
            prop_assert!(s <= previous + 1e-9, "S_{q} = {s} > {previous}");
            previous = s;
        }
    }

    #[test]
    fn majorization_is_reflexive_and_bounded(v in probability_vector(5)) {
        let mut sorted = v.clone();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let sv = SchmidtVector::new(sorted).unwrap();
        prop_assert!(locc::majorizes(&sv, &sv));
        let n = sv.len();
        let uniform = SchmidtVector::new(vec![1.0 / n as f64; n]).unwrap();
        let mut peak = vec![0.0; n];
        peak[0] = 1.0;
        let peak = SchmidtVector::new(peak).unwrap();
        prop_assert!(locc::majorizes(&sv, &uniform));
        prop_assert!(locc::majorizes(&peak, &sv));
    }

    #[test]
    fn vidal_probability_is_consistent(
        a in probability_vector(4),
        b in probability_vector(4),
    ) {
        let a = SchmidtVector::new(a).unwrap();
        let b = SchmidtVector::new(b).unwrap();
        let p = locc::vidal_probability_vectors(&a, &b);
        prop_assert!((0.0..=1.0).contains(&p));
        prop_assert_eq!(p >= 1.0 - 1e-9, locc::nielsen_convertible_vectors(&a, &b));
    }

    #[test]
    fn schmidt_reconstruction_for_arbitrary_states(
        amps in proptest::collection::vec(complex_entry(), 6),
    ) {
        prop_assume!(amps.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3);
        let psi = PureState::new(BipartiteDims::new(2, 3).unwrap(), amps).unwrap();
        let s = states::schmidt(&psi);
        prop_assert!((s.coefficients.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        let mut rebuilt = [Complex64::new(0.0, 0.0); 6];
        for (k, coeff) in s.coefficients.iter().enumerate() {
            let w = coeff.max(0.0).sqrt();
            for i in 0..2 {
                for j in 0..3 {
                    rebuilt[i * 3 + j] += s.left_vectors[(i, k)] * s.right_vectors[(j, k)] * w;
                }
            }
        }
        let overlap: Complex64 = rebuilt
            .iter()
            .zip(psi.amplitudes())
            .map(|(r, a)| r.conj() * a)
            .sum();
        prop_assert!((overlap.norm() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn psd_sqrt_squares_to_input(g in matrix(4, 4)) {
        let m = g.mul(&g.adjoint()).hermitize();
        let s = linalg::psd_sqrt(&m, 1e-9).unwrap();
        prop_assert!(s.hermitian_deviation() < 1e-10);
        let err = s.mul(&s).sub(&m).max_abs();
        prop_assert!(err <= 1e-8 * (1.0 + m.max_abs()));
    }

    #[test]
    fn concurrence_between_zero_and_one(rho in density(BipartiteDims::new(2, 2).unwrap())) {
        let c = entanglekit_core::measures::concurrence_2q(&rho).unwrap();
        prop_assert!((0.0..=1.0 + 1e-9).contains(&c));
        let nt = entanglekit_core::measures::negativity(&rho);
        prop_assert!(nt >= -1e-12);
        prop_assert!(c >= nt - 1e-9);
    }
}
