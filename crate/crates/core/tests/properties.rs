use jacobi_core::eig::default_tol;
use jacobi_core::{
    build_a, build_kac, build_w, eigenvalues, gershgorin_bounds, last_components, negcount,
    reconstruct_jacobian, validate_interlacing, SymmetricTridiagonal, TestMatrixSpec, Variant,
};
use proptest::prelude::*;

fn tridiagonal(max_order: usize) -> impl Strategy<Value = SymmetricTridiagonal> {
    (1..=max_order).prop_flat_map(|n| {
        (
            prop::collection::vec(-10.0f64..10.0, n),
            prop::collection::vec(-5.0f64..5.0, n - 1),
        )
            .prop_map(|(d, e)| SymmetricTridiagonal::new(d, e).unwrap())
    })
}

fn jacobian(max_order: usize) -> impl Strategy<Value = SymmetricTridiagonal> {
    (2..=max_order).prop_flat_map(|n| {
        (
            prop::collection::vec(-10.0f64..10.0, n),
            prop::collection::vec((0.1f64..5.0, any::<bool>()), n - 1),
        )
            .prop_map(|(d, e)| {
                let e = e.into_iter().map(|(m, s)| if s { m } else { -m }).collect();
                SymmetricTridiagonal::new(d, e).unwrap()
            })
    })
}

/// Sorted strictly increasing sequence built from positive gaps.
fn interlaced_pair(max_n: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2..=max_n).prop_flat_map(|n| {
        (
            -50.0f64..50.0,
            prop::collection::vec(0.2f64..3.0, 2 * n - 2),
        )
            .prop_map(move |(start, gaps)| {
                let mut x = start;
                let mut merged = vec![x];
                for g in gaps {
                    x += g;
                    merged.push(x);
                }
                let lambda = merged.iter().step_by(2).copied().collect();
                let mu = merged.iter().skip(1).step_by(2).copied().collect();
                (lambda, mu)
            })
    })
}

proptest! {
    #[test]
    fn negcount_is_monotone(t in tridiagonal(10), xs in prop::collection::vec(-30.0f64..30.0, 2..20)) {
        let mut xs = xs;
        xs.sort_by(f64::total_cmp);
        let counts: Vec<usize> = xs.iter().map(|&x| negcount(&t, x)).collect();
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        let (lo, hi) = gershgorin_bounds(&t);
        prop_assert_eq!(negcount(&t, lo), 0);
        let eps = 1e-9 * (1.0 + hi.abs());
        prop_assert_eq!(negcount(&t, hi + eps), t.order());
    }

    #[test]
    fn jacobian_spectra_strictly_interlace(t in jacobian(12)) {
        let tol = 1e-13 * (1.0 + t.diag().iter().chain(t.offdiag()).fold(0.0f64, |m, x| m.max(x.abs())));
        let full = eigenvalues(&t, tol).unwrap();
        let sub = eigenvalues(&t.leading_principal_submatrix().unwrap(), tol).unwrap();
        for (i, m) in sub.values().iter().enumerate() {
            prop_assert!(full.values()[i] - tol <= *m && *m <= full.values()[i + 1] + tol);
        }
    }

    #[test]
    fn sign_changes_keep_both_spectra(t in jacobian(10), m in 1usize..10) {
        let m = 1 + (m - 1) % (t.order() - 1);
        let tol = 1e-12;
        let flipped = t.sign_flip(m).unwrap();
        let normal = t.normalize_signs().unwrap();
        prop_assert!(normal.offdiag().iter().all(|&b| b < 0.0));
        let base = eigenvalues(&t, tol).unwrap();
        let base_sub = eigenvalues(&t.leading_principal_submatrix().unwrap(), tol).unwrap();
        for other in [flipped, normal] {
            let e = eigenvalues(&other, tol).unwrap();
            let s = eigenvalues(&other.leading_principal_submatrix().unwrap(), tol).unwrap();
            prop_assert!(e.max_deviation(base.values()).unwrap() <= 2.0 * tol);
            prop_assert!(s.max_deviation(base_sub.values()).unwrap() <= 2.0 * tol);
        }
    }

    #[test]
    fn kac_shift_translates_spectrum(n in 1usize..30, shift in -20.0f64..20.0) {
        let tol = 1e-11;
        let base = eigenvalues(&build_kac(n, 0.0).unwrap().symmetrized().unwrap(), tol).unwrap();
        let moved = eigenvalues(&build_kac(n, shift).unwrap().symmetrized().unwrap(), tol).unwrap();
        for (a, b) in base.values().iter().zip(moved.values()) {
            prop_assert!((b - a - shift).abs() <= 1e-9);
        }
    }

    #[test]
    fn weights_are_normalized((lambda, mu) in interlaced_pair(100)) {
        let p = validate_interlacing(&lambda, &mu).unwrap();
        let w = last_components(&p);
        prop_assert!(w.weights().iter().all(|&x| x > 0.0));
        prop_assert!((w.squared_sum() - 1.0).abs() <= 1e-13);
    }

    #[test]
    fn reconstruction_is_shift_and_scale_equivariant(
        (lambda, mu) in interlaced_pair(15),
        shift in -100.0f64..100.0,
        scale in 0.1f64..10.0,
    ) {
        let p = validate_interlacing(&lambda, &mu).unwrap();
        let base = reconstruct_jacobian(&p, Variant::FullReorth).unwrap();
        let bound = base.diag().iter().chain(base.offdiag()).fold(1.0f64, |m, x| m.max(x.abs()));

        let shifted = reconstruct_jacobian(&p.affine(1.0, shift).unwrap(), Variant::FullReorth).unwrap();
        let err = shifted.max_abs_diff(&base.shifted(shift)).unwrap();
        prop_assert!(err <= 1e-9 * (bound + shift.abs()), "shift error {}", err);

        let scaled = reconstruct_jacobian(&p.affine(scale, 0.0).unwrap(), Variant::FullReorth).unwrap();
        let want = SymmetricTridiagonal::new(
            base.diag().iter().map(|x| scale * x).collect(),
            base.offdiag().iter().map(|x| scale * x).collect(),
        ).unwrap();
        prop_assert!(scaled.max_abs_diff(&want).unwrap() <= 1e-9 * scale * bound);
    }

    #[test]
    fn reconstruction_matches_spectra((lambda, mu) in interlaced_pair(20)) {
        let p = validate_interlacing(&lambda, &mu).unwrap();
        let t = reconstruct_jacobian(&p, Variant::FullReorth).unwrap();
        prop_assert!(t.offdiag().iter().all(|&b| b < 0.0));
        let tol = default_tol(&t);
        let (r1, r2) = jacobi_core::reconstruction_residual(&t, &p, tol).unwrap();
        prop_assert!(r1 <= 1e-8 && r2 <= 1e-8, "residuals {} {}", r1, r2);
    }
}

#[test]
fn a_min_gap_is_constant() {
    for n in [2, 5, 17, 64, 100] {
        let s = eigenvalues(&build_a(n).unwrap(), 1e-11).unwrap();
        assert!((s.min_gap().unwrap() - 2.0).abs() < 1e-9);
    }
}

#[test]
fn w_min_gap_is_twice_c() {
    for (n, a0, c) in [(3, 1.0, 2.0), (10, -3.0, 0.5), (25, 2.5, 4.0)] {
        let spec = TestMatrixSpec::new(n, a0, c).unwrap();
        let s = eigenvalues(&build_w(&spec).unwrap(), 1e-11).unwrap();
        assert!((s.min_gap().unwrap() - 2.0 * c).abs() < 1e-9);
    }
}
