mod support;

use grig_core::spectra::{
    eigenvalues, ids_comparison, ids_distribution, ids_sup_diff, jacobi_from_window,
    measure_estimate, schreier_laplacian, schreier_spectrum, special_schrodinger,
    ExperimentSummary,
};
use grig_core::substitution::eta_prefix;
use grig_core::{Params, PointedWord, TridiagonalOperator};
use proptest::prelude::*;

use support::{jacobi_eigenvalues, max_abs_diff, random_tridiagonal, rng};

#[test]
fn bisection_matches_rotations() {
    let mut r = rng(7);
    for m in 1..=48 {
        let (d, e) = random_tridiagonal(&mut r, m);
        let op = TridiagonalOperator::new(d, e).unwrap();
        let sd = eigenvalues(&op, 1e-13).unwrap();
        assert!(sd.certify(&op));
        assert!(max_abs_diff(&sd.eigenvalues, &jacobi_eigenvalues(op.to_dense())) < 1e-10);
    }
}

#[test]
fn level_one_closed_form() {
    let p = Params::new(0.7, 1.0, 2.0, 3.0);
    let sd = schreier_spectrum(1, &p, 1e-14).unwrap();
    assert!((sd.eigenvalues[0] - (p.d() - p.t)).abs() < 1e-12);
    assert!((sd.eigenvalues[1] - (p.d() + p.t)).abs() < 1e-12);
    assert_eq!(ids_distribution(&sd, p.d() - p.t + 1e-9), 0.5);
}

#[test]
fn jacobi_window_is_symmetric_and_coupled() {
    let p = Params::new(1.0, 1.0, 2.0, 3.0);
    let w = PointedWord::from_start(eta_prefix(200).unwrap()).unwrap();
    let op = jacobi_from_window(&w, &p, 150).unwrap();
    assert!(op.offdiag().iter().all(|&x| x != 0.0));
    let dense = op.to_dense();
    for i in 0..150 {
        for j in 0..150 {
            assert_eq!(dense[i][j], dense[j][i]);
        }
    }
}

#[test]
fn schrodinger_differs_from_laplacian_on_the_diagonal_ends() {
    let p = Params::new(1.0, 1.0, 2.0, 3.0);
    for n in 2..=8 {
        let m = schreier_laplacian(n, &p).unwrap();
        let h = special_schrodinger(n, &p).unwrap();
        assert_eq!(m.offdiag(), h.offdiag(), "n={n}");
        let size = m.size();
        for k in 1..size - 1 {
            assert_eq!(m.diag()[k], h.diag()[k], "n={n} k={k}");
        }
    }
}

#[test]
fn ids_comparison_with_decoupled_operator() {
    let c = ids_comparison(5, &Params::new(0.0, 1.0, 1.0, 1.0)).unwrap();
    assert!(c.sup_diff() <= c.bound());
    let sd = schreier_spectrum(5, &Params::new(1.0, 1.0, 1.0, 1.0), 1e-12).unwrap();
    assert_eq!(ids_sup_diff(&sd, &sd), 0.0);
}

#[test]
fn cover_length_bounds() {
    let sd = schreier_spectrum(7, &Params::new(1.0, 1.0, 2.0, 3.0), 1e-12).unwrap();
    let eps = 1.0 / 128.0;
    let m = measure_estimate(&sd, eps).unwrap();
    assert!(m.cover_length >= 2.0 * eps);
    assert!(m.cover_length <= sd.max() - sd.min() + 2.0 * eps + 1e-12);
}

#[test]
fn summary_json_is_byte_stable() {
    let p = Params::new(1.0, -1.0, 2.0, 3.0);
    let sd = schreier_spectrum(6, &p, 1e-12).unwrap();
    let s = ExperimentSummary::new(&sd, p, Some(6), 1.0 / 64.0).unwrap();
    let text = s.to_json();
    assert_eq!(ExperimentSummary::from_json(&text).unwrap().to_json(), text);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sign_of_t_does_not_matter(t in -3.0f64..3.0, u in -3.0f64..3.0, v in -3.0f64..3.0, w in -3.0f64..3.0) {
        let a = schreier_spectrum(5, &Params::new(t, u, v, w), 1e-13).unwrap();
        let b = schreier_spectrum(5, &Params::new(-t, u, v, w), 1e-13).unwrap();
        prop_assert!(max_abs_diff(&a.eigenvalues, &b.eigenvalues) < 1e-10);
    }

    #[test]
    fn spectra_scale_linearly(c in -4.0f64..4.0) {
        let p = Params::new(1.0, 3.0, 2.0, 1.0);
        let base = schreier_spectrum(5, &p, 1e-13).unwrap();
        let scaled = schreier_spectrum(5, &p.scaled(c), 1e-13).unwrap();
        let mut want: Vec<f64> = base.eigenvalues.iter().map(|x| c * x).collect();
        want.sort_by(f64::total_cmp);
        prop_assert!(max_abs_diff(&want, &scaled.eigenvalues) < 1e-10);
    }
}
