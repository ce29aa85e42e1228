#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// ascending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = a.iter().flatten().map(|x| x * x).sum();
        if off <= 1e-30 * scale.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// `η₁ … η_len` as chars, by applying `τ` to a char string until long
/// enough.
pub fn naive_eta(len: usize) -> Vec<char> {
    let mut w = vec!['a'];
    while w.len() < len {
        w = w
            .iter()
            .flat_map(|&c| match c {
                'a' => vec!['a', 'x', 'a'],
                'x' => vec!['y'],
                'y' => vec!['z'],
                _ => vec!['x'],
            })
            .collect();
    }
    w.truncate(len);
    w
}

/// Random symmetric tridiagonal `(diag, offdiag)` of size `m` with entries
/// in `[-3, 3]`; a quarter of the couplings are zero and a quarter of the
/// diagonals repeat their neighbour, to exercise clusters.
pub fn random_tridiagonal(rng: &mut ChaCha8Rng, m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d: Vec<f64> = (0..m).map(|_| rng.gen_range(-3.0..3.0)).collect();
    for i in 1..m {
        if rng.gen_bool(0.25) {
            d[i] = d[i - 1];
        }
    }
    let e = (1..m)
        .map(|_| {
            if rng.gen_bool(0.25) {
                0.0
            } else {
                rng.gen_range(-3.0..3.0)
            }
        })
        .collect();
    (d, e)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
