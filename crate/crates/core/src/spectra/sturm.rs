//! Eigenvalues of symmetric tridiagonal matrices by Sturm-count bisection.

use crate::error::{Error, Result};
use crate::spectra::{Params, Provenance, TridiagonalOperator};

/// Sorted eigenvalues of one operator, each certified by a Sturm bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    pub eigenvalues: Vec<f64>,
    /// `brackets[k] = (lo, hi)` with `count(lo) ≤ k < count(hi)`.
    pub brackets: Vec<(f64, f64)>,
    pub tol: f64,
    pub params: Option<Params>,
    pub provenance: Provenance,
}

impl SpectralData {
    pub fn size(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// Number of eigenvalues `≤ e`.
    pub fn count_le(&self, e: f64) -> usize {
        self.eigenvalues.partition_point(|&x| x <= e)
    }

    /// Re-checks every bracket against `op`: overlapping brackets are merged
    /// into clusters and the Sturm count must rise across each cluster by
    /// exactly the number of eigenvalues it holds.
    pub fn certify(&self, op: &TridiagonalOperator) -> bool {
        let mut k = 0;
        while k < self.brackets.len() {
            let (lo, mut hi) = self.brackets[k];
            let mut end = k + 1;
            while end < self.brackets.len() && self.brackets[end].0 <= hi {
                hi = hi.max(self.brackets[end].1);
                end += 1;
            }
            if sturm_count(op, hi) - sturm_count(op, lo) != end - k {
                return false;
            }
            if self.brackets[k..end].iter().any(|&(a, b)| b - a > self.tol) {
                return false;
            }
            k = end;
        }
        true
    }
}

fn pivot_floor(op: &TridiagonalOperator) -> f64 {
    let norm = op
        .diag()
        .iter()
        .chain(op.offdiag())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1.0);
    f64::MIN_POSITIVE * norm
}

/// Number of eigenvalues strictly below `lambda`: the count of negative
/// pivots in the `LDLᵀ` factorisation of `A − λI`.
pub fn sturm_count(op: &TridiagonalOperator, lambda: f64) -> usize {
    sturm_count_with_floor(op.diag(), op.offdiag(), lambda, pivot_floor(op))
}

#[inline]
fn sturm_count_with_floor(d: &[f64], e: &[f64], lambda: f64, floor: f64) -> usize {
    let mut count = 0;
    let mut q = d[0] - lambda;
    for i in 0..d.len() {
        if i > 0 {
            q = d[i] - lambda - e[i - 1] * e[i - 1] / q;
        }
        if q.abs() < floor {
            q = -floor;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval `[min(dₖ − rₖ), max(dₖ + rₖ)]`.
pub fn gershgorin_bounds(op: &TridiagonalOperator) -> (f64, f64) {
    let d = op.diag();
    let e = op.offdiag();
    let m = d.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..m {
        let r = if k > 0 { e[k - 1].abs() } else { 0.0 } + if k + 1 < m { e[k].abs() } else { 0.0 };
        lo = lo.min(d[k] - r);
        hi = hi.max(d[k] + r);
    }
    (lo, hi)
}

const LANES: usize = 8;

/// Sturm counts at up to [`LANES`] shifts at once; the independent
/// recurrences interleave, which hides the division latency.
fn sturm_counts_batch(d: &[f64], e2: &[f64], lambdas: &[f64], floor: f64, out: &mut [usize]) {
    let mut lam = [0.0; LANES];
    let k = lambdas.len();
    lam[..k].copy_from_slice(lambdas);
    lam[k..].fill(lambdas[k - 1]);
    let mut q = [0.0f64; LANES];
    let mut count = [0usize; LANES];
    for j in 0..LANES {
        q[j] = d[0] - lam[j];
        if q[j].abs() < floor {
            q[j] = -floor;
        }
        count[j] += (q[j] < 0.0) as usize;
    }
    for i in 1..d.len() {
        let (di, ei) = (d[i], e2[i - 1]);
        for j in 0..LANES {
            let mut v = di - lam[j] - ei / q[j];
            if v.abs() < floor {
                v = -floor;
            }
            count[j] += (v < 0.0) as usize;
            q[j] = v;
        }
    }
    out[..k].copy_from_slice(&count[..k]);
}

#[derive(Clone, Copy)]
struct Interval {
    lo: f64,
    hi: f64,
    /// Eigenvalue indices `clo..chi` lie in `[lo, hi)`.
    clo: usize,
    chi: usize,
    done: bool,
}

/// Level-synchronous bisection: every round evaluates all pending
/// midpoints in batches.
fn bisect(d: &[f64], e: &[f64], lo: f64, hi: f64, tol: f64, floor: f64) -> Vec<(f64, f64)> {
    let m = d.len();
    let e2: Vec<f64> = e.iter().map(|x| x * x).collect();
    let mut work = vec![Interval {
        lo,
        hi,
        clo: 0,
        chi: m,
        done: false,
    }];
    let mut mids = Vec::new();
    let mut counts = Vec::new();
    loop {
        for iv in work.iter_mut().filter(|iv| !iv.done) {
            let mid = 0.5 * (iv.lo + iv.hi);
            if iv.hi - iv.lo <= tol || mid <= iv.lo || mid >= iv.hi {
                iv.done = true;
            }
        }
        mids.clear();
        mids.extend(
            work.iter()
                .filter(|iv| !iv.done)
                .map(|iv| 0.5 * (iv.lo + iv.hi)),
        );
        if mids.is_empty() {
            break;
        }
        counts.resize(mids.len(), 0);
        for (lams, out) in mids.chunks(LANES).zip(counts.chunks_mut(LANES)) {
            sturm_counts_batch(d, &e2, lams, floor, out);
        }
        let mut next = Vec::with_capacity(work.len() + mids.len());
        let mut k = 0;
        for iv in work {
            if iv.done {
                next.push(iv);
                continue;
            }
            let (mid, cmid) = (mids[k], counts[k]);
            k += 1;
            if cmid > iv.clo {
                next.push(Interval {
                    hi: mid,
                    chi: cmid,
                    ..iv
                });
            }
            if cmid < iv.chi {
                next.push(Interval {
                    lo: mid,
                    clo: cmid,
                    ..iv
                });
            }
        }
        work = next;
    }
    let mut out = Vec::with_capacity(m);
    for iv in work {
        for _ in iv.clo..iv.chi {
            out.push((iv.lo, iv.hi));
        }
    }
    out
}

/// All eigenvalues of `op`, each bracketed to width `≤ tol` (or to adjacent
/// floating-point numbers when `tol` is below their spacing).
pub fn eigenvalues(op: &TridiagonalOperator, tol: f64) -> Result<SpectralData> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol} must be > 0"
        )));
    }
    let (glo, ghi) = gershgorin_bounds(op);
    let pad = tol
        .max((glo.abs().max(ghi.abs())) * f64::EPSILON * 4.0)
        .max(f64::MIN_POSITIVE);
    let (lo, hi) = (glo - pad, ghi + pad);
    let floor = pivot_floor(op);
    debug_assert_eq!(
        (
            sturm_count_with_floor(op.diag(), op.offdiag(), lo, floor),
            sturm_count_with_floor(op.diag(), op.offdiag(), hi, floor)
        ),
        (0, op.size())
    );
    let brackets = bisect(op.diag(), op.offdiag(), lo, hi, tol, floor);
    // A bracket of adjacent floats holds its eigenvalue at the upper end:
    // an exactly zero pivot is counted as negative.
    let eigenvalues = brackets
        .iter()
        .map(|&(l, h)| {
            let mid = 0.5 * (l + h);
            if mid <= l || mid >= h {
                h
            } else {
                mid
            }
        })
        .collect();
    Ok(SpectralData {
        eigenvalues,
        brackets,
        tol,
        params: op.params,
        provenance: op.provenance,
    })
}
