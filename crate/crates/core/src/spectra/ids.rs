//! Eigenvalue counting functions, their comparison between the Schreier
//! Laplacians and subshift operators, spectral nesting across levels, and
//! `ε`-cover lengths of finite spectra.

use crate::error::{Error, Result};
use crate::graph::graph_from_window;
use crate::group::{schreier_graph, MAX_SCHREIER_LEVEL};
use crate::language::special_sequence_window;
use crate::spectra::{
    eigenvalues, jacobi_from_window, laplacian_from_graph, Params, Provenance, SpectralData,
    TridiagonalOperator,
};
use crate::substitution::eta_prefix;
use crate::word::{Letter, PointedWord};

/// Default bracket width for spectra built by this module.
pub const DEFAULT_TOL: f64 = 1e-12;

/// `N(E) = #{λ ≤ E} / m`.
pub fn ids_distribution(sd: &SpectralData, e: f64) -> f64 {
    sd.count_le(e) as f64 / sd.size() as f64
}

/// `sup_E |N₁(E) − N₂(E)|`. Both functions are right-continuous steps, so
/// the supremum is attained at an eigenvalue of one of them.
pub fn ids_sup_diff(a: &SpectralData, b: &SpectralData) -> f64 {
    let (ma, mb) = (a.size() as f64, b.size() as f64);
    let (x, y) = (&a.eigenvalues, &b.eigenvalues);
    let (mut i, mut j) = (0, 0);
    let mut sup = 0.0f64;
    while i < x.len() || j < y.len() {
        let e = match (x.get(i), y.get(j)) {
            (Some(&p), Some(&q)) => p.min(q),
            (Some(&p), None) => p,
            (None, Some(&q)) => q,
            (None, None) => unreachable!(),
        };
        while i < x.len() && x[i] <= e {
            i += 1;
        }
        while j < y.len() && y[j] <= e {
            j += 1;
        }
        sup = sup.max((i as f64 / ma - j as f64 / mb).abs());
    }
    sup
}

/// `Mₙ(t, u, v, w)` in path order.
pub fn schreier_laplacian(n: usize, p: &Params) -> Result<TridiagonalOperator> {
    let g = schreier_graph(n)?;
    Ok(laplacian_from_graph(&g, p)?.with_origin(Provenance::GraphLevel(n as u32), *p))
}

/// `Σₙ(t, u, v, w)`.
pub fn schreier_spectrum(n: usize, p: &Params, tol: f64) -> Result<SpectralData> {
    eigenvalues(&schreier_laplacian(n, p)?, tol)
}

/// Laplacian of the graph read off `η₁ … η_{2ⁿ − 1}`: `2ⁿ` vertices, the
/// same path as `Γₙ` minus the three loops at each end.
pub fn window_graph_laplacian(n: usize, p: &Params) -> Result<TridiagonalOperator> {
    check_level(n)?;
    let letters = (1usize << n) - 1;
    let w = PointedWord::from_start(eta_prefix(letters)?)?;
    let g = graph_from_window(&w);
    Ok(laplacian_from_graph(&g, p)?.with_origin(Provenance::WindowGraph(letters), *p))
}

/// `Hω` for `ω = ω⁽ˣ⁾` on the `2ⁿ` sites `0 … 2ⁿ − 1`, which line up with
/// the vertices of `Γₙ`.
pub fn special_schrodinger(n: usize, p: &Params) -> Result<TridiagonalOperator> {
    check_level(n)?;
    let m = 1usize << n;
    // Radius m + 1 shows ω₋ₘ … ωₘ₊₁; moving the origin onto ω₀ makes
    // operator site k read ωₖ₋₁.
    let w = special_sequence_window(Letter::X, m + 1)?.shift()?;
    jacobi_from_window(&w, p, m)
}

fn check_level(n: usize) -> Result<()> {
    if n == 0 || n > MAX_SCHREIER_LEVEL {
        return Err(Error::SizeGuard {
            what: "level",
            value: n as u64,
            limit: MAX_SCHREIER_LEVEL as u64,
        });
    }
    Ok(())
}

/// Counting-function distances at one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdsComparison {
    pub level: usize,
    pub size: usize,
    /// Against the graph of `η₁ … η_{2ⁿ − 1}`.
    pub window_graph: f64,
    /// Against `Hω⁽ˣ⁾` on `2ⁿ` sites.
    pub schrodinger: f64,
    /// Ranks of `Mₙ − window operator`, `Mₙ − Hω⁽ˣ⁾` (diagonal-only
    /// differences, counted exactly).
    pub window_graph_rank: usize,
    pub schrodinger_rank: usize,
}

impl IdsComparison {
    pub fn sup_diff(&self) -> f64 {
        self.window_graph.max(self.schrodinger)
    }

    /// `6 / 2ⁿ`.
    pub fn bound(&self) -> f64 {
        6.0 / self.size as f64
    }
}

fn perturbation_rank(a: &TridiagonalOperator, b: &TridiagonalOperator) -> Option<usize> {
    if a.offdiag() != b.offdiag() {
        return None;
    }
    Some(
        a.diag()
            .iter()
            .zip(b.diag())
            .filter(|(x, y)| x != y)
            .count(),
    )
}

/// Compares the counting function of `Mₙ` with those of the window-graph
/// Laplacian and of `Hω⁽ˣ⁾`, all of size `2ⁿ`.
pub fn ids_comparison(n: usize, p: &Params) -> Result<IdsComparison> {
    ids_comparison_tol(n, p, DEFAULT_TOL)
}

pub fn ids_comparison_tol(n: usize, p: &Params, tol: f64) -> Result<IdsComparison> {
    let m = schreier_laplacian(n, p)?;
    let wg = window_graph_laplacian(n, p)?;
    let h = special_schrodinger(n, p)?;
    let sm = eigenvalues(&m, tol)?;
    let swg = eigenvalues(&wg, tol)?;
    let sh = eigenvalues(&h, tol)?;
    Ok(IdsComparison {
        level: n,
        size: m.size(),
        window_graph: ids_sup_diff(&sm, &swg),
        schrodinger: ids_sup_diff(&sm, &sh),
        window_graph_rank: perturbation_rank(&m, &wg).unwrap_or(m.size()),
        schrodinger_rank: perturbation_rank(&m, &h).unwrap_or(m.size()),
    })
}

/// Largest distance from an eigenvalue of `small` to the spectrum of `large`.
pub fn inclusion_distance(small: &SpectralData, large: &SpectralData) -> f64 {
    let ys = &large.eigenvalues;
    small
        .eigenvalues
        .iter()
        .map(|&x| {
            let k = ys.partition_point(|&y| y < x);
            let right = ys.get(k).map_or(f64::INFINITY, |&y| y - x);
            let left = k.checked_sub(1).map_or(f64::INFINITY, |j| x - ys[j]);
            right.min(left)
        })
        .fold(0.0, f64::max)
}

/// Whether every eigenvalue of `Mₙ` lies within `tol` of one of `Mₙ₊₁`.
pub fn nesting_check(n: usize, p: &Params, tol: f64) -> Result<bool> {
    if n >= MAX_SCHREIER_LEVEL {
        return Err(Error::SizeGuard {
            what: "nesting level",
            value: n as u64,
            limit: MAX_SCHREIER_LEVEL as u64 - 1,
        });
    }
    if tol == f64::INFINITY {
        return Ok(true);
    }
    let small = schreier_spectrum(n, p, DEFAULT_TOL)?;
    let large = schreier_spectrum(n + 1, p, DEFAULT_TOL)?;
    Ok(inclusion_distance(&small, &large) <= tol)
}

/// Length of `⋃ [λ − ε, λ + ε]` over the eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureEstimate {
    pub epsilon: f64,
    pub cover_length: f64,
    /// Connected components of the cover.
    pub components: usize,
}

impl MeasureEstimate {
    /// Gaps between components.
    pub fn gap_count(&self) -> usize {
        self.components.saturating_sub(1)
    }
}

pub fn measure_estimate(sd: &SpectralData, epsilon: f64) -> Result<MeasureEstimate> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "epsilon {epsilon} must be > 0"
        )));
    }
    let mut total = 0.0;
    let mut components = 0;
    let mut iter = sd.eigenvalues.iter();
    if let Some(&first) = iter.next() {
        let (mut lo, mut hi) = (first - epsilon, first + epsilon);
        components = 1;
        for &x in iter {
            if x - epsilon <= hi {
                hi = x + epsilon;
            } else {
                total += hi - lo;
                components += 1;
                lo = x - epsilon;
                hi = x + epsilon;
            }
        }
        total += hi - lo;
    }
    Ok(MeasureEstimate {
        epsilon,
        cover_length: total,
        components,
    })
}

/// `ε = 2⁻ⁿ`.
pub fn level_epsilon(n: usize) -> f64 {
    (-(n as f64)).exp2()
}

/// Cover length of `Σₙ` at `εₙ = 2⁻ⁿ` for each level.
pub fn cover_lengths(
    p: &Params,
    levels: impl IntoIterator<Item = usize>,
) -> Result<Vec<(usize, MeasureEstimate)>> {
    levels
        .into_iter()
        .map(|n| {
            let sd = schreier_spectrum(n, p, DEFAULT_TOL)?;
            Ok((n, measure_estimate(&sd, level_epsilon(n))?))
        })
        .collect()
}
