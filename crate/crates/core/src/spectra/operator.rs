use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::spectra::Params;
use crate::word::{Letter, PointedWord};

/// Where an operator came from; carried into its spectral data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Provenance {
    /// `Mₙ`, the weighted Laplacian of `Γₙ`.
    GraphLevel(u32),
    /// A graph read off a subshift window of this many letters.
    WindowGraph(usize),
    /// `Hω` restricted to this many sites.
    Schrodinger(usize),
    #[default]
    Custom,
}

/// A real symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
    pub provenance: Provenance,
    pub params: Option<Params>,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidArgument(format!(
                "tridiagonal shape {} / {}",
                diag.len(),
                offdiag.len()
            )));
        }
        Ok(TridiagonalOperator {
            diag,
            offdiag,
            provenance: Provenance::Custom,
            params: None,
        })
    }

    pub fn with_origin(mut self, provenance: Provenance, params: Params) -> Self {
        self.provenance = provenance;
        self.params = Some(params);
        self
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let m = self.size();
        let mut a = vec![vec![0.0; m]; m];
        for (i, &d) in self.diag.iter().enumerate() {
            a[i][i] = d;
        }
        for (i, &e) in self.offdiag.iter().enumerate() {
            a[i][i + 1] = e;
            a[i + 1][i] = e;
        }
        a
    }

    /// `D·A·D` with `D = diag(±1)`: flips the sign of every coupling whose
    /// endpoints got different signs.
    pub fn conjugate_signs(&self, signs: &[bool]) -> TridiagonalOperator {
        let offdiag = self
            .offdiag
            .iter()
            .enumerate()
            .map(|(i, &e)| if signs[i] == signs[i + 1] { e } else { -e })
            .collect();
        TridiagonalOperator {
            diag: self.diag.clone(),
            offdiag,
            ..*self
        }
    }
}

/// `f(ω)` on `ω₀`: `t` on `a`, `D − w` on `x`, `D − v` on `y`, `D − u` on `z`.
pub fn f_value(letter: Letter, p: &Params) -> f64 {
    match letter {
        Letter::A => p.t,
        Letter::X => p.d() - p.w,
        Letter::Y => p.d() - p.v,
        Letter::Z => p.d() - p.u,
    }
}

/// `g(ω)` on `ω₀ω₁`: `w` on `ax, xa`; `v` on `ay, ya`; `u` on `az, za`.
pub fn g_value(first: Letter, second: Letter, p: &Params) -> Result<f64> {
    let spacer = match (first, second) {
        (Letter::A, s) if s.is_spacer() => s,
        (s, Letter::A) if s.is_spacer() => s,
        _ => return Err(Error::IllegalPair(first.as_char(), second.as_char())),
    };
    Ok(match spacer {
        Letter::X => p.w,
        Letter::Y => p.v,
        _ => p.u,
    })
}

/// `f(Tⁱω) = f` at the letter `ωᵢ` (sequence coordinates).
pub fn potential_f(w: &PointedWord, i: i64, p: &Params) -> Result<f64> {
    let l = w.get(i).ok_or(Error::IndexOutOfRange { index: i })?;
    Ok(f_value(l, p))
}

/// `g(Tⁱω) = g` at the pair `ωᵢωᵢ₊₁` (sequence coordinates).
pub fn potential_g(w: &PointedWord, i: i64, p: &Params) -> Result<f64> {
    let a = w.get(i).ok_or(Error::IndexOutOfRange { index: i })?;
    let b = w
        .get(i + 1)
        .ok_or(Error::IndexOutOfRange { index: i + 1 })?;
    g_value(a, b, p)
}

/// `Hω` restricted to sites `1..=m`: diagonal `g(Tᵏω)` at `k = 1..m`,
/// coupling between `k` and `k + 1` equal to `f(Tᵏ⁺¹ω)`. Reads `ω₁ … ωₘ₊₁`.
pub fn jacobi_from_window(w: &PointedWord, p: &Params, m: usize) -> Result<TridiagonalOperator> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "operator size must be positive".into(),
        ));
    }
    let needed = w.origin() + m;
    if w.len() < needed {
        return Err(Error::WindowTooShort {
            needed,
            have: w.len(),
        });
    }
    let diag = (1..=m as i64)
        .map(|k| potential_g(w, k, p))
        .collect::<Result<Vec<_>>>()?;
    let offdiag = (1..m as i64)
        .map(|k| potential_f(w, k + 1, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(TridiagonalOperator::new(diag, offdiag)?.with_origin(Provenance::Schrodinger(m), *p))
}

/// `t·ρ(a) + u·ρ(b) + v·ρ(c) + w·ρ(d)` on a path-shaped graph, vertices in
/// path order: loops add their weight to the diagonal, parallel edges add to
/// the coupling.
pub fn laplacian_from_graph(g: &LabeledGraph, p: &Params) -> Result<TridiagonalOperator> {
    let path = g.path_profile()?;
    let diag = path
        .loops
        .iter()
        .map(|ls| ls.iter().map(|&l| p.weight(l)).sum())
        .collect();
    let offdiag = path
        .links
        .iter()
        .map(|ls| ls.iter().map(|&l| p.weight(l)).sum())
        .collect();
    let op = TridiagonalOperator::new(diag, offdiag)?;
    Ok(op.with_origin(Provenance::Custom, *p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::schreier_graph;

    const ONES: Params = Params::new(1.0, 1.0, 1.0, 1.0);
    const P1123: Params = Params::new(1.0, 1.0, 2.0, 3.0);

    fn pw(s: &str) -> PointedWord {
        s.parse().unwrap()
    }

    #[test]
    fn f_examples() {
        let w = pw("axyz");
        assert_eq!(potential_f(&w, 1, &ONES).unwrap(), 1.0);
        assert_eq!(potential_f(&w, 2, &ONES).unwrap(), 2.0);
        assert_eq!(potential_f(&w, 4, &P1123).unwrap(), 5.0);
        assert!(potential_f(&w, 5, &ONES).is_err());
    }

    #[test]
    fn g_examples() {
        let w = pw("axaya");
        let p = Params::new(0.0, 10.0, 20.0, 30.0);
        assert_eq!(potential_g(&w, 1, &p).unwrap(), 30.0);
        assert_eq!(potential_g(&w, 4, &p).unwrap(), 20.0);
        assert_eq!(potential_g(&pw("za"), 1, &P1123).unwrap(), 1.0);
        assert!(potential_g(&w, 5, &p).is_err());
        assert!(matches!(
            potential_g(&pw("xy"), 1, &p),
            Err(Error::IllegalPair('x', 'y'))
        ));
        assert!(potential_g(&pw("aa"), 1, &p).is_err());
    }

    #[test]
    fn jacobi_examples() {
        let op = jacobi_from_window(&pw("ax"), &P1123, 1).unwrap();
        assert_eq!(op.diag(), &[3.0]);
        assert!(op.offdiag().is_empty());

        let op = jacobi_from_window(&pw("axay"), &ONES, 3).unwrap();
        assert_eq!(op.diag(), &[1.0, 1.0, 1.0]);
        assert_eq!(op.offdiag(), &[2.0, 1.0]);
        assert!(jacobi_from_window(&pw("axa"), &ONES, 3).is_err());
    }

    #[test]
    fn laplacian_level_one() {
        let p = Params::new(0.5, 1.0, 2.0, 3.0);
        let op = laplacian_from_graph(&schreier_graph(1).unwrap(), &p).unwrap();
        assert_eq!(op.diag(), &[6.0, 6.0]);
        assert_eq!(op.offdiag(), &[0.5]);
    }

    #[test]
    fn laplacian_level_two() {
        let op = laplacian_from_graph(&schreier_graph(2).unwrap(), &ONES).unwrap();
        assert_eq!(op.diag(), &[3.0, 1.0, 1.0, 3.0]);
        assert_eq!(op.offdiag(), &[1.0, 2.0, 1.0]);
    }

    #[test]
    fn zero_params_give_zero_matrix() {
        let op = laplacian_from_graph(
            &schreier_graph(3).unwrap(),
            &Params::new(0.0, 0.0, 0.0, 0.0),
        )
        .unwrap();
        assert!(op.diag().iter().chain(op.offdiag()).all(|&x| x == 0.0));
    }

    #[test]
    fn shape_checked() {
        assert!(TridiagonalOperator::new(vec![], vec![]).is_err());
        assert!(TridiagonalOperator::new(vec![1.0, 2.0], vec![]).is_err());
    }
}
