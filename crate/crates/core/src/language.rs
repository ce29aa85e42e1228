//! The factor language of `η`: complexity, special words, powers, and
//! `n`-partitions of subshift windows.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::substitution::{eta_prefix, level_word, MAX_PREFIX};
use crate::suffix::factor_counts;
use crate::word::{Letter, PointedWord, Word};

/// The distinct factors of one length found in an `η` prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordSet {
    pub length: usize,
    /// Strictly increasing.
    pub words: Vec<Word>,
    pub source_window: usize,
    /// Whether scanning twice the window found exactly the same set.
    pub stabilized: bool,
}

impl SubwordSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }
}

fn distinct_factors(text: &[Letter], len: usize) -> BTreeSet<&[Letter]> {
    text.windows(len).collect()
}

/// Distinct factors of length `len` in `η₁ … η_window`, with the doubling
/// stabilisation check.
pub fn subwords(len: usize, window: usize) -> Result<SubwordSet> {
    if len == 0 || len > window {
        return Err(Error::InvalidArgument(format!(
            "factor length {len} must be in 1..={window}"
        )));
    }
    let doubled = window
        .checked_mul(2)
        .filter(|&d| d <= MAX_PREFIX)
        .ok_or(Error::SizeGuard {
            what: "prefix length",
            value: window as u64 * 2,
            limit: MAX_PREFIX as u64,
        })?;
    let text = eta_prefix(doubled)?;
    let small = distinct_factors(&text.letters()[..window], len);
    let large = distinct_factors(text.letters(), len);
    let stabilized = small.len() == large.len();
    Ok(SubwordSet {
        length: len,
        words: small.into_iter().map(Word::from).collect(),
        source_window: window,
        stabilized,
    })
}

/// Like [`subwords`] but doubles the window (starting from `64·len`) until the
/// set stabilises.
pub fn stable_subwords(len: usize) -> Result<SubwordSet> {
    let mut window = (64 * len).next_power_of_two().max(256);
    loop {
        let set = subwords(len, window)?;
        if set.stabilized {
            return Ok(set);
        }
        window *= 2;
    }
}

/// Factor counts for every length up to `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    /// `counts[L - 1]` is the number of distinct factors of length `L`.
    pub counts: Vec<usize>,
    pub window: usize,
    pub stabilized: bool,
}

impl ComplexityProfile {
    pub fn count(&self, len: usize) -> usize {
        self.counts[len - 1]
    }
}

/// Enumerates factor counts of all lengths `1..=max_len` in `η₁ … η_window`
/// through a suffix array, and repeats on twice the window to check
/// stabilisation.
pub fn complexity_profile(max_len: usize, window: usize) -> Result<ComplexityProfile> {
    if max_len == 0 || max_len > window {
        return Err(Error::InvalidArgument(format!(
            "max length {max_len} must be in 1..={window}"
        )));
    }
    let text = eta_prefix(window.saturating_mul(2))?;
    let bytes: Vec<u8> = text.letters().iter().map(|&l| l as u8).collect();
    let counts = factor_counts(&bytes[..window], 4, max_len);
    let check = factor_counts(&bytes, 4, max_len);
    Ok(ComplexityProfile {
        stabilized: counts == check,
        counts,
        window,
    })
}

/// Closed-form number of factors of length `len`: `4, 6, 8` for
/// `len ≤ 3`, then for `len = 2ⁿ + k`, `0 ≤ k < 2ⁿ`:
/// `2ⁿ⁺¹ + 2ⁿ⁻¹ + 3k` when `k < 2ⁿ⁻¹` and `2ⁿ⁺¹ + 2ⁿ + 2k` otherwise.
pub fn complexity_closed_form(len: u64) -> u64 {
    match len {
        0 => 1,
        1 => 4,
        2 => 6,
        3 => 8,
        _ => {
            let n = 63 - len.leading_zeros();
            let k = len - (1u64 << n);
            if k < 1u64 << (n - 1) {
                (1u64 << (n + 1)) + (1u64 << (n - 1)) + 3 * k
            } else {
                (1u64 << (n + 1)) + (1u64 << n) + 2 * k
            }
        }
    }
}

/// Factors of length `len` admitting at least two right extensions, with
/// their extension letters in increasing order.
pub fn right_special(len: usize) -> Result<Vec<(Word, Vec<Letter>)>> {
    if len == 0 {
        return Err(Error::InvalidArgument("length must be positive".into()));
    }
    let ext = stable_subwords(len + 1)?;
    let mut by_prefix: BTreeMap<&[Letter], Vec<Letter>> = BTreeMap::new();
    for w in &ext.words {
        let (prefix, last) = w.letters().split_at(len);
        by_prefix.entry(prefix).or_default().push(last[0]);
    }
    Ok(by_prefix
        .into_iter()
        .filter(|(_, e)| e.len() >= 2)
        .map(|(p, e)| (Word::from(p), e))
        .collect())
}

/// Longest repetition of period `period` found in a prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodRecord {
    pub period: usize,
    /// `N + |v|/|w|` for the longest `wᴺv` of this period.
    pub index: Ratio<u64>,
    /// 1-based start of the first longest repetition.
    pub start: usize,
    pub root: Word,
}

/// Outcome of [`max_power_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerReport {
    pub max_len: usize,
    pub window: usize,
    pub max_index: Ratio<u64>,
    pub max_index_period: usize,
    pub fourth_power_found: bool,
    /// Lengths `|w|` for which `www` occurs.
    pub cube_root_lengths: BTreeSet<usize>,
    /// One record per period `1..=max_len`.
    pub periods: Vec<PeriodRecord>,
}

impl PowerReport {
    pub fn record(&self, period: usize) -> Option<&PeriodRecord> {
        self.periods.get(period.checked_sub(1)?)
    }
}

/// Scans every period `p ≤ max_len` over `η₁ … η_window` for its longest
/// run `wᴺv` (`|w| = p`, `v` a proper prefix of `w`) and reports exact
/// indices.
pub fn max_power_scan(max_len: usize, window: usize) -> Result<PowerReport> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be positive".into()));
    }
    let needed = max_len.saturating_mul(4);
    if window < needed {
        return Err(Error::WindowTooShort {
            needed,
            have: window,
        });
    }
    let text = eta_prefix(window)?;
    let t = text.letters();
    let mut periods = Vec::with_capacity(max_len);
    let mut cube_root_lengths = BTreeSet::new();
    let mut best: Option<(Ratio<u64>, usize)> = None;
    for p in 1..=max_len {
        // run = number of consecutive i with t[i] == t[i + p]; a run of r
        // such positions is a repetition of length r + p.
        let (mut run, mut best_run, mut best_start) = (0usize, 0usize, 0usize);
        for i in 0..t.len() - p {
            if t[i] == t[i + p] {
                run += 1;
                if run > best_run {
                    best_run = run;
                    best_start = i + 1 - run;
                }
            } else {
                run = 0;
            }
        }
        let index = Ratio::new((best_run + p) as u64, p as u64);
        if best_run >= 2 * p {
            cube_root_lengths.insert(p);
        }
        if best.is_none_or(|(b, _)| index > b) {
            best = Some((index, p));
        }
        periods.push(PeriodRecord {
            period: p,
            index,
            start: best_start + 1,
            root: Word::from(&t[best_start..best_start + p]),
        });
    }
    let (max_index, max_index_period) = best.expect("max_len ≥ 1");
    Ok(PowerReport {
        max_len,
        window,
        max_index,
        max_index_period,
        fourth_power_found: max_index >= Ratio::from_integer(4),
        cube_root_lengths,
        periods,
    })
}

/// The `n`-partition of a window: the residue class of spacer positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionResult {
    pub n: u32,
    /// In `[0, 2ⁿ⁺¹)`, in sequence coordinates.
    pub residue: u64,
    /// Sequence coordinates of the visible spacers.
    pub witness_positions: Vec<i64>,
}

fn partition_fits(w: &PointedWord, block: &[Letter], residue: i64) -> bool {
    let period = block.len() as i64 + 1;
    w.word().letters().iter().enumerate().all(|(slot, &l)| {
        let off = (w.coord_of_slot(slot) - residue).rem_euclid(period);
        if off == 0 {
            l.is_spacer()
        } else {
            l == block[off as usize - 1]
        }
    })
}

/// Finds the unique residue `r (mod 2ⁿ⁺¹)` such that every visible position
/// `q ≡ r` carries a spacer and the `2ⁿ⁺¹ − 1` letters after it spell
/// `p⁽ⁿ⁾`. All `2ⁿ⁺¹` classes are tried.
pub fn n_partition(w: &PointedWord, n: u32) -> Result<PartitionResult> {
    if n > 20 {
        return Err(Error::SizeGuard {
            what: "partition level",
            value: n as u64,
            limit: 20,
        });
    }
    let period = 1usize << (n + 1);
    let needed = 3 * period;
    if w.len() < needed {
        return Err(Error::WindowTooShort {
            needed,
            have: w.len(),
        });
    }
    let block = level_word(n)?;
    let fits: Vec<i64> = (0..period as i64)
        .filter(|&r| partition_fits(w, block.letters(), r))
        .collect();
    match fits.as_slice() {
        [] => Err(Error::NoPartition { n }),
        [r] => {
            let witness_positions = (w.first_coord()..=w.last_coord())
                .filter(|q| (q - r).rem_euclid(period as i64) == 0)
                .collect();
            Ok(PartitionResult {
                n,
                residue: *r as u64,
                witness_positions,
            })
        }
        many => Err(Error::AmbiguousPartition {
            n,
            count: many.len(),
        }),
    }
}

/// The window `ω₋ᵣ₊₁ … ω₀ | ω₁ … ωᵣ` of the sequence `ω⁽ˢ⁾ = … p⁽ⁿ⁾ s | p⁽ⁿ⁾ …`
/// (`r = radius`): `η` to the right, `η` mirrored to the left, `s` at 0.
pub fn special_sequence_window(s: Letter, radius: usize) -> Result<PointedWord> {
    if !s.is_spacer() {
        return Err(Error::InvalidArgument(
            "special sequences are indexed by x, y, z".into(),
        ));
    }
    if radius == 0 {
        return Err(Error::InvalidArgument("radius must be positive".into()));
    }
    let right = eta_prefix(radius)?;
    let mut letters = Vec::with_capacity(2 * radius);
    letters.extend(right.letters()[..radius - 1].iter().rev());
    letters.push(s);
    letters.extend_from_slice(right.letters());
    PointedWord::new(Word::from_letters(letters), radius + 1)
}

/// 1-based start positions of every occurrence of `p⁽ⁿ⁾ s p⁽ⁿ⁾`
/// (`s ∈ {x, y, z}`) in `η₁ … η_window`.
pub fn block_pair_occurrences(n: u32, window: usize) -> Result<Vec<usize>> {
    let p = level_word(n)?;
    let text = eta_prefix(window)?;
    let t = text.letters();
    let b = p.len();
    let total = 2 * b + 1;
    if t.len() < total {
        return Ok(Vec::new());
    }
    Ok((0..=t.len() - total)
        .filter(|&i| {
            t[i + b].is_spacer()
                && t[i..i + b] == *p.letters()
                && t[i + b + 1..i + total] == *p.letters()
        })
        .map(|i| i + 1)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn subword_examples() {
        let s1 = subwords(1, 1 << 12).unwrap();
        assert_eq!(s1.words, vec![w("a"), w("x"), w("y"), w("z")]);
        assert!(s1.stabilized);
        assert_eq!(subwords(2, 1 << 12).unwrap().len(), 6);
        let s3 = subwords(3, 1 << 12).unwrap();
        assert_eq!(s3.len(), 8);
        assert!(s3.contains(&w("axa")));
    }

    #[test]
    fn subwords_rejects_long_factor() {
        assert!(subwords(10, 5).is_err());
        assert!(subwords(0, 5).is_err());
    }

    #[test]
    fn short_window_not_stabilized() {
        // The first four letters miss z entirely.
        assert!(!subwords(1, 4).unwrap().stabilized);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(complexity_closed_form(3), 8);
        assert_eq!(complexity_closed_form(4), 10);
        // The second branch applies at n = 2, k = 2.
        assert_eq!(complexity_closed_form(6), 16);
        assert_eq!(subwords(6, 1 << 12).unwrap().len(), 16);
    }

    #[test]
    fn closed_form_branches_meet() {
        for n in 2..20u32 {
            let k = 1u64 << (n - 1);
            let first = (1u64 << (n + 1)) + (1u64 << (n - 1)) + 3 * k;
            assert_eq!(complexity_closed_form((1 << n) + k), first);
        }
    }

    #[test]
    fn right_special_examples() {
        assert_eq!(right_special(4).unwrap().len(), 2);
        let r6 = right_special(6).unwrap();
        assert_eq!(r6.len(), 1);
        assert_eq!(r6[0].0, w("xayaxa"));
        assert_eq!(r6[0].1, vec![Letter::X, Letter::Y, Letter::Z]);
        let r7 = right_special(7).unwrap();
        let p2 = r7.iter().find(|(word, _)| *word == w("axayaxa")).unwrap();
        assert_eq!(p2.1, vec![Letter::X, Letter::Y, Letter::Z]);
    }

    #[test]
    fn power_scan_small() {
        let rep = max_power_scan(16, 1 << 12).unwrap();
        let ax = rep.record(2).unwrap();
        assert_eq!(ax.root, w("ax"));
        assert_eq!(ax.index, Ratio::new(7, 2));
        assert!(!rep.fourth_power_found);
        assert!(rep.cube_root_lengths.contains(&2));
        assert!(max_power_scan(16, 63).is_err());
    }

    #[test]
    fn partition_of_eta_prefix() {
        let win = PointedWord::from_start(eta_prefix(31).unwrap()).unwrap();
        let p = n_partition(&win, 1).unwrap();
        assert_eq!(p.residue, 0);
        assert_eq!(&p.witness_positions[..3], &[4, 8, 12]);
        let back = win.unshift().unwrap();
        assert_eq!(n_partition(&back, 1).unwrap().residue, 3);
        assert_eq!(back.shift().unwrap(), win);
    }

    #[test]
    fn partition_rejects_short_and_illegal() {
        let win = PointedWord::from_start(eta_prefix(11).unwrap()).unwrap();
        assert!(matches!(
            n_partition(&win, 1),
            Err(Error::WindowTooShort { .. })
        ));
        let bad = PointedWord::from_start(w("axayayaxaxayaxa")).unwrap();
        assert!(matches!(
            n_partition(&bad, 1),
            Err(Error::NoPartition { .. })
        ));
    }

    #[test]
    fn special_windows() {
        let wx = special_sequence_window(Letter::X, 3).unwrap();
        assert_eq!(wx.to_string(), "xax|axa");
        let wy = special_sequence_window(Letter::Y, 100).unwrap();
        assert_eq!(
            wy.word().letters()[100..],
            *eta_prefix(100).unwrap().letters()
        );
        let wx = special_sequence_window(Letter::X, 100).unwrap();
        let diff: Vec<i64> = (wx.first_coord()..=wx.last_coord())
            .filter(|&k| wx.get(k) != wy.get(k))
            .collect();
        assert_eq!(diff, vec![0]);
        assert!(special_sequence_window(Letter::A, 3).is_err());
    }

    #[test]
    fn special_window_spacer_at_origin() {
        for s in Letter::SPACERS {
            let win = special_sequence_window(s, 200).unwrap();
            for n in 0..=4 {
                let p = n_partition(&win, n).unwrap();
                assert_eq!(p.residue, 0, "s={s} n={n}");
            }
        }
    }
}
