//! The substitution `τ: a ↦ axa, x ↦ y, y ↦ z, z ↦ x`, its fixed point `η`,
//! and the constant-length recoding `ζ` with the same fixed point.
//!
//! `η` is produced here four independent ways: iterating `τ` on `a`, the
//! doubling recursion `p⁽ⁿ⁺¹⁾ = p⁽ⁿ⁾ sₙ p⁽ⁿ⁾`, a closed form in the 2-adic
//! valuation of the position, and a four-state output automaton reading
//! binary expansions. Iterating `ζ` gives a fifth.

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Largest exponent accepted by the word-generating routines. `p⁽³⁰⁾` has
/// `2³¹ − 1` letters.
pub const MAX_LEVEL: u32 = 30;

/// Longest `η` prefix [`eta_prefix`] will materialise.
pub const MAX_PREFIX: usize = 1 << 30;

/// A substitution on `{a, x, y, z}`: one nonempty image per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    images: [Word; 4],
}

impl Substitution {
    pub fn new(images: [Word; 4]) -> Result<Self> {
        if let Some(i) = images.iter().position(Word::is_empty) {
            return Err(Error::InvalidArgument(format!(
                "image of {} is empty",
                Letter::ALL[i]
            )));
        }
        Ok(Substitution { images })
    }

    /// `τ`.
    pub fn tau() -> Self {
        Self::from_strs(["axa", "y", "z", "x"])
    }

    /// `ζ: a ↦ ax, x ↦ ay, y ↦ az, z ↦ ax`.
    pub fn zeta() -> Self {
        Self::from_strs(["ax", "ay", "az", "ax"])
    }

    fn from_strs(s: [&str; 4]) -> Self {
        Substitution {
            images: s.map(|t| t.parse().expect("static image")),
        }
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter.index()]
    }

    /// Extends the substitution to `w` by concatenation.
    pub fn apply(&self, w: &Word) -> Word {
        let len = w.letters().iter().map(|&l| self.image(l).len()).sum();
        let mut out = Vec::with_capacity(len);
        for &l in w.letters() {
            out.extend_from_slice(self.image(l).letters());
        }
        Word::from_letters(out)
    }

    /// `self^n(w)`, refusing results longer than [`MAX_PREFIX`] letters.
    pub fn iterate(&self, w: &Word, n: u32) -> Result<Word> {
        let mut cur = w.clone();
        for _ in 0..n {
            let next_len: usize = cur.letters().iter().map(|&l| self.image(l).len()).sum();
            if next_len > MAX_PREFIX {
                return Err(Error::SizeGuard {
                    what: "word length",
                    value: next_len as u64,
                    limit: MAX_PREFIX as u64,
                });
            }
            cur = self.apply(&cur);
        }
        Ok(cur)
    }
}

/// Convenience wrapper for [`Substitution::apply`].
pub fn apply(sub: &Substitution, w: &Word) -> Word {
    sub.apply(w)
}

/// The spacer `sₙ = τⁿ(x)`: `x`, `y`, `z` for `n ≡ 0, 1, 2 (mod 3)`.
pub fn spacer(n: u64) -> Letter {
    match n % 3 {
        0 => Letter::X,
        1 => Letter::Y,
        _ => Letter::Z,
    }
}

fn check_level(n: u32) -> Result<()> {
    if n > MAX_LEVEL {
        return Err(Error::SizeGuard {
            what: "level",
            value: n as u64,
            limit: MAX_LEVEL as u64,
        });
    }
    Ok(())
}

/// Builds `η₁ … η_len` with the doubling recursion, stopping as soon as
/// `len` letters exist.
fn grow_prefix(len: usize) -> Vec<Letter> {
    let mut buf = Vec::with_capacity(len.max(1));
    buf.push(Letter::A);
    let mut level = 0u64;
    while buf.len() < len {
        let block = buf.len();
        buf.push(spacer(level));
        let take = block.min(len - buf.len());
        buf.extend_from_within(..take);
        level += 1;
    }
    buf.truncate(len);
    buf
}

/// `p⁽ⁿ⁾ = τⁿ(a)`, built by `p⁽ⁿ⁺¹⁾ = p⁽ⁿ⁾ sₙ p⁽ⁿ⁾`. Has `2ⁿ⁺¹ − 1` letters.
pub fn level_word(n: u32) -> Result<Word> {
    check_level(n)?;
    Ok(Word::from_letters(grow_prefix((1usize << (n + 1)) - 1)))
}

/// `η₁ … η_len`.
pub fn eta_prefix(len: usize) -> Result<Word> {
    if len > MAX_PREFIX {
        return Err(Error::SizeGuard {
            what: "prefix length",
            value: len as u64,
            limit: MAX_PREFIX as u64,
        });
    }
    Ok(Word::from_letters(grow_prefix(len)))
}

/// `ηₚₒₛ` (1-based) from the 2-adic valuation of `pos`: odd positions carry
/// `a`; `2^(3k+1)·m`, `2^(3k+2)·m`, `2^(3k+3)·m` with `m` odd carry `x`,
/// `y`, `z`. `pos = 0` has no letter.
pub fn letter_at(pos: u64) -> Option<Letter> {
    if pos == 0 {
        return None;
    }
    let v = pos.trailing_zeros() as u64;
    Some(if v == 0 { Letter::A } else { spacer(v - 1) })
}

/// A deterministic finite automaton with output over the input alphabet
/// `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputAutomaton {
    labels: Vec<Letter>,
    transitions: Vec<[usize; 2]>,
    initial: usize,
}

impl OutputAutomaton {
    pub fn new(labels: Vec<Letter>, transitions: Vec<[usize; 2]>, initial: usize) -> Result<Self> {
        let n = labels.len();
        if n == 0 || transitions.len() != n || initial >= n {
            return Err(Error::InvalidArgument(
                "automaton needs one transition row per state and a valid initial state".into(),
            ));
        }
        if transitions.iter().flatten().any(|&t| t >= n) {
            return Err(Error::InvalidArgument("transition to unknown state".into()));
        }
        Ok(OutputAutomaton {
            labels,
            transitions,
            initial,
        })
    }

    /// The automaton generating `η`: states `q0..q3` labelled `a, x, y, z`;
    /// `0` sends every state to `q0`, `1` sends `qᵢ` to `qᵢ₊₁` and `q3` to
    /// `q1`.
    pub fn eta() -> Self {
        OutputAutomaton {
            labels: vec![Letter::A, Letter::X, Letter::Y, Letter::Z],
            transitions: vec![[0, 1], [0, 2], [0, 3], [0, 1]],
            initial: 0,
        }
    }

    pub fn label(&self, state: usize) -> Letter {
        self.labels[state]
    }

    pub fn step(&self, state: usize, bit: bool) -> usize {
        self.transitions[state][bit as usize]
    }

    pub fn num_states(&self) -> usize {
        self.labels.len()
    }

    /// Runs from `state` over the bits, most significant first.
    pub fn run<I: IntoIterator<Item = bool>>(&self, state: usize, bits: I) -> usize {
        bits.into_iter().fold(state, |q, b| self.step(q, b))
    }

    /// Output on the binary expansion of `pos` (most significant bit first,
    /// no leading zeros; `0` has the empty expansion).
    pub fn letter(&self, pos: u64) -> Letter {
        let width = 64 - pos.leading_zeros();
        let bits = (0..width).rev().map(|i| (pos >> i) & 1 == 1);
        self.label(self.run(self.initial, bits))
    }

    /// `f⁽ⁿ⁾(q)`: outputs on all length-`n` bit strings from `q`, in
    /// lexicographic order.
    pub fn block(&self, state: usize, n: u32) -> Result<Word> {
        check_level(n)?;
        let out = (0u64..1 << n)
            .map(|v| {
                let bits = (0..n).rev().map(|i| (v >> i) & 1 == 1);
                self.label(self.run(state, bits))
            })
            .collect();
        Ok(Word::from_letters(out))
    }
}

/// `η` indexed from 0, read off the automaton: equals `letter_at(pos + 1)`.
pub fn automaton_letter(aut: &OutputAutomaton, pos: u64) -> Letter {
    aut.letter(pos)
}

/// `ζⁿ(a)`, by iterating `ζ`. Equals `p⁽ⁿ⁻¹⁾ sₙ₋₁` for `n ≥ 1`.
pub fn zeta_power(n: u32) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidArgument("zeta_power needs n ≥ 1".into()));
    }
    check_level(n)?;
    Substitution::zeta().iterate(&Word::from_letters(vec![Letter::A]), n)
}
