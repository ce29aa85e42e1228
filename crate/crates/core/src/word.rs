//! Letters over `{a, x, y, z}`, finite words, and pointed windows of
//! bi-infinite sequences.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the alphabet `{a, x, y, z}`, ordered `a < x < y < z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Letter {
    A = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::X, Letter::Y, Letter::Z];
    pub const SPACERS: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::X => 'x',
            Letter::Y => 'y',
            Letter::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'a' => Ok(Letter::A),
            'x' => Ok(Letter::X),
            'y' => Ok(Letter::Y),
            'z' => Ok(Letter::Z),
            other => Err(Error::InvalidLetter(other)),
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// True for `x`, `y`, `z`.
    #[inline]
    pub fn is_spacer(self) -> bool {
        self != Letter::A
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word. Positions are 1-based in [`Word::at`]; slices and
/// iterators are the usual 0-based Rust views.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Letter at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> Option<Letter> {
        pos.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from_slice(&mut self, letters: &[Letter]) {
        self.0.extend_from_slice(letters);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }
}

impl Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// Renders a letter slice as a string.
pub fn letters_to_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

/// A finite window `ω_lo … ω_hi` of a bi-infinite sequence with the origin
/// marked. `origin` is the 1-based index of `ω_1` inside `word`, so the
/// `|` sits between `word.at(origin - 1)` (that is `ω_0`) and
/// `word.at(origin)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointedWord {
    word: Word,
    origin: usize,
}

impl PointedWord {
    pub fn new(word: Word, origin: usize) -> Result<Self> {
        if origin == 0 || origin > word.len() {
            return Err(Error::OriginOutOfRange {
                origin,
                len: word.len(),
            });
        }
        Ok(PointedWord { word, origin })
    }

    /// The window with `ω_1` at its first letter.
    pub fn from_start(word: Word) -> Result<Self> {
        Self::new(word, 1)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Smallest sequence coordinate covered by the window.
    pub fn first_coord(&self) -> i64 {
        2 - self.origin as i64
    }

    /// Largest sequence coordinate covered by the window.
    pub fn last_coord(&self) -> i64 {
        self.word.len() as i64 + 1 - self.origin as i64
    }

    /// 0-based slice index of sequence coordinate `k`, if visible.
    pub fn slot(&self, k: i64) -> Option<usize> {
        let idx = k + self.origin as i64 - 2;
        (idx >= 0 && (idx as usize) < self.word.len()).then_some(idx as usize)
    }

    /// `ω_k`, if visible.
    pub fn get(&self, k: i64) -> Option<Letter> {
        self.slot(k).map(|i| self.word[i])
    }

    pub fn coord_of_slot(&self, slot: usize) -> i64 {
        slot as i64 + 2 - self.origin as i64
    }

    /// Same window, origin moved by `delta` letters (positive moves right).
    pub fn with_origin_offset(&self, delta: i64) -> Result<Self> {
        let o = self.origin as i64 + delta;
        if o < 1 {
            return Err(Error::OriginOutOfRange {
                origin: 0,
                len: self.word.len(),
            });
        }
        Self::new(self.word.clone(), o as usize)
    }

    /// The shift `T`: the sequence content slides one step to the right
    /// relative to the origin, so the origin marker moves one letter left.
    /// Under this convention `P⁽ⁿ⁾(Tω) = P⁽ⁿ⁾(ω) + 1`.
    pub fn shift(&self) -> Result<Self> {
        self.with_origin_offset(-1)
    }

    /// Inverse of [`PointedWord::shift`].
    pub fn unshift(&self) -> Result<Self> {
        self.with_origin_offset(1)
    }
}

impl fmt::Display for PointedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (left, right) = self.word.letters().split_at(self.origin - 1);
        write!(
            f,
            "{}|{}",
            letters_to_string(left),
            letters_to_string(right)
        )
    }
}

impl FromStr for PointedWord {
    type Err = Error;

    /// Parses `"xax|axa"`; without a `|` the origin is the first letter.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('|') {
            Some((l, r)) => {
                let left: Word = l.parse()?;
                let right: Word = r.parse()?;
                let origin = left.len() + 1;
                PointedWord::new(left.concat(&right), origin)
            }
            None => PointedWord::from_start(s.parse()?),
        }
    }
}
