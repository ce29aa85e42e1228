//! Grigorchuk's group acting on the rooted binary tree, its finite Schreier
//! graphs, and relator checks.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// One of the generators `a, b, c, d`. Also used as the edge label of
/// Schreier graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::B, Generator::C, Generator::D];

    pub fn as_char(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
            Generator::D => 'd',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_lowercase() {
            'a' => Ok(Generator::A),
            'b' => Ok(Generator::B),
            'c' => Ok(Generator::C),
            'd' => Ok(Generator::D),
            _ => Err(Error::InvalidGenerator(c)),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Deepest level representable by [`TreeVertex`].
pub const MAX_DEPTH: usize = 63;

/// A vertex of the binary tree: a word over `{0, 1}`. Bit `i` of `bits` is
/// the `i`-th letter read from the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeVertex {
    len: u8,
    bits: u64,
}

impl TreeVertex {
    pub fn root() -> Self {
        TreeVertex { len: 0, bits: 0 }
    }

    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_DEPTH || (len < 64 && bits >> len != 0) {
            return Err(Error::InvalidVertex(format!("{len} bits from {bits:#b}")));
        }
        Ok(TreeVertex {
            len: len as u8,
            bits,
        })
    }

    /// The vertex `1ⁿ`.
    pub fn all_ones(n: usize) -> Result<Self> {
        Self::new(n, if n == 0 { 0 } else { u64::MAX >> (64 - n) })
    }

    pub fn level(&self) -> usize {
        self.len as usize
    }

    /// Packed letters (first letter in bit 0); doubles as a dense index on
    /// a level.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn letter(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.level() {
            write!(f, "{}", if self.letter(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for TreeVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_DEPTH {
            return Err(Error::InvalidVertex(s.to_string()));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::InvalidVertex(s.to_string())),
            }
        }
        TreeVertex::new(s.len(), bits)
    }
}

/// Applies a generator:
/// `a(0w) = 1w, a(1w) = 0w`;
/// `b(0w) = 0a(w), b(1w) = 1c(w)`;
/// `c(0w) = 0a(w), c(1w) = 1d(w)`;
/// `d(0w) = 0w, d(1w) = 1b(w)`.
pub fn act(gen: Generator, v: TreeVertex) -> TreeVertex {
    let mut state = Some(gen);
    let mut bits = v.bits;
    for i in 0..v.level() {
        let one = v.letter(i);
        state = match (state, one) {
            (None, _) => break,
            (Some(Generator::A), _) => {
                bits ^= 1 << i;
                break;
            }
            (Some(Generator::B), false) | (Some(Generator::C), false) => Some(Generator::A),
            (Some(Generator::B), true) => Some(Generator::C),
            (Some(Generator::C), true) => Some(Generator::D),
            (Some(Generator::D), false) => None,
            (Some(Generator::D), true) => Some(Generator::B),
        };
    }
    TreeVertex { len: v.len, bits }
}

/// A word in the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord(Vec<Generator>);

impl GroupWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        GroupWord(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pow(&self, k: usize) -> GroupWord {
        GroupWord(self.0.repeat(k))
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(Generator::from_char)
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Acts by `gw = g₁ g₂ … gₖ` as a composition: `gₖ` is applied first.
pub fn act_word(gw: &GroupWord, v: TreeVertex) -> TreeVertex {
    gw.0.iter().rev().fold(v, |u, &g| act(g, u))
}

/// `κ: a ↦ aca, b ↦ d, c ↦ b, d ↦ c`, the substitution `τ` read through
/// `x → c, y → b, z → d`.
pub fn kappa(gw: &GroupWord) -> GroupWord {
    let mut out = Vec::with_capacity(gw.len() * 3);
    for &g in &gw.0 {
        match g {
            Generator::A => out.extend([Generator::A, Generator::C, Generator::A]),
            Generator::B => out.push(Generator::D),
            Generator::C => out.push(Generator::B),
            Generator::D => out.push(Generator::C),
        }
    }
    GroupWord(out)
}

pub fn kappa_power(gw: &GroupWord, k: u32) -> GroupWord {
    (0..k).fold(gw.clone(), |w, _| kappa(&w))
}

/// Every vertex of level `n`, ordered by packed bits.
pub fn level_vertices(n: usize) -> impl Iterator<Item = TreeVertex> {
    (0u64..1u64 << n).map(move |bits| TreeVertex { len: n as u8, bits })
}

/// Whether `gw` fixes every vertex of level `n`.
pub fn acts_trivially(gw: &GroupWord, n: usize) -> bool {
    level_vertices(n).all(|v| act_word(gw, v) == v)
}

/// Maximum level accepted by [`relator_check`].
pub const MAX_RELATOR_LEVEL: usize = 14;
/// Maximum `κ` exponent accepted by [`relator_check`].
pub const MAX_KAPPA: u32 = 3;

/// One relator evaluated on one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorRow {
    pub name: String,
    pub word: GroupWord,
    pub level: usize,
    pub trivial: bool,
}

/// Evaluates `a², b², c², d²`, `bcd`, and `κᵏ((ad)⁴)`, `κᵏ((adacac)⁴)` for
/// `k ≤ k_max` on every vertex of `level`.
pub fn relator_table(level: usize, k_max: u32) -> Result<Vec<RelatorRow>> {
    if level == 0 || level > MAX_RELATOR_LEVEL {
        return Err(Error::SizeGuard {
            what: "relator level",
            value: level as u64,
            limit: MAX_RELATOR_LEVEL as u64,
        });
    }
    if k_max > MAX_KAPPA {
        return Err(Error::SizeGuard {
            what: "kappa exponent",
            value: k_max as u64,
            limit: MAX_KAPPA as u64,
        });
    }
    let mut rows = Vec::new();
    let mut push = |name: String, word: GroupWord| {
        let trivial = acts_trivially(&word, level);
        rows.push(RelatorRow {
            name,
            word,
            level,
            trivial,
        });
    };
    for g in Generator::ALL {
        push(format!("{g}^2"), GroupWord(vec![g, g]));
    }
    push("bcd".into(), "bcd".parse()?);
    let ad4 = "ad".parse::<GroupWord>()?.pow(4);
    let adacac4 = "adacac".parse::<GroupWord>()?.pow(4);
    for k in 0..=k_max {
        push(format!("kappa^{k}((ad)^4)"), kappa_power(&ad4, k));
        push(format!("kappa^{k}((adacac)^4)"), kappa_power(&adacac4, k));
    }
    Ok(rows)
}

/// True iff every relator of [`relator_table`] acts trivially on `level`.
pub fn relator_check(level: usize, k_max: u32) -> Result<bool> {
    Ok(relator_table(level, k_max)?.iter().all(|r| r.trivial))
}

/// Size of the orbit of `1ⁿ` under the generators (breadth-first search).
pub fn orbit_size(n: usize) -> Result<usize> {
    if n > MAX_SCHREIER_LEVEL {
        return Err(Error::SizeGuard {
            what: "level",
            value: n as u64,
            limit: MAX_SCHREIER_LEVEL as u64,
        });
    }
    let start = TreeVertex::all_ones(n)?;
    let mut seen = vec![false; 1 << n];
    seen[start.bits as usize] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for g in Generator::ALL {
            let w = act(g, v);
            if !seen[w.bits as usize] {
                seen[w.bits as usize] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    Ok(count)
}

/// Largest level [`schreier_graph`] builds.
pub const MAX_SCHREIER_LEVEL: usize = 16;

/// The Schreier graph `Γₙ`: vertices are the level-`n` words, one edge or
/// loop per generator at each vertex, rooted at `1ⁿ`.
pub fn schreier_graph(n: usize) -> Result<LabeledGraph> {
    if n == 0 || n > MAX_SCHREIER_LEVEL {
        return Err(Error::SizeGuard {
            what: "level",
            value: n as u64,
            limit: MAX_SCHREIER_LEVEL as u64,
        });
    }
    let names = level_vertices(n).map(|v| v.to_string()).collect();
    let mut g = LabeledGraph::new(names, TreeVertex::all_ones(n)?.bits as usize);
    for v in level_vertices(n) {
        for gen in Generator::ALL {
            let w = act(gen, v);
            if w.bits >= v.bits {
                g.add_edge(v.bits as usize, w.bits as usize, gen);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> TreeVertex {
        s.parse().unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(act(Generator::A, v("01")), v("11"));
        assert_eq!(act(Generator::B, v("00")), v("01"));
        for w in ["0", "00", "01", "0110", "011011"] {
            assert_eq!(act(Generator::D, v(w)), v(w));
        }
        assert_eq!(act(Generator::A, TreeVertex::root()), TreeVertex::root());
    }

    #[test]
    fn vertex_roundtrip() {
        assert_eq!(v("0110").to_string(), "0110");
        assert_eq!(v("").level(), 0);
        assert!("012".parse::<TreeVertex>().is_err());
        assert_eq!(TreeVertex::all_ones(3).unwrap(), v("111"));
    }

    #[test]
    fn words_compose_right_to_left() {
        let u = v("0101");
        assert_eq!(act_word(&GroupWord::default(), u), u);
        assert_eq!(act_word(&"aa".parse().unwrap(), u), u);
        let ab: GroupWord = "ab".parse().unwrap();
        assert_eq!(act_word(&ab, u), act(Generator::A, act(Generator::B, u)));
    }

    #[test]
    fn klein_relation() {
        let bc: GroupWord = "bc".parse().unwrap();
        let cb: GroupWord = "cb".parse().unwrap();
        for n in 0..=12 {
            for u in level_vertices(n) {
                assert_eq!(act_word(&bc, u), act(Generator::D, u));
                assert_eq!(act_word(&cb, u), act(Generator::D, u));
            }
        }
    }

    #[test]
    fn kappa_images() {
        let w: GroupWord = "abcd".parse().unwrap();
        assert_eq!(kappa(&w).to_string(), "acadbc");
        assert_eq!(kappa_power(&w, 0), w);
    }

    #[test]
    fn relators_level_8() {
        let rows = relator_table(8, 1).unwrap();
        assert!(rows.iter().all(|r| r.trivial));
        assert!(relator_check(8, 0).unwrap());
        // (ad)^2 is not a relator.
        assert!(!acts_trivially(&"adad".parse().unwrap(), 8));
        assert!(relator_check(15, 0).is_err());
        assert!(relator_check(4, 4).is_err());
    }

    #[test]
    fn orbits_are_levels() {
        for n in 0..=10 {
            assert_eq!(orbit_size(n).unwrap(), 1 << n);
        }
    }

    #[test]
    fn level_one_graph() {
        let g = schreier_graph(1).unwrap();
        assert_eq!(g.num_vertices(), 2);
        let census = g.census();
        assert_eq!(census.simple_edges, 1);
        assert_eq!(census.loops, 6);
        assert!(schreier_graph(17).is_err());
    }
}
