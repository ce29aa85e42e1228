//! Edge-labelled graphs over `{a, b, c, d}`, the graphs read off subshift
//! windows, and alignment of path-shaped graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::Generator;
use crate::word::{Letter, PointedWord};

/// An undirected labelled edge; `u == v` is a loop. Stored with `u ≤ v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: Generator,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A rooted graph with `{a, b, c, d}`-labelled edges. Vertices are dense
/// indices with display names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    names: Vec<String>,
    edges: Vec<Edge>,
    root: usize,
}

/// Edge counts of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeCensus {
    /// Vertex pairs joined by exactly one edge.
    pub simple_edges: usize,
    /// Simple edges labelled `a`.
    pub simple_a_edges: usize,
    /// Vertex pairs joined by exactly two edges.
    pub double_edges: usize,
    pub loops: usize,
}

/// A path-shaped graph read end to end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProfile {
    /// Vertices in path order.
    pub order: Vec<usize>,
    /// `links[i]` labels the edges between `order[i]` and `order[i + 1]`.
    pub links: Vec<BTreeSet<Generator>>,
    /// Loop labels at `order[i]`.
    pub loops: Vec<BTreeSet<Generator>>,
}

impl PathProfile {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn reversed(&self) -> PathProfile {
        PathProfile {
            order: self.order.iter().rev().copied().collect(),
            links: self.links.iter().rev().cloned().collect(),
            loops: self.loops.iter().rev().cloned().collect(),
        }
    }
}

impl LabeledGraph {
    pub fn new(names: Vec<String>, root: usize) -> Self {
        LabeledGraph {
            names,
            edges: Vec::new(),
            root,
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, label: Generator) {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        self.edges.push(Edge { u, v, label });
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn census(&self) -> EdgeCensus {
        let mut pairs: BTreeMap<(usize, usize), Vec<Generator>> = BTreeMap::new();
        let mut census = EdgeCensus::default();
        for e in &self.edges {
            if e.is_loop() {
                census.loops += 1;
            } else {
                pairs.entry((e.u, e.v)).or_default().push(e.label);
            }
        }
        for labels in pairs.values() {
            match labels.len() {
                1 => {
                    census.simple_edges += 1;
                    if labels[0] == Generator::A {
                        census.simple_a_edges += 1;
                    }
                }
                2 => census.double_edges += 1,
                _ => {}
            }
        }
        census
    }

    /// For each vertex, how many edge ends carry each label (a loop counts
    /// once).
    pub fn label_degrees(&self) -> Vec<[usize; 4]> {
        let mut deg = vec![[0usize; 4]; self.num_vertices()];
        for e in &self.edges {
            deg[e.u][e.label.index()] += 1;
            if !e.is_loop() {
                deg[e.v][e.label.index()] += 1;
            }
        }
        deg
    }

    /// Vertices that do not carry exactly one edge of every label.
    pub fn irregular_vertices(&self) -> Vec<usize> {
        self.label_degrees()
            .iter()
            .enumerate()
            .filter(|(_, d)| d.iter().any(|&c| c != 1))
            .map(|(v, _)| v)
            .collect()
    }

    /// No vertex carries a label twice; vertices missing labels are
    /// allowed only at the ends of the path when `allow_open_ends` is set.
    pub fn check_label_regular(&self, allow_open_ends: bool) -> Result<()> {
        let deg = self.label_degrees();
        let ends: BTreeSet<usize> = if allow_open_ends {
            let p = self.path_profile()?;
            [p.order[0], *p.order.last().unwrap()].into()
        } else {
            BTreeSet::new()
        };
        for (v, d) in deg.iter().enumerate() {
            if d.iter().any(|&c| c > 1) {
                return Err(Error::InvalidArgument(format!(
                    "vertex {} repeats a label",
                    self.names[v]
                )));
            }
            if d.contains(&0) && !ends.contains(&v) {
                return Err(Error::InvalidArgument(format!(
                    "vertex {} lacks a label",
                    self.names[v]
                )));
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let adj = self.neighbours();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn neighbours(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.num_vertices()];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        adj
    }

    /// Reads a path-shaped graph from its lower-indexed end.
    pub fn path_profile(&self) -> Result<PathProfile> {
        let n = self.num_vertices();
        if n == 0 {
            return Err(Error::NotPathShaped("empty graph".into()));
        }
        let adj = self.neighbours();
        if let Some(v) = adj.iter().position(|a| a.len() > 2) {
            return Err(Error::NotPathShaped(format!(
                "vertex {} has {} neighbours",
                self.names[v],
                adj[v].len()
            )));
        }
        let start = if n == 1 {
            0
        } else {
            adj.iter()
                .position(|a| a.len() == 1)
                .ok_or_else(|| Error::NotPathShaped("no endpoint (cycle)".into()))?
        };
        let mut order = Vec::with_capacity(n);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            order.push(cur);
            match adj[cur].iter().find(|&&w| w != prev) {
                Some(&next) if order.len() < n => {
                    prev = cur;
                    cur = next;
                }
                Some(_) => return Err(Error::NotPathShaped("contains a cycle".into())),
                None => break,
            }
        }
        if order.len() != n {
            return Err(Error::NotPathShaped("disconnected".into()));
        }
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut links = vec![BTreeSet::new(); n - 1];
        let mut loops = vec![BTreeSet::new(); n];
        for e in &self.edges {
            if e.is_loop() {
                loops[pos[e.u]].insert(e.label);
            } else {
                let i = pos[e.u].min(pos[e.v]);
                links[i].insert(e.label);
            }
        }
        Ok(PathProfile {
            order,
            links,
            loops,
        })
    }

    /// Edge-list text: a `root <v>` header, then one `v w label` line per
    /// edge (`v v label` for loops).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "root {}", self.names[self.root]).unwrap();
        for e in &self.edges {
            let (mut u, mut v) = (&self.names[e.u], &self.names[e.v]);
            if v < u {
                std::mem::swap(&mut u, &mut v);
            }
            writeln!(out, "{u} {v} {}", e.label).unwrap();
        }
        out
    }

    /// Parses [`LabeledGraph::to_edge_list`] output. Vertex indices follow
    /// first appearance, root first.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing root header".into(),
        })?;
        let root_name = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["root", v] => v.to_string(),
            _ => {
                return Err(Error::Parse {
                    line: line_no + 1,
                    msg: "expected `root <v>`".into(),
                })
            }
        };
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut names = Vec::new();
        let mut intern = |name: &str, names: &mut Vec<String>| -> usize {
            *ids.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            })
        };
        let root = intern(&root_name, &mut names);
        let mut edges = Vec::new();
        for (i, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v, label] = parts.as_slice() else {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "expected `v w label`".into(),
                });
            };
            let mut chars = label.chars();
            let label = match (chars.next(), chars.next()) {
                (Some(c), None) => Generator::from_char(c).map_err(|e| Error::Parse {
                    line: i + 1,
                    msg: e.to_string(),
                })?,
                _ => {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("bad label {label:?}"),
                    })
                }
            };
            let (u, v) = (intern(u, &mut names), intern(v, &mut names));
            edges.push((u, v, label));
        }
        let mut g = LabeledGraph::new(names, root);
        for (u, v, l) in edges {
            g.add_edge(u, v, l);
        }
        Ok(g)
    }
}

/// Edge labels between `n` and `n + 1` and the loop label at both ends for
/// a letter of `ω`.
pub fn letter_edges(letter: Letter) -> (&'static [Generator], Option<Generator>) {
    use Generator::*;
    match letter {
        Letter::A => (&[A], None),
        Letter::X => (&[B, C], Some(D)),
        Letter::Y => (&[B, D], Some(C)),
        Letter::Z => (&[C, D], Some(B)),
    }
}

/// The graph of a window: one vertex per sequence coordinate from
/// `first_coord` to `last_coord + 1`, edges between `k` and `k + 1` from
/// `ωₖ`, rooted at coordinate 1.
pub fn graph_from_window(w: &PointedWord) -> LabeledGraph {
    let len = w.len();
    let first = w.first_coord();
    let names = (0..=len as i64).map(|i| (first + i).to_string()).collect();
    let mut g = LabeledGraph::new(names, w.origin() - 1);
    for (i, &l) in w.word().letters().iter().enumerate() {
        let (links, lp) = letter_edges(l);
        for &label in links {
            g.add_edge(i, i + 1, label);
        }
        if let Some(label) = lp {
            g.add_edge(i, i, label);
            g.add_edge(i + 1, i + 1, label);
        }
    }
    g
}

/// Which graph of a comparison an entry belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Where a discrepancy sits along the aligned path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiffSite {
    /// Loop at path vertex `i`.
    Loop(usize),
    /// Edge between path vertices `i` and `i + 1`.
    Link(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffEntry {
    pub site: DiffSite,
    pub label: Generator,
    pub only_in: Side,
}

/// Edges present in exactly one of two aligned path graphs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphDiff {
    pub path_len: usize,
    /// True when the right graph was read in reverse.
    pub reversed: bool,
    pub entries: Vec<DiffEntry>,
}

impl GraphDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn loops_only(&self) -> bool {
        self.entries
            .iter()
            .all(|e| matches!(e.site, DiffSite::Loop(_)))
    }

    /// Every discrepancy is a loop at the first or last path vertex.
    pub fn confined_to_end_loops(&self) -> bool {
        let last = self.path_len.saturating_sub(1);
        self.entries
            .iter()
            .all(|e| matches!(e.site, DiffSite::Loop(i) if i == 0 || i == last))
    }
}

fn diff_profiles(a: &PathProfile, b: &PathProfile, reversed: bool) -> Option<GraphDiff> {
    let a_pattern = a.links.iter().map(|s| s.contains(&Generator::A));
    let b_pattern = b.links.iter().map(|s| s.contains(&Generator::A));
    if !a_pattern.eq(b_pattern) {
        return None;
    }
    let mut entries = Vec::new();
    let mut sym = |site: DiffSite, x: &BTreeSet<Generator>, y: &BTreeSet<Generator>| {
        for &label in x.difference(y) {
            entries.push(DiffEntry {
                site,
                label,
                only_in: Side::Left,
            });
        }
        for &label in y.difference(x) {
            entries.push(DiffEntry {
                site,
                label,
                only_in: Side::Right,
            });
        }
    };
    for (i, (x, y)) in a.loops.iter().zip(&b.loops).enumerate() {
        sym(DiffSite::Loop(i), x, y);
    }
    for (i, (x, y)) in a.links.iter().zip(&b.links).enumerate() {
        sym(DiffSite::Link(i), x, y);
    }
    entries.sort();
    Some(GraphDiff {
        path_len: a.len(),
        reversed,
        entries,
    })
}

/// Aligns two path-shaped graphs end to end, trying both orientations of
/// `g2`, and lists the edges and loops found in only one of them. The
/// positions of `a`-edges must agree.
pub fn compare_graphs(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<GraphDiff> {
    let a = g1.path_profile()?;
    let b = g2.path_profile()?;
    if a.len() != b.len() {
        return Err(Error::AlignmentImpossible(format!(
            "paths have {} and {} vertices",
            a.len(),
            b.len()
        )));
    }
    let forward = diff_profiles(&a, &b, false);
    let backward = diff_profiles(&a, &b.reversed(), true);
    match (forward, backward) {
        (Some(f), Some(r)) => Ok(if r.len() < f.len() { r } else { f }),
        (Some(d), None) | (None, Some(d)) => Ok(d),
        (None, None) => Err(Error::AlignmentImpossible(
            "a-edge positions differ in both orientations".into(),
        )),
    }
}
