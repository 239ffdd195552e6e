//! Partial colorings, the vertex-insertion step of the enumeration, the
//! equity validator and the two equity pruning predicates.
//!
//! Colors are 1-based throughout; color 0 marks an uncolored vertex.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::{BitSet, VertexSet};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("the initial vertex set is not a clique")]
    NotAClique,
    #[error("the initial clique is empty")]
    EmptyClique,
    #[error("vertex {0} is already colored")]
    AlreadyColored(usize),
    #[error("color {color} is not feasible for vertex {vertex}")]
    Infeasible { vertex: usize, color: usize },
    #[error("color {color} outside 1..={max}")]
    ColorOutOfRange { color: usize, max: usize },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("upper bound {0} too small for the P.1 test (needs UB >= 2)")]
    UpperBoundTooSmall(usize),
    #[error("malformed coloring text at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A complete coloring with `k` colors, stored as one color in `1..=k` per
/// vertex. Use [`validate_equitable`] to check it against a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitableColoring {
    pub k: usize,
    pub colors: Vec<usize>,
}

impl EquitableColoring {
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.colors {
            if (1..=self.k).contains(&c) {
                sizes[c - 1] += 1;
            }
        }
        sizes
    }

    /// Solution text: `s <k>` followed by `<vertex> <color>` lines, both 1-based.
    pub fn to_solution_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "s {}", self.k).unwrap();
        for (v, c) in self.colors.iter().enumerate() {
            writeln!(out, "{} {}", v + 1, c).unwrap();
        }
        out
    }

    /// Inverse of [`to_solution_text`](Self::to_solution_text).
    pub fn parse_solution_text(text: &str) -> Result<Self, ColoringError> {
        let err = |line, msg: &str| ColoringError::Parse { line, msg: msg.to_string() };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| err(1, "missing `s <k>` header"))?;
        let k = match header.split_ascii_whitespace().collect::<Vec<_>>()[..] {
            ["s", k] => k.parse().map_err(|_| err(1, "bad color count"))?,
            _ => return Err(err(1, "missing `s <k>` header")),
        };
        let mut colors = Vec::new();
        for (i, line) in lines {
            let nums: Vec<usize> = line
                .split_ascii_whitespace()
                .map(|t| t.parse())
                .collect::<Result<_, _>>()
                .map_err(|_| err(i + 1, "expected `<vertex> <color>`"))?;
            match nums[..] {
                [v, c] if v == colors.len() + 1 => colors.push(c),
                [_, _] => return Err(err(i + 1, "vertices must be listed in order 1..n")),
                _ => return Err(err(i + 1, "expected `<vertex> <color>`")),
            }
        }
        Ok(EquitableColoring { k, colors })
    }
}

/// True iff `c` is a proper coloring of `g` whose `k` classes are all
/// nonempty with sizes in `[floor(n/k), ceil(n/k)]`.
pub fn validate_equitable(g: &Graph, c: &EquitableColoring) -> Result<bool, ColoringError> {
    let n = g.n();
    if c.colors.len() != n {
        return Err(ColoringError::LengthMismatch { got: c.colors.len(), expected: n });
    }
    if let Some(&bad) = c.colors.iter().find(|&&col| col == 0 || col > c.k) {
        return Err(ColoringError::ColorOutOfRange { color: bad, max: c.k });
    }
    if c.k == 0 {
        return Ok(false);
    }
    if g.edges().any(|(u, v)| c.colors[u] == c.colors[v]) {
        return Ok(false);
    }
    let (lo, hi) = (n / c.k, n.div_ceil(c.k));
    Ok(c.class_sizes().iter().all(|&s| s >= 1 && lo <= s && s <= hi))
}

/// P.1 evaluated on raw quantities: `n` vertices, upper bound `ub >= 2`,
/// largest class `max_size`, the sizes of the nonempty classes and the number
/// of uncolored vertices.
pub fn p1_condition(n: usize, ub: usize, max_size: usize, sizes: &[usize], uncolored: usize) -> bool {
    let target = max_size.saturating_sub(1).max(n / (ub - 1));
    let mut deficit = 0;
    for &s in sizes {
        deficit += target.saturating_sub(s);
        if deficit > uncolored {
            return false;
        }
    }
    true
}

/// P.2 evaluated on raw quantities: `max_size <= ceil(n / max{k, lb})`.
pub fn p2_condition(n: usize, k: usize, lb: usize, max_size: usize) -> bool {
    max_size <= n.div_ceil(k.max(lb).max(1))
}

/// Record of one insertion, enough to undo it.
#[derive(Clone, Copy, Debug)]
pub struct Undo {
    vertex: usize,
    color: usize,
    prev_k: usize,
    prev_max: usize,
}

/// Partial coloring state: `k` nonempty classes `1..=k`, the uncolored set
/// and, for every uncolored vertex, its feasible colors.
///
/// Feasibility is tracked through per-vertex counts of colored neighbors per
/// color; `F(u)` is the set of colors in `1..=n` with a zero count. Only the
/// entries of uncolored vertices are meaningful.
#[derive(Clone, Debug)]
pub struct PartialColoring {
    n: usize,
    k: usize,
    color: Vec<usize>,
    class_size: Vec<usize>,
    max_size: usize,
    uncolored: VertexSet,
    /// `neighbor_count[u * (n + 1) + j]`: colored neighbors of `u` with color `j`.
    neighbor_count: Vec<u32>,
    /// Complement of `F(u)` within `1..=n`.
    forbidden: Vec<BitSet>,
    /// `|forbidden[u]|`.
    saturation: Vec<usize>,
}

impl PartialColoring {
    /// Builds `Π_Q`: the i-th member of `clique` (ascending) gets color `i`.
    pub fn from_clique(g: &Graph, clique: &VertexSet) -> Result<Self, ColoringError> {
        if clique.is_empty() {
            return Err(ColoringError::EmptyClique);
        }
        if !g.is_clique(clique) {
            return Err(ColoringError::NotAClique);
        }
        let n = g.n();
        let mut pc = PartialColoring {
            n,
            k: 0,
            color: vec![0; n],
            class_size: vec![0; n + 1],
            max_size: 0,
            uncolored: VertexSet::full(n),
            neighbor_count: vec![0; n * (n + 1)],
            forbidden: vec![BitSet::new(n + 1); n],
            saturation: vec![0; n],
        };
        for (i, v) in clique.iter().enumerate() {
            pc.apply(g, v, i + 1);
        }
        Ok(pc)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nonempty classes.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest class size, `M`.
    #[inline]
    pub fn max_class_size(&self) -> usize {
        self.max_size
    }

    /// Size of class `j` (0 for unused colors).
    #[inline]
    pub fn class_size(&self, j: usize) -> usize {
        self.class_size[j]
    }

    /// Color of `v`, 0 when uncolored.
    #[inline]
    pub fn color_of(&self, v: usize) -> usize {
        self.color[v]
    }

    #[inline]
    pub fn uncolored(&self) -> &VertexSet {
        &self.uncolored
    }

    /// Vertices of class `j`.
    pub fn class(&self, j: usize) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n, (0..self.n).filter(|&v| self.color[v] == j && j != 0))
    }

    /// Whether `j` is in `F(v)`.
    #[inline]
    pub fn is_feasible(&self, v: usize, j: usize) -> bool {
        (1..=self.n).contains(&j) && self.neighbor_count[v * (self.n + 1) + j] == 0
    }

    /// Colors excluded from `F(v)`; always a subset of `1..=k`.
    #[inline]
    pub fn forbidden(&self, v: usize) -> &BitSet {
        &self.forbidden[v]
    }

    /// Saturation degree: number of distinct colors among colored neighbors.
    #[inline]
    pub fn saturation(&self, v: usize) -> usize {
        self.saturation[v]
    }

    /// `F(v)` as a sorted list of colors in `1..=n`.
    pub fn feasible_colors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.is_feasible(v, j)).collect()
    }

    /// Value-level insertion `⟨u,j⟩↪Π`: returns the extended coloring and
    /// leaves `self` untouched.
    pub fn extend(&self, g: &Graph, u: usize, j: usize) -> Result<Self, ColoringError> {
        let mut next = self.clone();
        next.try_apply(g, u, j)?;
        Ok(next)
    }

    /// In-place insertion with precondition checks.
    pub fn try_apply(&mut self, g: &Graph, u: usize, j: usize) -> Result<Undo, ColoringError> {
        if self.color[u] != 0 {
            return Err(ColoringError::AlreadyColored(u));
        }
        if j == 0 || j > self.k + 1 {
            return Err(ColoringError::ColorOutOfRange { color: j, max: self.k + 1 });
        }
        if !self.is_feasible(u, j) {
            return Err(ColoringError::Infeasible { vertex: u, color: j });
        }
        Ok(self.apply(g, u, j))
    }

    /// In-place insertion without precondition checks; pair with [`undo`](Self::undo).
    #[inline]
    pub fn apply(&mut self, g: &Graph, u: usize, j: usize) -> Undo {
        debug_assert!(self.color[u] == 0 && self.is_feasible(u, j) && j <= self.k + 1);
        let undo = Undo { vertex: u, color: j, prev_k: self.k, prev_max: self.max_size };
        self.color[u] = j;
        self.uncolored.remove(u);
        self.class_size[j] += 1;
        self.k = self.k.max(j);
        self.max_size = self.max_size.max(self.class_size[j]);
        let stride = self.n + 1;
        for v in g.neighbors(u).iter() {
            if self.color[v] == 0 {
                let cnt = &mut self.neighbor_count[v * stride + j];
                *cnt += 1;
                if *cnt == 1 {
                    self.forbidden[v].insert(j);
                    self.saturation[v] += 1;
                }
            }
        }
        undo
    }

    /// Reverts the most recent un-reverted [`apply`](Self::apply).
    #[inline]
    pub fn undo(&mut self, g: &Graph, undo: Undo) {
        let Undo { vertex: u, color: j, prev_k, prev_max } = undo;
        debug_assert_eq!(self.color[u], j);
        let stride = self.n + 1;
        for v in g.neighbors(u).iter() {
            if self.color[v] == 0 {
                let cnt = &mut self.neighbor_count[v * stride + j];
                *cnt -= 1;
                if *cnt == 0 {
                    self.forbidden[v].remove(j);
                    self.saturation[v] -= 1;
                }
            }
        }
        self.color[u] = 0;
        self.uncolored.insert(u);
        self.class_size[j] -= 1;
        self.k = prev_k;
        self.max_size = prev_max;
    }

    /// Property P.1 for upper bound `ub`:
    /// `|U| >= Σ_{r<=k} (max{M-1, floor(n/(ub-1))} - |C_r|)^+`.
    pub fn check_p1(&self, ub: usize) -> Result<bool, ColoringError> {
        if ub <= 1 {
            return Err(ColoringError::UpperBoundTooSmall(ub));
        }
        Ok(self.p1_holds(ub))
    }

    /// P.1 without the `ub >= 2` guard.
    #[inline]
    pub fn p1_holds(&self, ub: usize) -> bool {
        p1_condition(self.n, ub, self.max_size, &self.class_size[1..=self.k], self.uncolored.len())
    }

    /// Property P.2 for lower bound `lb`: `M <= ceil(n / max{k, lb})`.
    #[inline]
    pub fn check_p2(&self, lb: usize) -> bool {
        p2_condition(self.n, self.k, lb, self.max_size)
    }

    /// Whether the coloring is complete and its class sizes are balanced.
    pub fn is_complete_equitable(&self) -> bool {
        if !self.uncolored.is_empty() || self.k == 0 {
            return false;
        }
        let (lo, hi) = (self.n / self.k, self.n.div_ceil(self.k));
        (1..=self.k).all(|j| (lo..=hi).contains(&self.class_size[j]))
    }

    /// Snapshot as a complete coloring; `None` while vertices remain uncolored.
    pub fn to_coloring(&self) -> Option<EquitableColoring> {
        self.uncolored.is_empty().then(|| EquitableColoring { k: self.k, colors: self.color.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_dimacs;

    fn vs(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_iter_with_capacity(n, xs.iter().copied())
    }

    /// Recomputes F(u) from scratch for every uncolored vertex.
    fn assert_f_consistent(g: &Graph, pc: &PartialColoring) {
        for u in pc.uncolored().iter() {
            for j in 1..=g.n() {
                let blocked = g.neighbors(u).iter().any(|v| pc.color_of(v) == j);
                assert_eq!(pc.is_feasible(u, j), !blocked, "u={u} j={j}");
            }
            assert!(pc.forbidden(u).iter().all(|j| (1..=pc.k()).contains(&j)));
            assert_eq!(pc.saturation(u), pc.forbidden(u).len());
        }
        let colored: usize = (1..=pc.k()).map(|j| pc.class_size(j)).sum();
        assert_eq!(colored + pc.uncolored().len(), g.n());
        assert!((1..=pc.k()).all(|j| pc.class_size(j) > 0));
        assert_eq!(pc.max_class_size(), (1..=pc.k()).map(|j| pc.class_size(j)).max().unwrap_or(0));
    }

    #[test]
    fn initial_on_path() {
        let g = Graph::path(3);
        let pc = PartialColoring::from_clique(&g, &vs(3, &[0, 1])).unwrap();
        assert_eq!(pc.k(), 2);
        assert_eq!((pc.color_of(0), pc.color_of(1), pc.color_of(2)), (1, 2, 0));
        assert_eq!(pc.uncolored().iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(pc.feasible_colors(2), vec![1, 3]);
        assert_f_consistent(&g, &pc);
    }

    #[test]
    fn initial_full_clique() {
        let g = Graph::complete(3);
        let pc = PartialColoring::from_clique(&g, &VertexSet::full(3)).unwrap();
        assert_eq!(pc.k(), 3);
        assert!(pc.uncolored().is_empty());
    }

    #[test]
    fn initial_on_c5() {
        let g = Graph::cycle(5);
        let pc = PartialColoring::from_clique(&g, &vs(5, &[0, 1])).unwrap();
        assert!(!pc.is_feasible(2, 2) && pc.is_feasible(2, 1));
        assert!(!pc.is_feasible(4, 1) && pc.is_feasible(4, 2));
        assert!(pc.is_feasible(3, 1) && pc.is_feasible(3, 2));
    }

    #[test]
    fn initial_rejects_non_clique() {
        let g = Graph::path(3);
        assert_eq!(PartialColoring::from_clique(&g, &vs(3, &[0, 2])).unwrap_err(), ColoringError::NotAClique);
        assert_eq!(PartialColoring::from_clique(&g, &vs(3, &[])).unwrap_err(), ColoringError::EmptyClique);
    }

    #[test]
    fn extend_examples() {
        let g = Graph::path(3);
        let pc = PartialColoring::from_clique(&g, &vs(3, &[0, 1])).unwrap();
        let next = pc.extend(&g, 2, 1).unwrap();
        assert_eq!(next.k(), 2);
        assert_eq!(next.class(1).iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(next.uncolored().is_empty());
        // original untouched
        assert_eq!(pc.color_of(2), 0);

        let c5 = Graph::cycle(5);
        let pc = PartialColoring::from_clique(&c5, &vs(5, &[0, 1])).unwrap();
        let next = pc.extend(&c5, 3, 1).unwrap();
        assert_eq!(next.feasible_colors(2), vec![3, 4, 5]);
        // 4 already lacked color 1 (neighbor 0), so its set is unchanged
        assert_eq!(next.feasible_colors(4), vec![2, 3, 4, 5]);
        assert_eq!(next.feasible_colors(4), pc.feasible_colors(4));
        assert_f_consistent(&c5, &next);

        let fresh = pc.extend(&c5, 3, 3).unwrap();
        assert_eq!(fresh.k(), 3);
        for v in [2, 4] {
            assert!(fresh.feasible_colors(v).len() <= pc.feasible_colors(v).len());
        }
    }

    #[test]
    fn extend_errors() {
        let g = Graph::path(3);
        let pc = PartialColoring::from_clique(&g, &vs(3, &[0, 1])).unwrap();
        assert_eq!(pc.extend(&g, 2, 2).unwrap_err(), ColoringError::Infeasible { vertex: 2, color: 2 });
        assert_eq!(pc.extend(&g, 0, 3).unwrap_err(), ColoringError::AlreadyColored(0));
        assert_eq!(pc.extend(&g, 2, 4).unwrap_err(), ColoringError::ColorOutOfRange { color: 4, max: 3 });
    }

    #[test]
    fn apply_undo_restores_state() {
        let g = parse_dimacs("p edge 5 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 1 3\n").unwrap();
        let pc0 = PartialColoring::from_clique(&g, &vs(5, &[0, 1, 2])).unwrap();
        let mut pc = pc0.clone();
        let u1 = pc.apply(&g, 3, 1);
        assert_f_consistent(&g, &pc);
        let u2 = pc.apply(&g, 4, 2);
        assert_f_consistent(&g, &pc);
        pc.undo(&g, u2);
        pc.undo(&g, u1);
        assert_f_consistent(&g, &pc);
        assert_eq!(pc.color, pc0.color);
        assert_eq!(pc.neighbor_count, pc0.neighbor_count);
        assert_eq!(pc.forbidden, pc0.forbidden);
        assert_eq!(pc.saturation, pc0.saturation);
        assert_eq!((pc.k, pc.max_size), (pc0.k, pc0.max_size));
    }

    /// State with given class sizes and `free` uncolored vertices on an
    /// edgeless graph.
    fn with_sizes(sizes: &[usize], free: usize) -> (Graph, PartialColoring) {
        let n = sizes.iter().sum::<usize>() + free;
        let g = Graph::empty(n);
        let mut pc = PartialColoring::from_clique(&g, &vs(n, &[0])).unwrap();
        let mut v = 1;
        for (i, &s) in sizes.iter().enumerate() {
            for _ in 0..s - usize::from(i == 0) {
                pc.apply(&g, v, i + 1);
                v += 1;
            }
        }
        (g, pc)
    }

    #[test]
    fn p1_examples() {
        // threshold max{2, floor(10/3)} = 3, deficit 0 + 2 + 2 = 4 <= 5
        let (_, pc) = with_sizes(&[3, 1, 1], 5);
        assert_eq!((pc.n(), pc.k(), pc.max_class_size()), (10, 3, 3));
        assert_eq!(pc.check_p1(4), Ok(true));
        // same counts with only 3 uncolored vertices: 3 < 4
        assert!(!p1_condition(10, 4, 3, &[3, 1, 1], 3));
        // complete balanced state
        let (_, pc) = with_sizes(&[2, 2, 2], 0);
        assert_eq!(pc.check_p1(4), Ok(true));
        assert!(pc.is_complete_equitable());
        assert_eq!(pc.check_p1(1), Err(ColoringError::UpperBoundTooSmall(1)));
    }

    /// Reference evaluation of P.1 straight from the formula.
    fn p1_formula(n: usize, ub: usize, sizes: &[usize], free: usize) -> bool {
        let m = *sizes.iter().max().unwrap();
        let t = (m as i64 - 1).max((n / (ub - 1)) as i64);
        let deficit: i64 = sizes.iter().map(|&s| (t - s as i64).max(0)).sum();
        free as i64 >= deficit
    }

    #[test]
    fn p1_matches_formula_on_small_states() {
        for a in 1..5 {
            for b in 1..5 {
                for c in 1..5 {
                    for free in 0..6 {
                        let (_, pc) = with_sizes(&[a, b, c], free);
                        for ub in 4..8 {
                            assert_eq!(pc.p1_holds(ub), p1_formula(pc.n(), ub, &[a, b, c], free));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn p2_examples() {
        let (_, pc) = with_sizes(&[3, 1, 1], 5);
        assert!(pc.check_p2(4));
        assert!(!p2_condition(10, 3, 4, 4));
        let (_, pc) = with_sizes(&[2, 2, 2, 2, 2], 0);
        assert_eq!((pc.n(), pc.k()), (10, 5));
        assert!(pc.check_p2(2));
    }

    #[test]
    fn validate_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        let c = EquitableColoring { k: 2, colors: vec![1, 1, 1, 2, 2, 2] };
        assert_eq!(validate_equitable(&k33, &c), Ok(true));
        assert_eq!(c.class_sizes(), vec![3, 3]);

        let c5 = Graph::cycle(5);
        let c = EquitableColoring { k: 3, colors: vec![1, 2, 1, 2, 3] };
        assert_eq!(validate_equitable(&c5, &c), Ok(true));

        let star = Graph::star(3);
        let c = EquitableColoring { k: 2, colors: vec![1, 2, 2, 2] };
        assert_eq!(validate_equitable(&star, &c), Ok(false));

        let improper = EquitableColoring { k: 3, colors: vec![1, 1, 2, 2, 3] };
        assert_eq!(validate_equitable(&c5, &improper), Ok(false));
        let empty_class = EquitableColoring { k: 4, colors: vec![1, 2, 1, 2, 3] };
        assert_eq!(validate_equitable(&c5, &empty_class), Ok(false));
        let bad = EquitableColoring { k: 2, colors: vec![1, 2, 1, 2, 3] };
        assert_eq!(validate_equitable(&c5, &bad), Err(ColoringError::ColorOutOfRange { color: 3, max: 2 }));
        let short = EquitableColoring { k: 2, colors: vec![1, 2] };
        assert!(matches!(validate_equitable(&c5, &short), Err(ColoringError::LengthMismatch { .. })));
    }

    #[test]
    fn solution_text_round_trip() {
        let c = EquitableColoring { k: 3, colors: vec![1, 2, 1, 2, 3] };
        let text = c.to_solution_text();
        assert!(text.starts_with("s 3\n1 1\n2 2\n"));
        assert_eq!(EquitableColoring::parse_solution_text(&text), Ok(c));
        assert!(EquitableColoring::parse_solution_text("1 1\n").is_err());
        assert!(EquitableColoring::parse_solution_text("s 2\n2 1\n").is_err());
    }
}
