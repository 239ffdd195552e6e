//! Initial bounds on the equitable chromatic number.

use crate::bitset::VertexSet;
use crate::coloring::EquitableColoring;
use crate::graph::{greedy_maximal_clique, Graph};

/// Lower bound, upper bound and a coloring achieving the upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lb: usize,
    pub ub: usize,
    pub incumbent: EquitableColoring,
}

/// Bounds used to start the search: `LB = max(lower_bound, |clique|)` and the
/// heuristic coloring started at `LB`.
pub fn initial_bounds(g: &Graph, clique: &VertexSet) -> Bounds {
    let lb = lower_bound(g).max(clique.len());
    let incumbent = naive_heuristic(g, lb);
    Bounds { lb, ub: incumbent.k, incumbent }
}

/// Greedy equitable coloring: tries `k = start_k, start_k + 1, ...` until a
/// greedy pass succeeds. Always succeeds at `k = n`.
///
/// Each pass visits vertices by non-increasing degree and puts a vertex into
/// the smallest admissible class (lowest color on ties). A class is
/// admissible if no neighbor uses it and growing it keeps every size at most
/// `ceil(n/k)` with at most `n mod k` classes above `floor(n/k)`; a completed
/// pass is therefore equitable.
pub fn naive_heuristic(g: &Graph, start_k: usize) -> EquitableColoring {
    let n = g.n();
    assert!(n >= 1, "empty graph");
    let start_k = start_k.clamp(1, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in start_k..=n {
        if let Some(colors) = greedy_equitable_pass(g, &order, k) {
            return EquitableColoring { k, colors };
        }
    }
    unreachable!("a k = n pass always succeeds")
}

fn greedy_equitable_pass(g: &Graph, order: &[usize], k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let (floor, ceil, rem) = (n / k, n.div_ceil(k), n % k);
    let mut colors = vec![0usize; n];
    let mut size = vec![0usize; k + 1];
    let mut above_floor = 0;
    for &v in order {
        let mut best: Option<usize> = None;
        for j in 1..=k {
            let admissible = size[j] < floor || (size[j] < ceil && above_floor < rem);
            if !admissible || g.neighbors(v).iter().any(|w| colors[w] == j) {
                continue;
            }
            if best.is_none_or(|b| size[j] < size[b]) {
                best = Some(j);
            }
        }
        let j = best?;
        if size[j] == floor {
            above_floor += 1;
        }
        size[j] += 1;
        colors[v] = j;
    }
    Some(colors)
}

/// Lower bound: the larger of the greedy clique size and the smallest `k`
/// with `floor(n/k) <= n - Δ`.
///
/// The second term holds because the class of a maximum-degree vertex avoids
/// all of its `Δ` neighbors yet has at least `floor(n/k)` members.
pub fn lower_bound(g: &Graph) -> usize {
    greedy_maximal_clique(g).len().max(degree_bound(g))
}

pub(crate) fn degree_bound(g: &Graph) -> usize {
    let n = g.n();
    let room = n - g.max_degree();
    (1..=n).find(|&k| n / k <= room).unwrap_or(n)
}
