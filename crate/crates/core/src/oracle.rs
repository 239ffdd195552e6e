//! Exhaustive equitable chromatic number for small graphs, used as ground
//! truth in tests. Shares nothing with the branch-and-bound beyond [`Graph`].

use thiserror::Error;

use crate::coloring::EquitableColoring;
use crate::graph::Graph;

pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph has {n} vertices, brute force is limited to {max_n}")]
pub struct TooLarge {
    pub n: usize,
    pub max_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub chi_eq: usize,
    pub witness: EquitableColoring,
}

/// Tries `k = 1, 2, ...` and enumerates every assignment of colors `1..=k`
/// in canonical form (vertex 0 gets color 1, a new color is always the next
/// unused one). Branches where a class exceeds `ceil(n/k)` are cut.
pub fn brute_force_chi_eq(g: &Graph, max_n: usize) -> Result<OracleResult, TooLarge> {
    let n = g.n();
    if n > max_n {
        return Err(TooLarge { n, max_n });
    }
    for k in 1..=n {
        let mut colors = vec![0; n];
        let mut sizes = vec![0; k + 1];
        if assign(g, k, 0, 0, &mut colors, &mut sizes) {
            return Ok(OracleResult { chi_eq: k, witness: EquitableColoring { k, colors } });
        }
    }
    unreachable!("n singleton classes always form an equitable coloring")
}

fn assign(g: &Graph, k: usize, v: usize, used: usize, colors: &mut [usize], sizes: &mut [usize]) -> bool {
    let n = colors.len();
    if v == n {
        let (lo, hi) = (n / k, n.div_ceil(k));
        return used == k && sizes[1..].iter().all(|&s| lo <= s && s <= hi);
    }
    let hi = n.div_ceil(k);
    for c in 1..=(used + 1).min(k) {
        if sizes[c] == hi || (0..v).any(|w| colors[w] == c && g.has_edge(v, w)) {
            continue;
        }
        colors[v] = c;
        sizes[c] += 1;
        if assign(g, k, v + 1, used.max(c), colors, sizes) {
            return true;
        }
        sizes[c] -= 1;
        colors[v] = 0;
    }
    false
}
