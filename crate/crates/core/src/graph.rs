//! Simple undirected graphs, DIMACS `.col` I/O, seeded random instances and
//! a greedy maximal clique.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no `p edge <n> <m>` problem line found")]
    MissingProblemLine,
    #[error("density {0} outside [0, 1]")]
    Density(f64),
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) is invalid for a graph on {2} vertices")]
    BadEdge(usize, usize, usize),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable once built; adjacency is kept both as bit sets (for the
/// search) and as degree counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    degree: Vec<usize>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            degree: vec![0; n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::BadEdge(u, v, n));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Inserts `{u, v}`; returns false if the edge was already present.
    fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.m += 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.degree[u]
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn density(&self) -> f64 {
        let n = self.n() as f64;
        if self.n() < 2 {
            0.0
        } else {
            self.m as f64 / (n * (n - 1.0) / 2.0)
        }
    }

    /// True if every pair of distinct members is adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| {
            let mut others = set.clone();
            others.remove(u);
            others.is_subset(&self.adj[u])
        })
    }

    /// Serializes in DIMACS `.col` format with 1-based vertex labels.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p edge {} {}", self.n(), self.m).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
        }
        out
    }
}

/// Parses a DIMACS `.col` graph.
///
/// The edge count declared on the `p` line is not trusted; duplicate and
/// reversed edge lines collapse into one undirected edge.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| GraphError::Parse { line: line_no, msg };
        let line = raw.trim();
        let mut tokens = line.split_ascii_whitespace();
        let Some(tag) = tokens.next() else {
            continue;
        };
        match tag {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                let format = tokens.next().ok_or_else(|| err("missing format in problem line".into()))?;
                if format != "edge" && format != "col" {
                    return Err(err(format!("unsupported problem format `{format}`")));
                }
                let n: usize = parse_token(tokens.next(), "vertex count", line_no)?;
                let _m: usize = parse_token(tokens.next(), "edge count", line_no)?;
                if n == 0 {
                    return Err(err("vertex count must be positive".into()));
                }
                graph = Some(Graph::empty(n));
            }
            "e" => {
                let g = graph.as_mut().ok_or(GraphError::MissingProblemLine)?;
                let u: usize = parse_token(tokens.next(), "edge endpoint", line_no)?;
                let v: usize = parse_token(tokens.next(), "edge endpoint", line_no)?;
                let n = g.n();
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(format!("vertex {x} outside [1, {n}]")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop on vertex {u}")));
                }
                g.add_edge(u - 1, v - 1);
            }
            // Node descriptors / colors in some .col files carry no edges.
            "n" => continue,
            other => return Err(err(format!("unexpected line tag `{other}`"))),
        }
    }
    graph.ok_or(GraphError::MissingProblemLine)
}

fn parse_token(tok: Option<&str>, what: &str, line: usize) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("malformed {what} `{tok}`"),
    })
}

/// G(n, p) graph: every pair `u < v`, visited in lexicographic order, is an
/// edge with probability `density`, drawn from a ChaCha8 stream seeded with
/// `seed`.
pub fn random_graph(n: usize, density: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(GraphError::Density(density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < density {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Greedy maximal clique: start from a maximum-degree vertex and keep adding
/// the highest-degree vertex adjacent to every member. Ties go to the lowest
/// index.
pub fn greedy_maximal_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut clique = VertexSet::new(n);
    if n == 0 {
        return clique;
    }
    let mut candidates = VertexSet::full(n);
    loop {
        let best = candidates
            .iter()
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
        let Some(v) = best else { break };
        clique.insert(v);
        candidates.remove(v);
        candidates.intersect_with(g.neighbors(v));
    }
    clique
}
