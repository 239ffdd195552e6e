//! DSatur-style branch-and-bound for the equitable chromatic number.
//!
//! The enumeration follows Brown's scheme: starting from a coloring of a
//! maximal clique, repeatedly pick an uncolored vertex and branch over its
//! feasible colors below the incumbent. In [`Pruning::Equity`] mode a child
//! is only explored if it still satisfies the two equity conditions P.1 and
//! P.2, which makes every complete leaf equitable without an explicit test.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::bounds::{initial_bounds, Bounds};
use crate::coloring::{EquitableColoring, PartialColoring, Undo};
use crate::graph::{greedy_maximal_clique, Graph};

/// Rule picking the next vertex to color. All three start from the
/// vertices of maximum saturation degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Tie-break by degree in the uncolored subgraph.
    Brelaz,
    /// Tie-break by shared feasible colors with uncolored neighbors.
    Sewell,
    /// Like `Sewell`, but only neighbors inside the candidate set count.
    Pass,
}

/// Order in which the feasible colors of the selected vertex are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColorOrder {
    /// Ascending color index (EqDS1).
    Index,
    /// Ascending class size, ties by index (EqDS2).
    SizeAsc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pruning {
    /// Children must satisfy P.1 and P.2.
    Equity,
    /// Plain enumeration; equity is tested only on complete colorings.
    Trivial,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("unknown {what} `{value}`")]
pub struct ParseConfigError {
    what: &'static str,
    value: String,
}

macro_rules! keyword_enum {
    ($ty:ident, $what:literal, $($variant:ident => $name:literal),+) => {
        impl $ty {
            pub const ALL: &'static [$ty] = &[$($ty::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($ty::$variant => $name),+
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $ty {
            type Err = ParseConfigError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.to_ascii_lowercase().as_str() {
                    $($name => Ok($ty::$variant),)+
                    _ => Err(ParseConfigError { what: $what, value: s.to_string() }),
                }
            }
        }
    };
}

keyword_enum!(Strategy, "strategy", Brelaz => "brelaz", Sewell => "sewell", Pass => "pass");
keyword_enum!(ColorOrder, "color order", Index => "index", SizeAsc => "size");
keyword_enum!(Pruning, "pruning mode", Equity => "equity", Trivial => "trivial");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub strategy: Strategy,
    pub color_order: ColorOrder,
    pub pruning: Pruning,
    pub time_limit: Duration,
    pub node_limit: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            strategy: Strategy::Pass,
            color_order: ColorOrder::SizeAsc,
            pruning: Pruning::Equity,
            time_limit: Duration::from_secs(7200),
            node_limit: None,
        }
    }
}

impl SolverConfig {
    pub fn new(strategy: Strategy, color_order: ColorOrder, pruning: Pruning) -> Self {
        SolverConfig { strategy, color_order, pruning, ..Default::default() }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = limit;
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    /// Every strategy × order × pruning combination.
    pub fn all() -> Vec<SolverConfig> {
        let mut out = Vec::new();
        for &s in Strategy::ALL {
            for &o in ColorOrder::ALL {
                for &p in Pruning::ALL {
                    out.push(SolverConfig::new(s, o, p));
                }
            }
        }
        out
    }

    /// Short label such as `pass/size/equity`.
    pub fn label(&self) -> String {
        format!("{}/{}/{}", self.strategy, self.color_order, self.pruning)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Optimal,
    TimeLimit,
    NodeLimit,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Optimal => "OPTIMAL",
            Status::TimeLimit => "TIME_LIMIT",
            Status::NodeLimit => "NODE_LIMIT",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub status: Status,
    /// The equitable chromatic number, when proven.
    pub chi_eq: Option<usize>,
    pub lb_initial: usize,
    pub ub_initial: usize,
    pub lb: usize,
    pub ub: usize,
    pub incumbent: EquitableColoring,
    /// Node procedure invocations, root included.
    pub nodes: u64,
    pub wall_time: Duration,
}

impl SolveResult {
    /// `100 (UB - LB) / UB` at termination; zero when optimal.
    pub fn relative_gap(&self) -> f64 {
        if self.status == Status::Optimal {
            0.0
        } else {
            100.0 * (self.ub - self.lb) as f64 / self.ub as f64
        }
    }
}

/// Hooks into the enumeration, used by tests to check invariants as the
/// search runs. All methods default to no-ops.
pub trait SearchObserver {
    /// A new incumbent with `ub` colors was recorded.
    fn on_incumbent(&mut self, _g: &Graph, _coloring: &EquitableColoring, _ub: usize, _lb: usize) {}

    /// A node with no uncolored vertex was entered, before any equity test.
    fn on_complete(&mut self, _g: &Graph, _state: &PartialColoring, _pruning: Pruning) {}

    /// Vertex `u` received color `j` while the upper bound was `ub`.
    fn on_assign(&mut self, _u: usize, _j: usize, _ub: usize) {}
}

/// Observer that does nothing.
pub struct NoObserver;

impl SearchObserver for NoObserver {}

/// Picks the next vertex to color, or `None` when all vertices are colored.
///
/// The candidates are the uncolored vertices of maximum saturation degree;
/// ties are broken by `strategy` and finally by lowest index.
pub fn select_vertex(g: &Graph, pc: &PartialColoring, strategy: Strategy) -> Option<usize> {
    let uncolored = pc.uncolored();
    let max_sat = uncolored.iter().map(|v| pc.saturation(v)).max()?;
    let candidates = crate::bitset::VertexSet::from_iter_with_capacity(
        g.n(),
        uncolored.iter().filter(|&v| pc.saturation(v) == max_sat),
    );
    if candidates.len() == 1 {
        return candidates.first();
    }
    // |F(u) ∩ F(v) ∩ {1..k}| = k - sat(u) - sat(v) + |forb(u) ∩ forb(v)|,
    // since forbidden colors always lie in 1..k.
    let k = pc.k();
    let shared = |u: usize, v: usize| {
        k + pc.forbidden(u).intersection_len(pc.forbidden(v)) - pc.saturation(u) - pc.saturation(v)
    };
    let score = |u: usize| -> usize {
        match strategy {
            Strategy::Brelaz => g.neighbors(u).intersection_len(uncolored),
            Strategy::Sewell => g.neighbors(u).iter_intersection(uncolored).map(|v| shared(u, v)).sum(),
            Strategy::Pass => g.neighbors(u).iter_intersection(&candidates).map(|v| shared(u, v)).sum(),
        }
    };
    let mut best: Option<(usize, usize)> = None;
    for u in candidates.iter() {
        let s = score(u);
        if best.is_none_or(|(_, bs)| s > bs) {
            best = Some((u, s));
        }
    }
    best.map(|(u, _)| u)
}

/// Colors to try for `u`: those in `F(u)` within `1..=min(k+1, ub-1)`,
/// sorted by `order`.
pub fn order_colors(pc: &PartialColoring, u: usize, ub: usize, order: ColorOrder) -> Vec<usize> {
    let mut colors = Vec::new();
    order_colors_into(pc, u, ub, order, &mut colors);
    colors
}

fn order_colors_into(pc: &PartialColoring, u: usize, ub: usize, order: ColorOrder, out: &mut Vec<usize>) {
    out.clear();
    let cap = color_cap(pc.k(), ub).min(pc.n());
    out.extend((1..=cap).filter(|&j| pc.is_feasible(u, j)));
    if order == ColorOrder::SizeAsc {
        // stable sort keeps index order among equal sizes
        out.sort_by_key(|&j| pc.class_size(j));
    }
}

/// Highest color Step 3 may try. Colors `k+2..ub-1` would open classes
/// symmetric to `k+1`, so the cap is `min(k+1, ub-1)`.
#[inline]
fn color_cap(k: usize, ub: usize) -> usize {
    (k + 1).min(ub.saturating_sub(1))
}

/// Solves the instance with the given configuration.
pub fn solve(g: &Graph, config: &SolverConfig) -> SolveResult {
    solve_with_observer(g, config, &mut NoObserver)
}

pub fn solve_with_observer<O: SearchObserver>(g: &Graph, config: &SolverConfig, observer: &mut O) -> SolveResult {
    assert!(g.n() >= 1, "cannot solve an empty graph");
    let start = Instant::now();
    let clique = greedy_maximal_clique(g);
    let Bounds { lb, ub, incumbent } = initial_bounds(g, &clique);
    let ub_initial = ub;
    observer.on_incumbent(g, &incumbent, ub, lb);

    let mut search = Search {
        g,
        config,
        lb,
        ub,
        incumbent,
        nodes: 0,
        start,
        stopped: None,
        finished: ub == lb,
        pc: PartialColoring::from_clique(g, &clique).expect("greedy clique is a nonempty clique"),
        buffers: Vec::new(),
        observer,
    };
    if !search.finished {
        search.node(0);
    }

    let Search { ub, incumbent, nodes, stopped, .. } = search;
    let (status, lb_final) = match stopped {
        None => (Status::Optimal, ub),
        Some(s) => (s, lb),
    };
    SolveResult {
        status,
        chi_eq: (status == Status::Optimal).then_some(ub),
        lb_initial: lb,
        ub_initial,
        lb: lb_final,
        ub,
        incumbent,
        nodes,
        wall_time: start.elapsed(),
    }
}

struct Search<'a, O> {
    g: &'a Graph,
    config: &'a SolverConfig,
    lb: usize,
    ub: usize,
    incumbent: EquitableColoring,
    nodes: u64,
    start: Instant,
    /// Set when a limit interrupts the run.
    stopped: Option<Status>,
    /// Set when UB reaches LB.
    finished: bool,
    pc: PartialColoring,
    /// Per-depth scratch space for candidate colors.
    buffers: Vec<Vec<usize>>,
    observer: &'a mut O,
}

impl<O: SearchObserver> Search<'_, O> {
    fn node(&mut self, depth: usize) {
        self.nodes += 1;
        if self.start.elapsed() >= self.config.time_limit {
            self.stopped = Some(Status::TimeLimit);
            return;
        }
        if self.config.node_limit.is_some_and(|lim| self.nodes > lim) {
            self.stopped = Some(Status::NodeLimit);
            return;
        }

        // Step 1: complete coloring.
        if self.pc.uncolored().is_empty() {
            self.observer.on_complete(self.g, &self.pc, self.config.pruning);
            match self.config.pruning {
                Pruning::Trivial if !self.pc.is_complete_equitable() => return,
                Pruning::Trivial => {}
                Pruning::Equity => debug_assert!(self.pc.is_complete_equitable(), "P.1 admitted an unbalanced leaf"),
            }
            debug_assert!(self.pc.k() < self.ub);
            self.ub = self.pc.k();
            self.incumbent = self.pc.to_coloring().expect("coloring is complete");
            self.observer.on_incumbent(self.g, &self.incumbent, self.ub, self.lb);
            if self.ub <= self.lb {
                self.finished = true;
            }
            return;
        }

        // Step 2.
        let u = select_vertex(self.g, &self.pc, self.config.strategy).expect("uncolored set is nonempty");

        // Step 3.
        if self.buffers.len() <= depth {
            self.buffers.push(Vec::new());
        }
        let mut colors = std::mem::take(&mut self.buffers[depth]);
        order_colors_into(&self.pc, u, self.ub, self.config.color_order, &mut colors);
        for &j in &colors {
            if self.finished || self.stopped.is_some() || self.pc.k() >= self.ub {
                break;
            }
            // UB may have dropped since the candidates were listed.
            if j >= self.ub {
                continue;
            }
            let undo: Undo = self.pc.apply(self.g, u, j);
            self.observer.on_assign(u, j, self.ub);
            if self.worth_exploring() {
                self.node(depth + 1);
            }
            self.pc.undo(self.g, undo);
        }
        self.buffers[depth] = colors;
    }

    /// Whether the freshly extended state can still lead to an improving
    /// equitable coloring.
    fn worth_exploring(&self) -> bool {
        let pc = &self.pc;
        let k = pc.k();
        // Every uncolored vertex needs a feasible color below UB. A new class
        // is always available while k + 1 < UB.
        if k + 1 >= self.ub && pc.uncolored().iter().any(|v| pc.saturation(v) >= k) {
            return false;
        }
        match self.config.pruning {
            Pruning::Trivial => true,
            Pruning::Equity => pc.p1_holds(self.ub) && pc.check_p2(self.lb),
        }
    }
}
