//! Exact equitable graph coloring by DSatur-based branch-and-bound.
//!
//! An equitable `k`-coloring partitions the vertices into `k` stable sets
//! whose sizes differ by at most one. [`search::solve`] computes the least
//! such `k` together with a witness coloring.

pub mod audit;
pub mod bitset;
pub mod bounds;
pub mod coloring;
pub mod graph;
pub mod oracle;
pub mod search;

pub use audit::AuditObserver;
pub use bitset::{BitSet, VertexSet};
pub use bounds::{initial_bounds, lower_bound, naive_heuristic, Bounds};
pub use coloring::{validate_equitable, ColoringError, EquitableColoring, PartialColoring};
pub use graph::{greedy_maximal_clique, parse_dimacs, random_graph, Graph, GraphError};
pub use oracle::{brute_force_chi_eq, OracleResult};
pub use search::{
    order_colors, select_vertex, solve, solve_with_observer, ColorOrder, Pruning, SearchObserver, SolveResult,
    SolverConfig, Status, Strategy,
};
