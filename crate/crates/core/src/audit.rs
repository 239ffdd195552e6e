//! A [`SearchObserver`] that checks search invariants while the solver runs
//! and counts every violation.

use crate::coloring::{validate_equitable, EquitableColoring, PartialColoring};
use crate::graph::Graph;
use crate::search::{Pruning, SearchObserver};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditObserver {
    /// Incumbents recorded, including the initial heuristic coloring.
    pub incumbents: usize,
    /// Incumbents that failed `validate_equitable`.
    pub invalid_incumbents: usize,
    /// Times an incumbent did not lower UB, or UB rose.
    pub ub_increases: usize,
    /// Times LB exceeded UB or LB changed after initialization.
    pub bound_violations: usize,
    /// Complete states reached in equity mode.
    pub equity_leaves: usize,
    /// Complete states reached in equity mode that are not equitable.
    pub unbalanced_equity_leaves: usize,
    /// Assignments of a color >= UB.
    pub cap_violations: usize,
    last_ub: Option<usize>,
    lb: Option<usize>,
}

impl AuditObserver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the counters of another run's audit to this one.
    pub fn absorb(&mut self, other: &AuditObserver) {
        self.incumbents += other.incumbents;
        self.invalid_incumbents += other.invalid_incumbents;
        self.ub_increases += other.ub_increases;
        self.bound_violations += other.bound_violations;
        self.equity_leaves += other.equity_leaves;
        self.unbalanced_equity_leaves += other.unbalanced_equity_leaves;
        self.cap_violations += other.cap_violations;
    }

    pub fn violations(&self) -> usize {
        self.invalid_incumbents
            + self.ub_increases
            + self.bound_violations
            + self.unbalanced_equity_leaves
            + self.cap_violations
    }
}

impl SearchObserver for AuditObserver {
    fn on_incumbent(&mut self, g: &Graph, coloring: &EquitableColoring, ub: usize, lb: usize) {
        self.incumbents += 1;
        if validate_equitable(g, coloring) != Ok(true) || coloring.k != ub {
            self.invalid_incumbents += 1;
        }
        if self.last_ub.is_some_and(|prev| ub >= prev) {
            self.ub_increases += 1;
        }
        if lb > ub || self.lb.is_some_and(|prev| prev != lb) {
            self.bound_violations += 1;
        }
        self.last_ub = Some(ub);
        self.lb = Some(lb);
    }

    fn on_complete(&mut self, g: &Graph, state: &PartialColoring, pruning: Pruning) {
        if pruning == Pruning::Equity {
            self.equity_leaves += 1;
            let ok = state
                .to_coloring()
                .is_some_and(|c| validate_equitable(g, &c) == Ok(true));
            if !ok {
                self.unbalanced_equity_leaves += 1;
            }
        }
    }

    fn on_assign(&mut self, _u: usize, j: usize, ub: usize) {
        if j >= ub {
            self.cap_violations += 1;
        }
    }
}
