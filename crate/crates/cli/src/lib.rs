//! Command-line front end and benchmark harness for the `eqcol` solver.

pub mod bench;
pub mod error;
pub mod instance;
pub mod suite;

pub use error::CliError;

use eqcol::{SolveResult, Status};

/// Process exit code for a finished solve.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Optimal => 0,
        Status::TimeLimit | Status::NodeLimit => 2,
    }
}

/// Human-readable solve summary.
pub fn summary(name: &str, n: usize, m: usize, config: &str, r: &SolveResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("instance      {name} (n={n}, m={m})\n"));
    out.push_str(&format!("config        {config}\n"));
    out.push_str(&format!("initial       LB={} UB={}\n", r.lb_initial, r.ub_initial));
    out.push_str(&format!("status        {}\n", r.status));
    match r.chi_eq {
        Some(chi) => out.push_str(&format!("chi_eq        {chi}\n")),
        None => out.push_str(&format!("bounds        LB={} UB={} gap={:.2}%\n", r.lb, r.ub, r.relative_gap())),
    }
    out.push_str(&format!("nodes         {}\n", r.nodes));
    out.push_str(&format!("time          {:.3} s\n", r.wall_time.as_secs_f64()));
    out
}
