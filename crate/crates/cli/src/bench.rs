//! Benchmark runner: one CSV row per (instance, config) run plus a summary
//! table per (group, config) with the share of solved instances, the mean
//! relative gap and the mean time over solved instances.
//!
//! Row CSV columns, in order:
//!
//! | column | meaning |
//! |---|---|
//! | `instance` | instance name (`rand_n<n>_d<d>_s<seed>` or file stem) |
//! | `group` | `n=<n> d=<d>` for random groups, the instance name for files |
//! | `source` | `random` or the DIMACS path |
//! | `n`, `m` | vertex and edge counts |
//! | `density` | requested density (random) or observed density (file) |
//! | `config` | `strategy/order/pruning` |
//! | `lb0`, `ub0` | bounds after initialization |
//! | `status` | `OPTIMAL`, `TIME_LIMIT` or `NODE_LIMIT` |
//! | `chi_eq` | equitable chromatic number, empty unless optimal |
//! | `lb_final`, `ub_final` | bounds at termination |
//! | `relative_gap` | `100 (ub_final - lb_final) / ub_final` |
//! | `nodes` | search nodes visited |
//! | `wall_time` | seconds |

use std::io;
use std::time::Duration;

use eqcol::{solve, Graph, SolveResult, SolverConfig, Status};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::instance::InstanceSource;
use crate::suite::SuiteGroup;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub group: String,
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub density: f64,
    pub config: String,
    pub lb0: usize,
    pub ub0: usize,
    pub status: String,
    pub chi_eq: Option<usize>,
    pub lb_final: usize,
    pub ub_final: usize,
    pub relative_gap: f64,
    pub nodes: u64,
    pub wall_time: f64,
}

impl BenchRow {
    pub fn solved(&self) -> bool {
        self.status == Status::Optimal.name()
    }
}

/// A loaded instance ready to run.
pub struct Instance {
    pub name: String,
    pub group: String,
    pub source: String,
    pub density: f64,
    pub graph: Graph,
}

impl Instance {
    pub fn load(src: &InstanceSource) -> Result<Self, CliError> {
        let graph = src.load()?;
        let name = src.name();
        Ok(match src {
            InstanceSource::Random(spec) => Instance {
                group: format!("n={} d={}", spec.n, spec.density),
                source: "random".into(),
                density: spec.density,
                name,
                graph,
            },
            InstanceSource::File(path) => Instance {
                group: name.clone(),
                source: path.display().to_string(),
                density: graph.density(),
                name,
                graph,
            },
        })
    }
}

pub fn load_suite(groups: &[SuiteGroup]) -> Result<Vec<Instance>, CliError> {
    groups.iter().flat_map(|g| g.instances()).map(|src| Instance::load(&src)).collect()
}

pub fn make_row(inst: &Instance, config: &SolverConfig, r: &SolveResult) -> BenchRow {
    BenchRow {
        instance: inst.name.clone(),
        group: inst.group.clone(),
        source: inst.source.clone(),
        n: inst.graph.n(),
        m: inst.graph.m(),
        density: inst.density,
        config: config.label(),
        lb0: r.lb_initial,
        ub0: r.ub_initial,
        status: r.status.name().into(),
        chi_eq: r.chi_eq,
        lb_final: r.lb,
        ub_final: r.ub,
        relative_gap: r.relative_gap(),
        nodes: r.nodes,
        wall_time: r.wall_time.as_secs_f64(),
    }
}

/// Runs every instance under every config on `jobs` worker threads. Rows
/// come back in (instance, config) order regardless of scheduling.
pub fn run(instances: &[Instance], configs: &[SolverConfig], time_limit: Duration, jobs: usize) -> Vec<BenchRow> {
    let tasks: Vec<(&Instance, SolverConfig)> = instances
        .iter()
        .flat_map(|inst| configs.iter().map(move |c| (inst, c.clone().with_time_limit(time_limit))))
        .collect();
    let work = || {
        tasks
            .par_iter()
            .map(|(inst, cfg)| make_row(inst, cfg, &solve(&inst.graph, cfg)))
            .collect::<Vec<_>>()
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

pub fn write_rows<W: io::Write>(out: W, rows: &[BenchRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_rows<R: io::Read>(input: R) -> Result<Vec<BenchRow>, CliError> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize().collect::<Result<Vec<BenchRow>, _>>()?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AggregateRow {
    pub group: String,
    pub n: usize,
    pub density: f64,
    pub config: String,
    pub instances: usize,
    pub solved_pct: f64,
    pub mean_gap: f64,
    /// Mean wall time over solved instances; `None` if none was solved.
    pub mean_time: Option<f64>,
}

/// Groups rows by (group, config) in order of first appearance.
pub fn aggregate(rows: &[BenchRow]) -> Vec<AggregateRow> {
    let mut keys: Vec<(&str, &str)> = Vec::new();
    for r in rows {
        let key = (r.group.as_str(), r.config.as_str());
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    keys.into_iter()
        .map(|(group, config)| {
            let members: Vec<&BenchRow> = rows.iter().filter(|r| r.group == group && r.config == config).collect();
            let count = members.len();
            let solved: Vec<&&BenchRow> = members.iter().filter(|r| r.solved()).collect();
            let mean_time =
                (!solved.is_empty()).then(|| solved.iter().map(|r| r.wall_time).sum::<f64>() / solved.len() as f64);
            AggregateRow {
                group: group.to_string(),
                n: members[0].n,
                density: members[0].density,
                config: config.to_string(),
                instances: count,
                solved_pct: 100.0 * solved.len() as f64 / count as f64,
                mean_gap: members.iter().map(|r| r.relative_gap).sum::<f64>() / count as f64,
                mean_time,
            }
        })
        .collect()
}

/// Summary table with a `-` time for groups where nothing was solved.
pub fn format_aggregate(rows: &[AggregateRow]) -> String {
    let mut out = format!(
        "{:<24} {:>5} {:>8} {:<22} {:>5} {:>9} {:>9} {:>10}\n",
        "group", "n", "density", "config", "inst", "%solved", "%gap", "time(s)"
    );
    for r in rows {
        let time = r.mean_time.map_or_else(|| "-".to_string(), |t| format!("{t:.3}"));
        out.push_str(&format!(
            "{:<24} {:>5} {:>8.3} {:<22} {:>5} {:>9.1} {:>9.2} {:>10}\n",
            r.group, r.n, r.density, r.config, r.instances, r.solved_pct, r.mean_gap, time
        ));
    }
    out
}
