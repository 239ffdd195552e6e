//! Benchmark suite files and solver configuration lists.
//!
//! A suite file has one group per line:
//!
//! ```text
//! # comment
//! random <n> <density> <count> <seed_base>
//! file <path>
//! ```
//!
//! Densities above 1 are read as percentages, so `random 70 50 10 0` and
//! `random 70 0.5 10 0` are the same group. Relative paths are resolved
//! against the suite file's directory.

use std::path::Path;

use eqcol::{ColorOrder, Pruning, SolverConfig, Strategy};

use crate::error::CliError;
use crate::instance::{InstanceSource, RandomSpec};

#[derive(Clone, Debug, PartialEq)]
pub enum SuiteGroup {
    Random { n: usize, density: f64, count: usize, seed_base: u64 },
    File(std::path::PathBuf),
}

impl SuiteGroup {
    /// Instances of the group, in seed order.
    pub fn instances(&self) -> Vec<InstanceSource> {
        match self {
            SuiteGroup::Random { n, density, count, seed_base } => (0..*count as u64)
                .map(|i| InstanceSource::Random(RandomSpec { n: *n, density: *density, seed: seed_base + i }))
                .collect(),
            SuiteGroup::File(path) => vec![InstanceSource::File(path.clone())],
        }
    }
}

pub fn parse_suite(text: &str, base_dir: &Path) -> Result<Vec<SuiteGroup>, CliError> {
    let mut groups = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| CliError::Suite { line, msg };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_ascii_whitespace().collect();
        match tokens[..] {
            ["random", n, d, count, seed] => {
                let n: usize = n.parse().map_err(|_| err(format!("bad vertex count `{n}`")))?;
                let mut density: f64 = d.parse().map_err(|_| err(format!("bad density `{d}`")))?;
                if density > 1.0 {
                    density /= 100.0;
                }
                if n == 0 || !(0.0..=1.0).contains(&density) {
                    return Err(err(format!("invalid group n={n} d={d}")));
                }
                let count = count.parse().map_err(|_| err(format!("bad count `{count}`")))?;
                let seed_base = seed.parse().map_err(|_| err(format!("bad seed `{seed}`")))?;
                groups.push(SuiteGroup::Random { n, density, count, seed_base });
            }
            ["file", path] => groups.push(SuiteGroup::File(base_dir.join(path))),
            _ => return Err(err(format!("expected `random n d count seed_base` or `file <path>`, got `{content}`"))),
        }
    }
    Ok(groups)
}

/// Parses a comma-separated config list. Each entry is either
/// `strategy/order/pruning` (any suffix may be omitted, defaulting to
/// `pass/size/equity`) or one of the aliases `eqds1` (pass/index/equity),
/// `eqds2` (pass/size/equity) and `trivial` (pass/index/trivial).
pub fn parse_configs(list: &str) -> Result<Vec<SolverConfig>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_config)
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(CliError::BadArgument("empty config list".into()))
            } else {
                Ok(v)
            }
        })
}

fn parse_config(entry: &str) -> Result<SolverConfig, CliError> {
    let bad = |e: eqcol::search::ParseConfigError| CliError::BadArgument(format!("config `{entry}`: {e}"));
    match entry.to_ascii_lowercase().as_str() {
        "eqds1" => return Ok(SolverConfig::new(Strategy::Pass, ColorOrder::Index, Pruning::Equity)),
        "eqds2" => return Ok(SolverConfig::new(Strategy::Pass, ColorOrder::SizeAsc, Pruning::Equity)),
        "trivial" => return Ok(SolverConfig::new(Strategy::Pass, ColorOrder::Index, Pruning::Trivial)),
        _ => {}
    }
    let parts: Vec<&str> = entry.split('/').collect();
    if parts.len() > 3 {
        return Err(CliError::BadArgument(format!("config `{entry}` has too many parts")));
    }
    let mut cfg = SolverConfig::default();
    if let Some(s) = parts.first() {
        cfg.strategy = s.parse().map_err(bad)?;
    }
    if let Some(o) = parts.get(1) {
        cfg.color_order = o.parse().map_err(bad)?;
    }
    if let Some(p) = parts.get(2) {
        cfg.pruning = p.parse().map_err(bad)?;
    }
    Ok(cfg)
}
