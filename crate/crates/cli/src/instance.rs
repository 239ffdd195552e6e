//! Where a benchmark or solve instance comes from.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use eqcol::{parse_dimacs, random_graph, Graph};

use crate::error::CliError;

/// A seeded random graph request, written `n=<n>,d=<density>,seed=<s>`.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub density: f64,
    pub seed: u64,
}

impl RandomSpec {
    pub fn build(&self) -> Result<Graph, CliError> {
        Ok(random_graph(self.n, self.density, self.seed)?)
    }

    pub fn name(&self) -> String {
        format!("rand_n{}_d{}_s{}", self.n, self.density, self.seed)
    }
}

impl FromStr for RandomSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| CliError::BadArgument(format!("random spec `{s}`: {msg}"));
        let (mut n, mut d, mut seed) = (None, None, None);
        for part in s.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(|| bad(format!("expected key=value, got `{part}`")))?;
            let value = value.trim();
            match key.trim() {
                "n" => n = Some(value.parse::<usize>().map_err(|e| bad(format!("n: {e}")))?),
                "d" => d = Some(value.parse::<f64>().map_err(|e| bad(format!("d: {e}")))?),
                "seed" | "s" => seed = Some(value.parse::<u64>().map_err(|e| bad(format!("seed: {e}")))?),
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| bad("missing n".into()))?;
        let density = d.ok_or_else(|| bad("missing d".into()))?;
        if n == 0 {
            return Err(bad("n must be positive".into()));
        }
        if !(0.0..=1.0).contains(&density) {
            return Err(bad(format!("density {density} outside [0, 1]")));
        }
        Ok(RandomSpec { n, density, seed: seed.unwrap_or(0) })
    }
}

impl fmt::Display for RandomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},d={},seed={}", self.n, self.density, self.seed)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSource {
    Random(RandomSpec),
    File(PathBuf),
}

impl InstanceSource {
    pub fn load(&self) -> Result<Graph, CliError> {
        match self {
            InstanceSource::Random(spec) => spec.build(),
            InstanceSource::File(path) => load_dimacs(path),
        }
    }

    pub fn name(&self) -> String {
        match self {
            InstanceSource::Random(spec) => spec.name(),
            InstanceSource::File(path) => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
        }
    }
}

pub fn load_dimacs(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    parse_dimacs(&text).map_err(|e| CliError::Dimacs(path.to_path_buf(), e))
}
