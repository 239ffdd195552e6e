use std::path::PathBuf;

use eqcol::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(PathBuf, #[source] std::io::Error),
    #[error("{0}: {1}")]
    Dimacs(PathBuf, #[source] GraphError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    BadArgument(String),
    #[error("suite line {line}: {msg}")]
    Suite { line: usize, msg: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
