use thiserror::Error;

use crate::graph::GraphError;
use crate::properties::PropertyError;
use crate::setcore::SetError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Property(#[from] PropertyError),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("input graph is empty")]
    EmptyInput,
    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },
    #[error("too many vertices: {0} (dense routines handle at most 64)")]
    TooManyVertices(usize),
    #[error("search budget of {budget} candidates exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("no witness could be built: {0}")]
    NoWitness(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
