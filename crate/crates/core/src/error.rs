use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("parallel edge ({0},{1})")]
    ParallelEdge(usize, usize),
    #[error("non-positive weight {w} on edge ({u},{v})")]
    NonPositiveWeight { u: usize, v: usize, w: f64 },
    #[error("node id {node} out of range for n={n}")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("{message}, line {line}")]
    Parse { line: usize, message: String },
    #[error("requested {m} edges but a simple graph on {n} nodes has at most {max}")]
    TooManyEdges { n: usize, m: usize, max: u64 },
    #[error("invalid weight range [{lo},{hi}]")]
    InvalidWeightRange { lo: f64, hi: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("algorithm requires an unweighted graph (all weights 1)")]
    WeightedInput,
    #[error("n={n} exceeds the APSP cap of {cap}; raise it with SPANNER_APSP_CAP or use the fast construction")]
    ApspCap { n: usize, cap: usize },
    #[error("edge set does not belong to the graph: {0}")]
    NotSubgraph(String),
    #[error("nodes {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
