use thiserror::Error;

use crate::graph::VertexSet;
use crate::patterns::PatternWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("{what}: input of size {size} exceeds the scale cap {cap}")]
    ScaleCap { what: &'static str, size: usize, cap: usize },

    #[error("edge {0}-{1} is not an edge of the graph")]
    UnknownEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),

    #[error("set is a (w,1/2)-balanced separator, so it has no canonical separation")]
    BalancedSet,

    #[error("diamond detected: {0:?}")]
    DiamondDetected(Box<PatternWitness>),

    #[error("graph contains a clock: {0:?}")]
    ClockFound(Box<PatternWitness>),

    #[error("star cutset {cutset:?} centred at {center}")]
    StarCutset { center: usize, cutset: VertexSet },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no connected subgraph meets all three neighbourhoods")]
    NoConnector,

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("separator oracle misbehaved: {0}")]
    Oracle(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_scale_cap(&self) -> bool {
        matches!(self, Error::ScaleCap { .. } | Error::TooManyVertices { .. })
    }
}
