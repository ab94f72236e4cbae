use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("empty edge list")]
    EmptyInput,

    #[error("no biconnected component (graph has no edges)")]
    NoBiconnectedComponent,

    #[error("graph is disconnected ({visited} of {n} vertices reachable)")]
    Disconnected { visited: usize, n: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: u64, n: usize },

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("distance vector from {0} is pruned; a complete BFS is required")]
    PrunedDistances(u32),

    #[error("infinite distance in 4-tuple")]
    InfiniteDistance,

    #[error("mates at distance {requested} requested below current level {current}")]
    MatesBelowCursor { requested: u32, current: u32 },

    #[error("mates are only available when reported pairs are retained")]
    MatesUnavailable,

    #[error("floor {floor} is above the current level {current}")]
    FloorAboveCursor { floor: u32, current: u32 },

    #[error("distance threshold must be positive")]
    NonPositiveThreshold,

    #[error("oracle refuses graphs with more than {limit} vertices (got {n})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
