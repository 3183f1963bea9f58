use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on '{label}' at line {line}")]
    SelfLoopAtLine { line: usize, label: String },
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("malformed edge at line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("edge list contains no edges")]
    EmptyDocument,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("edge ({x}, {y}) already present")]
    EdgeExists { x: String, y: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CentralityError {
    #[error("graph is disconnected: {from} cannot reach {to}")]
    Disconnected { from: String, to: String },
    #[error("no shortest path between {i} and {j}")]
    UnreachablePair { i: String, j: String },
    #[error("pair dependency needs distinct i, j and u outside {{i, j}}")]
    InvalidTriple,
    #[error("unknown centrality '{0}'")]
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("endpoints must differ")]
    SameEndpoint,
    #[error("{x} and {y} are already adjacent")]
    Adjacent { x: String, y: String },
    #[error("graph is disconnected: {from} cannot reach {to}")]
    Disconnected { from: String, to: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("closeness family needs k >= 1, got {0}")]
    ClosenessK(u32),
    #[error("closeness claims are only stated for k >= 10, got {0}")]
    ClosenessClaimsK(u32),
    #[error("betweenness family needs m >= 1, got {0}")]
    BetweennessM(u32),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("enumeration supports 1 <= n <= 7, got {0}")]
    EnumerationRange(usize),
    #[error("n = 7 enumeration must be enabled explicitly")]
    LargeEnumerationDisabled,
    #[error("random graphs need n >= 1 and 0 < p <= 1 (got n = {n}, p = {p})")]
    RandomParams { n: usize, p: f64 },
    #[error("no connected G({n}, {p}) sample after {attempts} attempts; try a larger p")]
    TooManyRejections { n: usize, p: f64, attempts: usize },
    #[error("geodesic enumeration is limited to n <= {max}, got {n}")]
    OracleTooLarge { n: usize, max: usize },
    #[error("unknown check '{0}'")]
    UnknownCheck(String),
    #[error(transparent)]
    Centrality(#[from] CentralityError),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
