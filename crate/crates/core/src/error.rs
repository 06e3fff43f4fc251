use thiserror::Error;

/// Errors raised by graph construction, walk evolution and verification.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} has degree {found}, expected {expected}")]
    IrregularGraph { vertex: usize, expected: usize, found: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("adjacency is not symmetric: {0} lists {1} but not conversely")]
    Asymmetric(usize, usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("degree {0} is below the supported minimum of 3")]
    DegreeTooSmall(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad construction parameters: {0}")]
    BadParams(String),
    #[error("construction produced a non-simple graph: {0}")]
    NonSimple(String),
    #[error("base graph has a self-loop at vertex {0}")]
    BaseHasSelfLoop(usize),
    #[error("random sampling failed after {0} attempts")]
    SamplingExhausted(usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("distribution lives on {found} states, expected {expected}")]
    SpaceMismatch { expected: usize, found: usize },
    #[error("invalid probability vector: {0}")]
    InvalidDistribution(String),
    #[error("distribution puts mass {mass} on state {state} outside the reference support")]
    SupportViolation { state: usize, mass: f64 },
    #[error("parity-restricted reference requested on a non-bipartite graph")]
    ParityOnNonBipartite,
    #[error("threshold not reached within {0} steps")]
    NotReached(usize),
    #[error("L^p exponent {0} out of range")]
    POutOfRange(f64),
    #[error("relative entropy undefined: alpha = {0} is degenerate")]
    AlphaDegenerate(f64),
    #[error("lambda = {0} outside (0, d)")]
    LambdaOutOfRange(f64),
    #[error("matrix of order {size} exceeds the dense cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("adjacency eigenbasis is not orthonormal (residual {0:e})")]
    EigenbasisNotOrthonormal(f64),
    #[error("graph is not Ramanujan (max nontrivial |lambda| = {0})")]
    NotRamanujan(f64),
    #[error("operation requires a non-bipartite graph")]
    Bipartite,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
