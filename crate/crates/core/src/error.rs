use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set over {found} vertices used with a graph on {expected} vertices")]
    SizeMismatch { expected: usize, found: usize },
    #[error("result would have {requested} vertices, above the cap of {cap}")]
    VertexCapExceeded { requested: usize, cap: usize },
    #[error("categorical power exponent must be at least 1")]
    ZeroPower,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for family `{family}`: {reason}")]
    InvalidFamilyParams { family: String, reason: String },
    #[error("ratio {0} outside (0, 1]")]
    RatioOutOfRange(String),
    #[error("invalid ratio literal `{0}`")]
    RatioParse(String),
    #[error("vertex set is not independent: {u} and {v} are adjacent")]
    NotIndependent { u: usize, v: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("line {line}: {error}")]
    Corpus { line: usize, error: Graph6Error },
    #[error("corpus of {n}-vertex graphs has {found} entries, expected {expected}")]
    CorpusCount { n: usize, found: usize, expected: usize },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("csv error: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadCharacter { byte: u8, offset: usize },
    #[error("sparse6 input is not supported")]
    Sparse6,
    #[error("digraph6 input is not supported")]
    Digraph6,
    #[error("graph6 encodes a graph with zero vertices")]
    ZeroVertices,
    #[error("truncated size prefix")]
    TruncatedSize,
    #[error("expected {expected} adjacency bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits in the final byte")]
    NonzeroPadding,
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
