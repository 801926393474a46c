use thiserror::Error;

/// Errors raised while parsing graph6 text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("non-printable byte {byte:#04x} at offset {offset}")]
    NonPrintable { byte: u8, offset: usize },
    #[error("malformed length field")]
    BadLength,
    #[error("graph6 encodes zero vertices")]
    ZeroVertices,
    #[error("truncated adjacency data: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after adjacency data ({0} extra bytes)")]
    Trailing(usize),
    #[error("nonzero padding bits in final byte")]
    Padding,
    #[error("graph has {n} vertices, exceeding the configured width {width}")]
    TooWide { n: usize, width: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("vertex set must be a nonempty proper subset of V")]
    TrivialSet,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("p = {p} does not have the parity of n = {n}")]
    Parity { n: usize, p: usize },
    #[error("p = {p} exceeds n = {n}")]
    PTooLarge { n: usize, p: usize },
    #[error("graph needs at least {min} vertices, has {n}")]
    TooSmall { n: usize, min: usize },
    #[error("{what}: size {size} exceeds cap {cap}")]
    ResourceCap { what: &'static str, size: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("{0} is undefined for this graph")]
    Undefined(&'static str),
    #[error("hypotheses not met: {0}")]
    Hypothesis(String),
    #[error("permutation group is not transitive")]
    Intransitive,
    #[error("vertex set is not an imprimitive block")]
    NotABlock,
    #[error("family spec: {0}")]
    Family(String),
    #[error("group table: {0}")]
    GroupTable(String),
    #[error("invalid argument: {0}")]
    Argument(String),
}

impl Error {
    /// True for errors caused by a size or search cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::ResourceCap { .. } | Error::Graph6(Graph6Error::TooWide { .. })
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
