use thiserror::Error;

/// Errors produced by graph, ideal, and homology computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for graph with {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph has {n} vertices; at most {max} are supported here")]
    TooManyVertices { n: usize, max: usize },

    #[error("ambient variable counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined on the {0} ideal")]
    DegenerateIdeal(&'static str),

    #[error("generator cap exceeded: {count} intermediate generators (cap {cap})")]
    GeneratorCap { count: usize, cap: usize },

    #[error("lcm lattice cap exceeded (cap {cap})")]
    LatticeCap { cap: usize },

    #[error("simplicial complex ground set has {size} vertices (cap {cap})")]
    GroundSetCap { size: usize, cap: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph has isolated vertices")]
    IsolatedVertices,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
