use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("composition parts must be positive, got {0:?}")]
    InvalidComposition(Vec<usize>),
    #[error("descent set {set:?} is not a sorted subset of 1..{n}")]
    InvalidDescentSet { set: Vec<usize>, n: usize },
    #[error("{0:?} is not a permutation of 1..n")]
    InvalidPermutation(Vec<usize>),
    #[error("hook index k={k} out of range 1..={n}")]
    HookOutOfRange { k: usize, n: usize },
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("tableau is not standard")]
    NotStandard,
    #[error("tableau rows do not form a valid filling of a partition shape")]
    InvalidTableau,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graphs with more than {max} vertices are not supported (got {n})")]
    TooManyVertices { n: usize, max: usize },
    #[error("labeling {0:?} is not a bijection onto 1..n")]
    InvalidLabeling(Vec<usize>),
    #[error("object belongs to a graph on {actual} vertices, expected {expected}")]
    GraphMismatch { expected: usize, actual: usize },
    #[error("arc ({0},{1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("relation contains a cycle through element {0}")]
    CyclicPoset(usize),
}
