use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot reflect a degree-{degree} polynomial in a window of width {window}")]
    ReverseDegree { degree: usize, window: usize },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("semilength {n} exceeds the enumeration bound {max}")]
    EnumerationBound { n: usize, max: usize },

    #[error("invalid Dyck word: {0}")]
    InvalidPath(String),

    #[error("closed form for a({n},{k}) is not divisible by n+1")]
    InexactDivision { n: usize, k: usize },

    #[error("reflection solve failed at rank {rank}: residual does not match the degree bound")]
    ReflectionMismatch { rank: usize },

    #[error("graded dimension of the equivariant polynomial at n={n} disagrees with P_n")]
    DimensionMismatch { n: usize },

    #[error("edge ({0}, {1}) is a loop or leaves the vertex range")]
    InvalidEdge(usize, usize),

    #[error("graph has {0} edges; at most 128 are supported")]
    TooManyEdges(usize),

    #[error("matroid rank {rank} exceeds the lattice guard {max}")]
    RankGuard { rank: usize, max: usize },

    #[error("edge set is not a flat of this lattice")]
    NotAFlat,

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("plethysm produced a non-integral Schur coefficient at {0:?}")]
    NonIntegral(Vec<usize>),
}
