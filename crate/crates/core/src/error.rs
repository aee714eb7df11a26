use alloc::string::String;

use crate::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge {edge} has {found} vertices, expected {expected}")]
    WrongArity {
        edge: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: Vertex },
    #[error("edge {edge} uses vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    #[error("{n} vertices exceeds the cap of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("uniformity {0} is not supported here")]
    UnsupportedUniformity(usize),
    #[error("malformed vertex set: {0}")]
    MalformedSet(&'static str),
    #[error("minimum positive co-degree is undefined for a graph without edges")]
    EmptyGraph,
    #[error("need at least {needed} vertices, got {n}")]
    TooFewVertices { n: usize, needed: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),
    #[error("unknown graph {0:?}")]
    UnknownGraph(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },
    #[error("points {first} and {second} are antipodal")]
    AntipodalPoints { first: usize, second: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    Infeasible {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("not an edge of the graph")]
    NotAnEdge,
    #[error("the vertex set is not independent")]
    NotIndependent,
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    /// True for the size-cap refusals that the CLI maps to its "infeasible" exit code.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::Infeasible { .. } | Error::TooManyVertices { .. })
    }
}
