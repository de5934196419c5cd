use thiserror::Error;

/// Errors produced by counting, parsing, and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Gaussian binomials are only defined here over a field with at least
    /// two elements.
    #[error("field order must be at least 2, got {0}")]
    FieldOrder(u64),
    /// A sequence operation that requires nonnegative entries saw a
    /// negative one.
    #[error("negative entry at index {0}")]
    NegativeEntry(usize),
    /// Input text could not be parsed; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// An enumeration would exceed the state budget.
    #[error(
        "{task} needs {needed} states but the budget is {budget}; \
         set SETCHROMA_CAPACITY to raise it"
    )]
    Capacity {
        task: &'static str,
        needed: u128,
        budget: u128,
    },
    /// Vertex count beyond the partition-lattice enumeration bound.
    #[error("{n} vertices exceed the lattice enumeration bound of {bound}")]
    TooManyVertices { n: usize, bound: usize },
    /// The referenced edge is not present in the graph.
    #[error("edge {{{u}, {v}}} is not in the graph")]
    NoSuchEdge { u: usize, v: usize },
    /// Graph construction was handed an edge it cannot accept.
    #[error("invalid edge {{{u}, {v}}} on {n} vertices: {reason}")]
    BadEdge {
        u: usize,
        v: usize,
        n: usize,
        reason: &'static str,
    },
    /// A closed-form name this library does not know.
    #[error("unknown closed form `{0}`")]
    UnknownClosedForm(String),
    /// A closed form that needs a vertex count was called without one.
    #[error("closed form `{0}` requires a vertex count n")]
    MissingVertexCount(&'static str),
    /// One-line notation that is not a bijection of 1..=degree.
    #[error("not a permutation of 1..={degree}: {reason}")]
    BadPermutation {
        degree: usize,
        reason: &'static str,
    },
    /// A gain whose degree does not match the gain graph.
    #[error("gain of degree {got} on a graph with gain degree {expected}")]
    GainDegreeMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
