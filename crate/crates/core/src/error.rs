use thiserror::Error;

/// Errors raised by group construction, morphism search and graph algorithms.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group of order {order} exceeds the size cap of {cap}")]
    SizeCap { order: usize, cap: usize },

    #[error("unsupported request: {0}")]
    Unsupported(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid abelian shape: {0}")]
    InvalidShape(String),

    #[error("map has length {got}, group has order {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("map is not a homomorphism")]
    NotHomomorphism,

    #[error("morphisms belong to groups of different order ({left} vs {right})")]
    GroupMismatch { left: usize, right: usize },

    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    /// The exhaustive morphism search would exceed the configured budget.
    #[error("search space of {combinations} generator-image combinations exceeds budget {budget}")]
    BudgetExceeded { combinations: u128, budget: u128 },

    #[error("operation requires an abelian group")]
    NotAbelian,

    #[error("more than {limit} maximal cliques")]
    CliqueOverflow { limit: usize },

    #[error("graph with {vertices} vertices exceeds the limit of {limit} for {operation}")]
    GraphTooLarge {
        operation: &'static str,
        vertices: usize,
        limit: usize,
    },

    #[error("vertex {vertex} out of range for a graph on {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
