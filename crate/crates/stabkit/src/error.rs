//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A Pauli string could not be parsed. `position` is 1-based.
    #[error("parse error at position {position}: {message}")]
    PauliParse { position: usize, message: String },

    /// A line of an input file could not be parsed. `line` is 1-based.
    #[error("line {line}: {message}")]
    FileParse { line: usize, message: String },

    /// Operands act on different numbers of qubits.
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    /// A generator set has the wrong cardinality for its qubit count.
    #[error("expected {expected} generators, got {found}")]
    WrongGeneratorCount { expected: usize, found: usize },

    /// Two proposed stabilizer generators anticommute. Indices are 1-based.
    #[error("generators {first} and {second} anticommute")]
    NonCommutingGenerators { first: usize, second: usize },

    /// A proposed generator carries an imaginary phase. Index is 1-based.
    #[error("generator {index} has imaginary phase; stabilizer elements must be Hermitian")]
    NonHermitianGenerator { index: usize },

    /// The proposed generators are linearly dependent. The combination
    /// lists 1-based generator indices whose product has identity bits.
    #[error("dependent generators: product of {combination:?} is the identity")]
    DependentGenerators { combination: Vec<usize> },

    /// A dependency combination multiplies to -I, so the generated group
    /// would contain -I. Indices are 1-based.
    #[error("-I in generated group: product of {combination:?} is -I")]
    MinusIdentity { combination: Vec<usize> },

    /// A size cap was exceeded.
    #[error("{what}: {requested} exceeds cap {cap}{hint}")]
    Resource {
        what: String,
        requested: usize,
        cap: usize,
        hint: String,
    },

    /// Invalid input outside the other categories.
    #[error("{0}")]
    Domain(String),

    /// An internal contract was violated; this indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn resource(what: &str, requested: usize, cap: usize, hint: &str) -> Self {
        let hint = if hint.is_empty() {
            String::new()
        } else {
            format!(" ({hint})")
        };
        Error::Resource {
            what: what.to_string(),
            requested,
            cap,
            hint,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
