//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("antisymmetry violation: {0}")]
    Antisymmetry(String),

    #[error("Jacobi identity fails on basis triple ({x}, {y}, {z}): cyclic sum is {defect}")]
    Jacobi {
        x: String,
        y: String,
        z: String,
        defect: String,
    },

    #[error("invalid structure constants: {0}")]
    BadTable(String),

    #[error("not a Lie element: tensor polynomial lies outside the Hall span")]
    NotLieElement,

    #[error("tensor word of degree {degree} exceeds the truncation bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("tree uses only one letter group; a mixed tree is required")]
    NotMixed,

    #[error("alphabet has {0} letter group(s); exactly two are required")]
    NeedTwoGroups(usize),

    #[error("subspace is not an ideal: bracket [v, e_{0}] leaves the span")]
    NotAnIdeal(usize),

    #[error("ideal does not belong to this algebra")]
    ForeignIdeal,

    #[error("ideal is not contained in Z_{c}(L)")]
    NotInCenter { c: usize },

    #[error("{name} is not nilpotent: lower central series stabilizes at dimension {stable_dim}")]
    NotNilpotent { name: String, stable_dim: usize },

    #[error("size budget exceeded: free Hall frame on {generators} generators truncated at weight {bound} has dimension {required}, budget is {budget}")]
    BudgetExceeded {
        generators: usize,
        bound: usize,
        required: usize,
        budget: usize,
    },

    #[error("unknown catalog algebra `{name}`; available: {available}")]
    UnknownCatalog { name: String, available: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
