use thiserror::Error;

/// A position in an input text, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("integer overflow in polynomial arithmetic")]
    Overflow,

    #[error("negative exponent {0} in pow (only monomials are invertible)")]
    NegativeExponent(i64),

    #[error("{0} is not a unit monomial")]
    NotUnitMonomial(String),

    #[error("matrix is not invertible: determinant {0} is not a unit monomial")]
    NotInvertible(String),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("state-sum cap exceeded: {crossings} crossings > cap {cap}; use the tangle calculus instead")]
    CapExceeded { crossings: usize, cap: usize },

    #[error("the empty diagram has no bracket (it needs at least one circle)")]
    EmptyDiagram,

    #[error("knots only: diagram has {0} components")]
    KnotsOnly(usize),

    #[error("unknown edge {0}")]
    UnknownEdge(u32),

    #[error("component index {index} out of range (diagram has {count} components)")]
    ComponentIndex { index: usize, count: usize },

    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),

    #[error("total linking number needs at least 2 components, diagram has {0}")]
    TooFewComponents(usize),

    #[error("oracle mismatch: state sum gives {state_sum}, tangle calculus gives {calculus}")]
    OracleMismatch { state_sum: String, calculus: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
