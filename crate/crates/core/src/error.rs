use thiserror::Error;

/// Which line of a Cayley table repeats an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a Latin square: {line} {index} repeats the entry at cell ({row}, {col})")]
    NotLatin {
        line: Line,
        index: usize,
        row: usize,
        col: usize,
    },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("malformed input at line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("{what} is limited to order {bound}, got {order} (raise it with --bound)")]
    BoundExceeded {
        what: &'static str,
        order: usize,
        bound: usize,
    },
    #[error("the two gamma23 expressions differ at (x,u,v) = {params:?}")]
    Gamma23Mismatch { params: [usize; 3] },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("not a group")]
    NotAGroup,
    #[error("bad filter expression: {0}")]
    BadFilter(String),
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("element {element} out of range for order {order}")]
    OutOfRange { element: usize, order: usize },
    #[error("map is not an isomorphism between the given loops")]
    NotAnIsomorphism,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
