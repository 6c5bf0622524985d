use std::fmt;

use thiserror::Error;

use crate::Integer;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division left a remainder. Every division in this crate is
    /// mathematically exact, so this always indicates a formula bug.
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: Integer, divisor: Integer },

    #[error("division by zero")]
    DivisionByZero,

    /// Materializing the tree would exceed the node budget.
    #[error("tree of order {order} needs {required} nodes, budget is {budget}")]
    ResourceLimit {
        order: i64,
        required: Integer,
        budget: usize,
    },

    #[error("order {order} is outside the valid range for {what}")]
    InvalidOrder { what: &'static str, order: i64 },

    #[error("operation requires a tree with at least one node")]
    EmptyTree,

    #[error("node {0} is not in the tree")]
    UnknownNode(usize),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A malformed edge-list file, with the 1-based line the problem was found on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    BadNumber(String),
    BadEdgeLine(String),
    NodeOutOfRange { node: usize, node_count: usize },
    SelfLoop(usize),
    DuplicateEdge { parent: usize, child: usize },
    MultipleParents { child: usize },
    Cycle { parent: usize, child: usize },
    MultipleRoots { first: usize, second: usize },
    TooManyEdges { expected: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            MissingHeader => write!(f, "missing node-count header"),
            BadNumber(s) => write!(f, "invalid decimal number {s:?}"),
            BadEdgeLine(s) => write!(f, "expected \"parent child\", found {s:?}"),
            NodeOutOfRange { node, node_count } => {
                write!(f, "node {node} out of range for {node_count} nodes")
            }
            SelfLoop(v) => write!(f, "self-loop on node {v}"),
            DuplicateEdge { parent, child } => write!(f, "duplicate edge {parent} {child}"),
            MultipleParents { child } => write!(f, "node {child} already has a parent"),
            Cycle { parent, child } => write!(f, "edge {parent} {child} closes a cycle"),
            MultipleRoots { first, second } => write!(
                f,
                "tree is disconnected: nodes {first} and {second} both have no parent"
            ),
            TooManyEdges { expected } => write!(f, "more than {expected} edge lines"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
