use thiserror::Error;

use crate::family::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a digraph needs at least one vertex")]
    EmptyOrder,

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0} is not allowed in a strict digraph")]
    Loop(usize),

    #[error("nonzero trace: diagonal entry ({0},{0}) is 1")]
    NonzeroTrace(usize),

    #[error("matrix entry ({row},{col}) = {value} is not 0 or 1")]
    NotZeroOne { row: usize, col: usize, value: u64 },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("n = {n} is outside the range n >= {min} where {what} is defined")]
    OutOfScope { n: usize, min: usize, what: &'static str },

    #[error("{family} needs {} n, got {n}", if *.family == Family::D1 { "even" } else { "odd" })]
    Parity { family: Family, n: usize },

    #[error("{family} needs n >= {min}, got {n}")]
    BelowMinimum { family: Family, n: usize, min: usize },

    #[error("malformed family spec: {0}")]
    MalformedSpec(String),

    #[error("vertex {0} is not in V2 of the pivot context")]
    NotInComplement(usize),

    #[error("digraph is not F-free: {0}")]
    NotFFree(String),

    #[error("size {size} differs from ex({n}) = {expected}")]
    WrongSize { n: usize, size: usize, expected: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
