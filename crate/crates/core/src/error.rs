use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::tableau::Violation;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that needs at least one letter got an empty word.
    EmptyInput,
    /// The sequence is not a bijection of `{1, ..., n}`.
    NotAPermutation(Vec<usize>),
    /// Two objects that must have the same size do not.
    SizeMismatch { left: usize, right: usize },
    /// A composition part was zero.
    ZeroPart,
    /// Row lengths of a filling disagree with its shape.
    RowLengthMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// A 1-indexed column or row index is outside `1..=max`.
    IndexOutOfRange { index: usize, max: usize },
    /// The filling is not standard.
    NotStandard,
    /// The object has the wrong shape for this operation.
    WrongShape(&'static str),
    /// The filling fails the PCT conditions.
    InvalidTableau(Vec<Violation>),
    /// The filling fails the reverse tableau conditions.
    InvalidReverseTableau(String),
    /// The step sequence is not a (labeled) Dyck path.
    InvalidDyckPath(String),
    /// The node structure is not a labeled plane binary tree.
    InvalidTree(String),
    /// A permutation sequence that must be allowable is not.
    NotAllowable { position: usize },
    /// A graph that must be acyclic has a directed cycle.
    Cyclic,
    /// A state that valid input can never reach.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "empty input"),
            Error::NotAPermutation(v) => write!(f, "not a permutation: {v:?}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::ZeroPart => write!(f, "composition parts must be positive"),
            Error::RowLengthMismatch {
                row,
                expected,
                found,
            } => write!(f, "row {row} has length {found}, shape requires {expected}"),
            Error::IndexOutOfRange { index, max } => {
                write!(f, "index {index} out of range 1..={max}")
            }
            Error::NotStandard => write!(f, "filling is not standard"),
            Error::WrongShape(want) => write!(f, "wrong shape: expected {want}"),
            Error::InvalidTableau(violations) => {
                write!(f, "invalid tableau: ")?;
                for (k, v) in violations.iter().enumerate() {
                    if k > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            Error::InvalidReverseTableau(msg) => write!(f, "invalid reverse tableau: {msg}"),
            Error::InvalidDyckPath(msg) => write!(f, "invalid Dyck path: {msg}"),
            Error::InvalidTree(msg) => write!(f, "invalid binary tree: {msg}"),
            Error::NotAllowable { position } => write!(
                f,
                "sequence is not allowable at consecutive pair starting at {position}"
            ),
            Error::Cyclic => write!(f, "graph contains a directed cycle"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
