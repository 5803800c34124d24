use thiserror::Error;

use crate::machine::{DeterminismViolation, Violation};
use crate::monoid::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid letter {0:?}: letters are non-empty tokens without whitespace, and `-` is reserved for ε")]
    InvalidLetter(String),

    #[error("({left} | {right} | {shuffled}) is not an element of the shuffling monoid")]
    InvalidTriple { left: Word, right: Word, shuffled: Word },

    #[error("invalid machine: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidMachine(Vec<Violation>),

    #[error("{which} machine is not deterministic: {violation}")]
    NotDeterministic { which: &'static str, violation: DeterminismViolation },

    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
}
