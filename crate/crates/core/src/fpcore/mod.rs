//! Words over free groups, finite presentations and their elementary algebra.

mod parse;
mod presentation;
mod tietze;
mod word;

use thiserror::Error;

pub use parse::{parse_presentation, parse_word};
pub use presentation::{relation_matrix, Presentation};
pub use tietze::{tietze_simplify, DEFAULT_TIETZE_PASSES};
pub use word::{commutator, free_reduce, Word, WordDisplay};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("syntax error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("undeclared generator '{name}' at byte {pos}")]
    UndeclaredGenerator { name: String, pos: usize },
    #[error("duplicate generator name '{0}'")]
    DuplicateGenerator(String),
    #[error("generator names must be nonempty")]
    EmptyGeneratorName,
    #[error("relator references generator {index} but only {ngens} are declared")]
    GeneratorOutOfRange { index: usize, ngens: usize },
}

/// Exponent sums of `w` over `ngens` generators.
pub fn exponent_vector(w: &Word, ngens: usize) -> Vec<i64> {
    w.exponent_vector(ngens)
}
