//! Exact integer linear algebra: Smith normal form and abelian invariants.

mod abelian;
mod matrix;
mod snf;

use thiserror::Error;

pub use abelian::{
    abelian_invariants, h2_rank_abelian, is_finite, order, AbelianGroupData, AbelianizationMap,
};
pub use matrix::{bigint_json, IntMatrix};
pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntLinError {
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid matrix literal: {0}")]
    Json(String),
    #[error("order of an infinite abelian group (free rank {rank})")]
    InfiniteOrder { rank: usize },
    #[error("torsion invariant {0} is not at least 2")]
    InvalidInvariant(String),
    #[error("torsion invariants do not form a divisibility chain")]
    NotDivisibilityChain,
}
