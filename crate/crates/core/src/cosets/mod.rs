//! Coset tables over finitely presented groups and subgroup presentations.

mod abelian_table;
mod rewrite;
mod table;
mod todd_coxeter;

use thiserror::Error;

pub use abelian_table::{
    coset_table_from_abelianization, coset_table_from_abelianization_with_budget,
};
pub use rewrite::{
    reidemeister_schreier, reidemeister_schreier_unsimplified, reidemeister_schreier_with_budget,
    rewrite_subgroup_word,
};
pub use table::{column, CosetTable, SubgroupTag};
pub use todd_coxeter::todd_coxeter;

/// Default coset budget.
pub const DEFAULT_MAX_COSETS: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("abelianization is infinite (free rank {rank})")]
    InfiniteAbelianization { rank: usize },
    #[error("coset budget of {limit} exhausted (index may be infinite or larger than the budget)")]
    BudgetExhausted { limit: usize },
    #[error("coset table is incomplete")]
    Incomplete,
    #[error("malformed coset table: {0}")]
    Malformed(String),
    #[error("table has {table} generators but the presentation has {presentation}")]
    GeneratorMismatch { table: usize, presentation: usize },
    #[error("word does not lie in the subgroup")]
    NotInSubgroup,
}
