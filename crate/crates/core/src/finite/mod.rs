//! Concrete finite groups: enumeration from permutation or matrix
//! generators, derived series and the usual structural predicates.

mod group;
mod modmatrix;
mod ops;
mod perm;
mod series;

use thiserror::Error;

pub use group::{parse_generators, ElementKind, FiniteGroup, GroupGenerator, DEFAULT_MAX_ORDER};
pub use modmatrix::{parse_mod_matrix, ModMatrix};
pub use ops::{
    abelian_invariants_finite, abelianization_finite, direct_product, normal_subgroups, quotient,
};
pub use perm::{parse_cycles, Permutation};
pub use series::{
    derived_series, derived_subgroup, doa_finite, is_perfect, is_simple, is_solvable, Terminal,
    SIMPLICITY_LIMIT,
};

/// Enumerates the group generated by `generators`.
pub fn enumerate(
    generators: &[GroupGenerator],
    max_order: usize,
) -> Result<FiniteGroup, FiniteError> {
    FiniteGroup::enumerate(generators, max_order)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiniteError {
    #[error("at least one generator is required")]
    EmptyGenerators,
    #[error("generators must all be permutations or all be matrices of one size and modulus")]
    MixedGenerators,
    #[error("group order exceeds the enumeration budget of {limit}")]
    BudgetExceeded { limit: usize },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("simplicity is only decided up to order {limit}; group has order {order}")]
    SimplicityBudget { order: usize, limit: usize },
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("cycle point outside degree {degree}")]
    PointOutOfRange { degree: usize },
    #[error("matrix is not invertible modulo its modulus")]
    SingularMatrix,
    #[error("invalid generator literal: {0}")]
    Parse(String),
    #[error("structural audit failed: {0}")]
    AuditFailed(String),
}
