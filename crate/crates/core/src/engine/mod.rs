//! Iterated derived quotients of finitely presented groups.

mod explore;
mod filtration;
mod probe;
mod verdict;

use num_bigint::BigInt;
use thiserror::Error;

use crate::cosets::{CosetError, DEFAULT_MAX_COSETS};
use crate::finite::{FiniteError, DEFAULT_MAX_ORDER};
use crate::fpcore::DEFAULT_TIETZE_PASSES;

pub use explore::{derived_quotient_step, explore_derived_series, DerivedStep};
pub use filtration::check_filtration_certificate;
pub use probe::{probe_presentations, random_presentation, random_probe, ProbeParams, ProbeReport};
pub use verdict::{Certificate, Evidence, NotAdorableReason, Stall, Verdict};

/// Resource limits shared by the engine and the front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub max_depth: usize,
    pub max_cosets: usize,
    pub max_order: usize,
    pub tietze_passes: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_depth: 8,
            max_cosets: DEFAULT_MAX_COSETS,
            max_order: DEFAULT_MAX_ORDER,
            tietze_passes: DEFAULT_TIETZE_PASSES,
        }
    }
}

impl Budgets {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "max_depth": self.max_depth,
            "max_cosets": self.max_cosets,
            "max_order": self.max_order,
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("abelianization of order {order} exceeds the coset budget of {limit}")]
    SizeBudget { order: BigInt, limit: usize },
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Finite(#[from] FiniteError),
    #[error("a filtration needs at least one member")]
    EmptyChain,
    #[error("filtration must start at the ambient group")]
    ChainStart,
}
