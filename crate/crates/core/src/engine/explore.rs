use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::verdict::{Certificate, Evidence, NotAdorableReason, Stall, Verdict};
use super::{Budgets, EngineError};
use crate::cosets::{
    coset_table_from_abelianization_with_budget, reidemeister_schreier_with_budget, CosetError,
};
use crate::fpcore::{tietze_simplify, Presentation};
use crate::intlin::{abelian_invariants, AbelianGroupData};

/// One stage `G^i` of an explored derived series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedStep {
    pub depth: usize,
    pub presentation: Presentation,
    /// `G^i / G^{i+1}`.
    pub quotient: AbelianGroupData,
    /// Index of `G^{i+1}` in `G^i` when it was computed, which is the
    /// quotient order. `None` for infinite quotients and for the last step.
    pub index: Option<usize>,
}

impl DerivedStep {
    pub fn to_json(&self) -> Value {
        json!({
            "depth": self.depth,
            "presentation": self.presentation.to_string(),
            "generators": self.presentation.ngens(),
            "relators": self.presentation.relators().len(),
            "quotient": self.quotient,
            "index": self.index,
        })
    }
}

/// Abelianization of `p` and, when it is finite and within `budgets`, a
/// simplified presentation of the commutator subgroup.
pub fn derived_quotient_step(
    p: &Presentation,
    budgets: &Budgets,
) -> Result<(AbelianGroupData, Option<Presentation>), EngineError> {
    let ab = abelian_invariants(&p.relation_matrix());
    if !ab.is_finite() {
        return Ok((ab, None));
    }
    if ab.is_trivial() {
        return Ok((ab, Some(p.clone())));
    }
    let table = match coset_table_from_abelianization_with_budget(p, budgets.max_cosets) {
        Ok(t) => t,
        Err(CosetError::BudgetExhausted { limit }) => {
            return Err(EngineError::SizeBudget {
                order: ab.order().expect("finite"),
                limit,
            })
        }
        Err(e) => return Err(e.into()),
    };
    let sub = reidemeister_schreier_with_budget(p, &table, budgets.tietze_passes)?;
    Ok((ab, Some(sub)))
}

/// Walks the derived series of `p` through successive finite abelianizations.
///
/// Stops with `Adorable` at the first trivial quotient and with
/// `NotAdorable` when some `G^i` is presented as a free group of rank at
/// least 2. Infinite quotients and exhausted budgets give `Unknown`.
pub fn explore_derived_series(p: &Presentation, budgets: &Budgets) -> (Vec<DerivedStep>, Verdict) {
    let mut trace: Vec<DerivedStep> = Vec::new();
    let mut current = tietze_simplify(p, budgets.tietze_passes);
    for depth in 0.. {
        let quotient = abelian_invariants(&current.relation_matrix());
        if current.relators().is_empty() && current.ngens() >= 2 {
            let rank = current.ngens();
            trace.push(DerivedStep {
                depth,
                presentation: current,
                quotient,
                index: None,
            });
            let evidence = Evidence::FreeOfRank { depth, rank };
            return (
                trace,
                Verdict::NotAdorable {
                    reason: NotAdorableReason::NonabelianFree,
                    evidence,
                },
            );
        }
        if quotient.is_trivial() {
            trace.push(DerivedStep {
                depth,
                presentation: current,
                quotient,
                index: None,
            });
            let orders = trace
                .iter()
                .map(|s| s.quotient.order().expect("finite"))
                .collect();
            return (
                trace,
                Verdict::Adorable {
                    doa: depth,
                    certificate: Certificate::DerivedQuotients(orders),
                },
            );
        }
        let stall = if !quotient.is_finite() {
            Some(Stall::InfiniteAbelianization)
        } else if depth >= budgets.max_depth {
            Some(Stall::DepthBudget)
        } else {
            None
        };
        if let Some(stall) = stall {
            trace.push(DerivedStep {
                depth,
                presentation: current,
                quotient,
                index: None,
            });
            return (trace, Verdict::Unknown { depth, stall });
        }
        let next = match derived_quotient_step(&current, budgets) {
            Ok((_, Some(next))) => next,
            _ => {
                trace.push(DerivedStep {
                    depth,
                    presentation: current,
                    quotient,
                    index: None,
                });
                return (
                    trace,
                    Verdict::Unknown {
                        depth,
                        stall: Stall::SizeBudget,
                    },
                );
            }
        };
        let index = quotient.order().ok().and_then(|o: BigInt| o.to_usize());
        trace.push(DerivedStep {
            depth,
            presentation: current,
            quotient,
            index,
        });
        current = next;
    }
    unreachable!("the depth budget bounds the loop")
}

pub(crate) fn max_quotient_order(trace: &[DerivedStep]) -> BigInt {
    trace
        .iter()
        .filter_map(|s| s.quotient.order().ok())
        .max()
        .unwrap_or_else(|| BigInt::from(1))
}
