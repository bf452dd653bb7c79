use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{Adorability, CatalogEntry};
use crate::alexander::{alexander_polynomial, knot_adorability_verdict};
use crate::cosets::todd_coxeter;
use crate::engine::{explore_derived_series, Budgets, Verdict};
use crate::finite::{abelianization_finite, derived_series};
use crate::intlin::abelian_invariants;

/// Outcome of one named consistency check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            detail,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "check": self.name, "passed": self.passed, "detail": self.detail })
    }
}

fn agrees(verdict: &Verdict, expected: Adorability) -> bool {
    match (verdict, expected) {
        (Verdict::Adorable { doa, .. }, Adorability::Degree(d)) => *doa == d,
        (Verdict::NotAdorable { .. }, Adorability::NotAdorable) => true,
        (Verdict::Unknown { .. }, _) => true,
        _ => false,
    }
}

/// Re-derives every expected fact of `entry` with the computational
/// modules and cross-checks the two forms of oracle pairs.
pub fn verify_entry(entry: &CatalogEntry, budgets: &Budgets) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let ex = &entry.expected;
    let expected_doa = ex.adorability.as_ref().map(|f| f.value);

    let mut series_orders = None;
    if let Some(g) = &entry.model {
        let series = derived_series(g);
        let orders: Vec<usize> = series.iter().map(|h| h.order()).collect();
        if let Some(o) = &ex.order {
            out.push(CheckResult::new(
                "model.order",
                g.order() as u64 == o.value,
                format!("{}", g.order()),
            ));
        }
        if let Some(Adorability::Degree(d)) = expected_doa {
            let doa = series.len() - 1;
            out.push(CheckResult::new("model.doa", doa == d, format!("{doa}")));
        }
        if let Some(a) = &ex.abelianization {
            let got = abelianization_finite(g);
            out.push(CheckResult::new(
                "model.abelianization",
                got == a.value,
                got.to_string(),
            ));
        }
        series_orders = Some(orders);
    }

    let Some(p) = &entry.presentation else {
        return out;
    };
    if let Some(a) = &ex.abelianization {
        let got = abelian_invariants(&p.relation_matrix());
        out.push(CheckResult::new(
            "presentation.abelianization",
            got == a.value,
            got.to_string(),
        ));
    }

    if entry.knot {
        match alexander_polynomial(p) {
            Ok(d) => {
                if let Some(poly) = &ex.alexander_polynomial {
                    let got = d.polynomial.to_string();
                    out.push(CheckResult::new(
                        "knot.alexander_polynomial",
                        got == poly.value,
                        got,
                    ));
                }
            }
            Err(e) => out.push(CheckResult::new(
                "knot.alexander_polynomial",
                false,
                e.to_string(),
            )),
        }
        if let Some(expected) = expected_doa {
            match knot_adorability_verdict(p) {
                Ok(v) => out.push(CheckResult::new(
                    "knot.verdict",
                    agrees(&v, expected),
                    v.to_string(),
                )),
                Err(e) => out.push(CheckResult::new("knot.verdict", false, e.to_string())),
            }
        }
        return out;
    }

    let (trace, verdict) = explore_derived_series(p, budgets);
    match &series_orders {
        Some(orders) => {
            let order = orders[0];
            if order <= budgets.max_cosets {
                let got = todd_coxeter(p, &[], budgets.max_cosets).map(|t| t.n_cosets());
                let detail = match &got {
                    Ok(k) => k.to_string(),
                    Err(e) => e.to_string(),
                };
                out.push(CheckResult::new(
                    "pair.coset_enumeration_order",
                    got == Ok(order),
                    detail,
                ));
            }
            let ratios: Vec<BigInt> = orders
                .windows(2)
                .map(|w| BigInt::from(w[0] / w[1]))
                .chain([BigInt::from(1)])
                .collect();
            let quotients: Vec<BigInt> = trace
                .iter()
                .filter_map(|s| s.quotient.order().ok())
                .collect();
            let passed = verdict.doa() == Some(orders.len() - 1) && quotients == ratios;
            let detail = format!(
                "{verdict}; quotient orders [{}]",
                quotients
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            out.push(CheckResult::new("pair.derived_series", passed, detail));
        }
        None => {
            if let Some(expected) = expected_doa {
                out.push(CheckResult::new(
                    "presentation.verdict",
                    agrees(&verdict, expected),
                    verdict.to_string(),
                ));
            }
        }
    }
    out
}
