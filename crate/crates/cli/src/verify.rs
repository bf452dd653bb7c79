//! Replays the published facts about adorable groups on catalog data.

use adorn::alexander::{h1prime_rank, knot_adorability_verdict};
use adorn::catalog::{self, verify_entry};
use adorn::engine::{
    check_filtration_certificate, explore_derived_series, Budgets, NotAdorableReason, Verdict,
};
use adorn::finite::{
    derived_series, direct_product, doa_finite, is_perfect, normal_subgroups, quotient, FiniteGroup,
};
use adorn::intlin::{h2_rank_abelian, AbelianGroupData};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// One replayed fact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactCheck {
    pub name: &'static str,
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl FactCheck {
    pub fn to_json(&self) -> Value {
        json!({ "check": self.name, "anchor": self.anchor, "passed": self.passed, "detail": self.detail })
    }
}

fn model(name: &str) -> FiniteGroup {
    catalog::get(name)
        .ok()
        .and_then(|e| e.model)
        .expect("catalog model")
}

/// Catalog finite models up to `max_order`, in catalog order.
fn pool(max_order: usize) -> Vec<(String, FiniteGroup)> {
    catalog::list()
        .into_iter()
        .filter_map(|n| {
            let g = catalog::get(&n).ok()?.model?;
            (g.order() <= max_order).then_some((n, g))
        })
        .collect()
}

fn doa(g: &FiniteGroup) -> usize {
    doa_finite(g).0
}

fn quotient_monotonicity(pool: &[(String, FiniteGroup)]) -> FactCheck {
    let (mut configs, mut violations) = (0, Vec::new());
    for (name, g) in pool {
        let d = doa(g);
        for n in normal_subgroups(g) {
            let q = quotient(g, &n).expect("normal subgroup");
            configs += 1;
            if doa(&q) > d {
                violations.push(format!("{name}/N(order {})", n.order()));
            }
        }
    }
    FactCheck {
        name: "quotient-monotonicity",
        anchor: "a surjective image H of G has doa(H) <= doa(G)",
        passed: violations.is_empty(),
        detail: format!(
            "{configs} (G, N) pairs, {} violations {violations:?}",
            violations.len()
        ),
    }
}

fn product_law(budgets: &Budgets) -> FactCheck {
    let names = [
        "klein_four",
        "cyclic4",
        "symmetric3",
        "symmetric4",
        "quaternion8",
        "alternating4",
        "alternating5",
        "dihedral5",
        "sl2_3",
        "gl2_3",
    ];
    let groups: Vec<FiniteGroup> = names.iter().map(|n| model(n)).collect();
    let (mut pairs, mut violations) = (0, Vec::new());
    for i in 0..groups.len() {
        for j in i..groups.len() {
            let (g, h) = (&groups[i], &groups[j]);
            if g.order() * h.order() > 10_000 {
                continue;
            }
            let p = direct_product(g, h, budgets.max_order).expect("within budget");
            pairs += 1;
            if doa(&p) != doa(g).max(doa(h)) {
                violations.push(format!("{} x {}", names[i], names[j]));
            }
        }
    }
    FactCheck {
        name: "product-law",
        anchor: "doa(G x H) = max(doa(G), doa(H))",
        passed: violations.is_empty(),
        detail: format!(
            "{pairs} products, {} violations {violations:?}",
            violations.len()
        ),
    }
}

fn perfect_extension(pool: &[(String, FiniteGroup)], budgets: &Budgets) -> FactCheck {
    let a5 = model("alternating5");
    let sl25 = model("sl2_5");
    let mut groups: Vec<(String, FiniteGroup)> = pool.to_vec();
    groups.push((
        "alternating5 x alternating5".into(),
        direct_product(&a5, &a5, budgets.max_order).expect("order 3600"),
    ));
    groups.push((
        "alternating5 x sl2_5".into(),
        direct_product(&a5, &sl25, budgets.max_order).expect("order 7200"),
    ));
    let (mut configs, mut violations) = (0, Vec::new());
    for (name, g) in &groups {
        for n in normal_subgroups(g) {
            if !is_perfect(&n) {
                continue;
            }
            let q = quotient(g, &n).expect("normal subgroup");
            if !is_perfect(&q) {
                continue;
            }
            configs += 1;
            if !is_perfect(g) {
                violations.push(format!("{name} over N of order {}", n.order()));
            }
        }
    }
    FactCheck {
        name: "perfect-extension",
        anchor: "if N and G/N are perfect then G is perfect",
        passed: violations.is_empty() && configs > 0,
        detail: format!(
            "{configs} configurations with perfect N and G/N, {} violations {violations:?}",
            violations.len()
        ),
    }
}

fn filtration_certificates(pool: &[(String, FiniteGroup)]) -> FactCheck {
    let mut bad = Vec::new();
    for (name, g) in pool {
        let series = derived_series(g);
        let ok = check_filtration_certificate(g, &series).unwrap_or(false) && doa(g) < series.len();
        if !ok {
            bad.push(name.clone());
        }
    }
    // S4 > V4 > 1 skips A4, and S4/V4 is not abelian
    let s4 = model("symmetric4");
    let v4 = derived_series(&s4)[2].clone();
    let negative =
        check_filtration_certificate(&s4, &[s4.clone(), v4, s4.trivial_like()]).unwrap_or(true);
    FactCheck {
        name: "filtration-certificate",
        anchor: "G is adorable iff a normal filtration with abelian quotients ends at a perfect group",
        passed: bad.is_empty() && !negative,
        detail: format!(
            "{} derived series accepted as certificates, {} rejected {bad:?}; non-abelian link rejected: {}",
            pool.len() - bad.len(),
            bad.len(),
            !negative
        ),
    }
}

fn h2_rank() -> FactCheck {
    let cases = [(0usize, 0u64), (1, 0), (2, 1), (3, 3), (5, 10)];
    let mut got = Vec::new();
    let mut ok = true;
    for (r, expected) in cases {
        let a = AbelianGroupData::from_cyclic_orders(r, &[BigInt::from(2)]);
        let h = h2_rank_abelian(&a);
        ok &= h == expected;
        got.push(format!("rank {r}: {h}"));
    }
    FactCheck {
        name: "h2-rank-formula",
        anchor: "rank of H_2(A) is (rk A choose 2)",
        passed: ok,
        detail: got.join(", "),
    }
}

fn knot_verdicts() -> FactCheck {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, adorable) in [
        ("unknot", true),
        ("trefoil", false),
        ("figure_eight", false),
        ("trefoil_sum_trefoil", false),
    ] {
        let p = catalog::get(name)
            .ok()
            .and_then(|e| e.presentation)
            .expect("knot presentation");
        match knot_adorability_verdict(&p) {
            Ok(v) => {
                let right = match v {
                    Verdict::Adorable { .. } => adorable,
                    Verdict::NotAdorable {
                        reason: NotAdorableReason::NontrivialAlexanderPolynomial,
                        ..
                    } => !adorable,
                    _ => false,
                };
                ok &= right;
                detail.push(format!("{name}: {v}"));
            }
            Err(e) => {
                ok = false;
                detail.push(format!("{name}: {e}"));
            }
        }
    }
    FactCheck {
        name: "knot-adorability",
        anchor: "a knot group is adorable iff its Alexander polynomial is trivial",
        passed: ok,
        detail: detail.join("; "),
    }
}

fn crowell_degree() -> FactCheck {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, degree) in [
        ("unknot", 0),
        ("trefoil", 2),
        ("figure_eight", 2),
        ("trefoil_sum_trefoil", 4),
    ] {
        let p = catalog::get(name)
            .ok()
            .and_then(|e| e.presentation)
            .expect("knot presentation");
        let r = h1prime_rank(&p);
        ok &= r == Ok(degree);
        detail.push(format!("{name}: {r:?}"));
    }
    FactCheck {
        name: "alexander-degree-rank",
        anchor: "rank of G'/G'' equals the degree of the Alexander polynomial",
        passed: ok,
        detail: detail.join("; "),
    }
}

fn named_doas() -> Vec<FactCheck> {
    let sym: Vec<usize> = (5..=7)
        .map(|n| doa(&model(&format!("symmetric{n}"))))
        .collect();
    let a5 = model("alternating5");
    let abelian = ["cyclic2", "cyclic6", "cyclic12", "klein_four"].map(|n| doa(&model(n)));
    vec![
        FactCheck {
            name: "symmetric-degree-one",
            anchor: "symmetric groups on n >= 5 letters are adorable of degree 1",
            passed: sym == [1, 1, 1],
            detail: format!("doa(S5, S6, S7) = {sym:?}"),
        },
        FactCheck {
            name: "perfect-degree-zero",
            anchor: "perfect groups are adorable of degree 0",
            passed: is_perfect(&a5) && doa(&a5) == 0,
            detail: format!("A5 perfect: {}, doa {}", is_perfect(&a5), doa(&a5)),
        },
        FactCheck {
            name: "abelian-degree-one",
            anchor: "nontrivial abelian groups are adorable of degree 1",
            passed: abelian.iter().all(|&d| d == 1),
            detail: format!("doa(C2, C6, C12, V4) = {abelian:?}"),
        },
    ]
}

fn free_groups(budgets: &Budgets) -> FactCheck {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in ["free2", "free3", "free4"] {
        let p = catalog::get(name)
            .ok()
            .and_then(|e| e.presentation)
            .expect("presentation");
        let (_, v) = explore_derived_series(&p, budgets);
        ok &= matches!(
            v,
            Verdict::NotAdorable {
                reason: NotAdorableReason::NonabelianFree,
                ..
            }
        );
        detail.push(format!("{name}: {v}"));
    }
    FactCheck {
        name: "free-not-adorable",
        anchor: "non-abelian free groups are not adorable",
        passed: ok,
        detail: detail.join("; "),
    }
}

fn catalog_checks(budgets: &Budgets) -> Vec<FactCheck> {
    let (mut traces, mut trace_fail) = (0, Vec::new());
    let (mut facts, mut fact_fail) = (0, Vec::new());
    for name in catalog::list() {
        let e = catalog::get(&name).expect("listed");
        for c in verify_entry(&e, budgets) {
            if c.name == "pair.derived_series" {
                traces += 1;
                if !c.passed {
                    trace_fail.push(name.clone());
                }
            } else {
                facts += 1;
                if !c.passed {
                    fact_fail.push(format!("{name}:{}", c.name));
                }
            }
        }
    }
    vec![
        FactCheck {
            name: "derived-quotient-traces",
            anchor: "finite quotients G^i/G^{i+1} along the derived series of presented groups",
            passed: trace_fail.is_empty() && traces > 0,
            detail: format!(
                "{traces} presented finite groups match their models, failures {trace_fail:?}"
            ),
        },
        FactCheck {
            name: "catalog-facts",
            anchor: "expected facts of every catalog entry",
            passed: fact_fail.is_empty(),
            detail: format!("{facts} facts re-derived, failures {fact_fail:?}"),
        },
    ]
}

/// Every check, in a fixed order.
pub fn run_checks(budgets: &Budgets) -> Vec<FactCheck> {
    let small = pool(1000);
    let mut out = named_doas();
    out.push(quotient_monotonicity(&small));
    out.push(product_law(budgets));
    out.push(perfect_extension(&small, budgets));
    out.push(filtration_certificates(&small));
    out.push(h2_rank());
    out.push(knot_verdicts());
    out.push(crowell_degree());
    out.push(free_groups(budgets));
    out.extend(catalog_checks(budgets));
    out
}
