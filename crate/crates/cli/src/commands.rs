use std::fmt::Write as _;

use adorn::alexander::{alexander_polynomial, knot_adorability_verdict};
use adorn::catalog::{self, Adorability};
use adorn::engine::{
    explore_derived_series, random_probe, Budgets, Certificate, DerivedStep, ProbeParams, Stall,
    Verdict,
};
use adorn::finite::{abelianization_finite, derived_series, doa_finite, FiniteGroup, Terminal};
use adorn::intlin::{
    abelian_invariants, bigint_json, h2_rank_abelian, smith_normal_form, AbelianGroupData,
    IntMatrix,
};
use serde_json::{json, Value};

use crate::input::GroupInput;
use crate::CliError;

/// Command outcome before it is wrapped in the output envelope.
pub struct Report {
    pub result: Value,
    pub text: String,
    pub exit: i32,
}

impl Report {
    fn ok(result: Value, text: String) -> Self {
        Report {
            result,
            text,
            exit: 0,
        }
    }
}

fn verdict_exit(v: &Verdict) -> i32 {
    if v.is_unknown() {
        2
    } else {
        0
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn trace_text(trace: &[DerivedStep]) -> String {
    let mut s = String::new();
    for step in trace {
        let _ = writeln!(
            s,
            "  depth {}: {} generators, {} relators; quotient {}",
            step.depth,
            step.presentation.ngens(),
            step.presentation.relators().len(),
            step.quotient
        );
    }
    s
}

fn finite_series_json(series: &[FiniteGroup]) -> Value {
    Value::Array(
        series
            .iter()
            .enumerate()
            .map(|(i, h)| json!({ "depth": i, "order": h.order(), "generators": h.generators_display() }))
            .collect(),
    )
}

fn finite_verdict(g: &FiniteGroup) -> (Vec<FiniteGroup>, Verdict, Terminal) {
    let series = derived_series(g);
    let (doa, terminal) = doa_finite(g);
    let orders = series.iter().map(FiniteGroup::order).collect();
    (
        series,
        Verdict::Adorable {
            doa,
            certificate: Certificate::FiniteDerivedSeries(orders),
        },
        terminal,
    )
}

fn terminal_name(t: Terminal) -> &'static str {
    match t {
        Terminal::Perfect => "perfect",
        Terminal::Trivial => "trivial",
    }
}

pub fn doa(input: &GroupInput, budgets: &Budgets) -> Result<Report, CliError> {
    if let Some(g) = &input.model {
        let (series, verdict, terminal) = finite_verdict(g);
        let orders: Vec<usize> = series.iter().map(FiniteGroup::order).collect();
        let text = format!(
            "{verdict}\norder {}; derived series orders {}; terminal {}\n",
            g.order(),
            join(&orders, " > "),
            terminal_name(terminal)
        );
        let result = json!({
            "kind": "finite",
            "order": g.order(),
            "verdict": verdict.to_json(),
            "terminal": terminal_name(terminal),
            "series": finite_series_json(&series),
        });
        return Ok(Report::ok(result, text));
    }
    let p = input.require_presentation()?;
    let (trace, mut verdict) = explore_derived_series(p, budgets);
    let mut method = "derived_quotients";
    if input.is_knot()
        && verdict
            == (Verdict::Unknown {
                depth: 0,
                stall: Stall::InfiniteAbelianization,
            })
    {
        verdict = knot_adorability_verdict(p)?;
        method = "alexander_polynomial";
    }
    let text = format!("{verdict}\n{}", trace_text(&trace));
    let result = json!({
        "kind": "presented",
        "method": method,
        "verdict": verdict.to_json(),
        "trace": trace.iter().map(DerivedStep::to_json).collect::<Vec<_>>(),
    });
    let exit = verdict_exit(&verdict);
    Ok(Report { result, text, exit })
}

pub fn abelianize(input: &GroupInput) -> Result<Report, CliError> {
    let (a, kind): (AbelianGroupData, &str) = match (&input.model, &input.presentation) {
        (Some(g), _) => (abelianization_finite(g), "finite"),
        (None, Some(p)) => (abelian_invariants(&p.relation_matrix()), "presented"),
        (None, None) => unreachable!("resolved inputs carry a group"),
    };
    let mut result = json!({ "kind": kind, "abelianization": a });
    let mut text = format!("{a}\n");
    if let Some(p) = input
        .presentation
        .as_ref()
        .filter(|_| input.model.is_none())
    {
        result["relation_matrix"] = p.relation_matrix().to_json();
    }
    let h2 = h2_rank_abelian(&a);
    result["h2_rank_of_abelianization"] = json!(h2);
    let _ = writeln!(text, "rank of H_2 of the abelianization: {h2}");
    Ok(Report::ok(result, text))
}

pub fn snf(text: &str) -> Result<Report, CliError> {
    let m = IntMatrix::from_json(text.trim())?;
    let s = smith_normal_form(&m);
    let diag: Vec<Value> = s.diag.iter().map(bigint_json).collect();
    let certified = s.certifies(&m);
    let result = json!({
        "diag": diag,
        "left": s.left.to_json(),
        "right": s.right.to_json(),
        "certified": certified,
        "abelian_group": abelian_invariants(&m),
    });
    let text = format!(
        "diag [{}]\nU = {}\nV = {}\ncertified: {certified}\n",
        join(&s.diag, ","),
        s.left,
        s.right
    );
    Ok(Report::ok(result, text))
}

pub fn alexander(input: &GroupInput) -> Result<Report, CliError> {
    let p = input.require_presentation()?;
    let data = alexander_polynomial(p)?;
    let verdict = knot_adorability_verdict(p)?;
    let result = json!({
        "alexander": data.to_json(),
        "h1prime_rank": data.degree,
        "verdict": verdict.to_json(),
    });
    let text = format!("{}\ndegree {}\n{verdict}\n", data.polynomial, data.degree);
    Ok(Report::ok(result, text))
}

pub fn series(input: &GroupInput, budgets: &Budgets) -> Result<Report, CliError> {
    if let Some(g) = &input.model {
        let (series, verdict, _) = finite_verdict(g);
        let mut text = String::new();
        for (i, h) in series.iter().enumerate() {
            let _ = writeln!(text, "G^{i}: order {}", h.order());
        }
        let _ = writeln!(text, "{verdict}");
        let result = json!({ "kind": "finite", "series": finite_series_json(&series), "verdict": verdict.to_json() });
        return Ok(Report::ok(result, text));
    }
    let p = input.require_presentation()?;
    let (trace, verdict) = explore_derived_series(p, budgets);
    let mut text = String::new();
    for step in &trace {
        let _ = writeln!(text, "G^{}: {}", step.depth, step.presentation);
        let _ = writeln!(
            text,
            "  G^{}/G^{} = {}",
            step.depth,
            step.depth + 1,
            step.quotient
        );
    }
    let _ = writeln!(text, "{verdict}");
    let result = json!({
        "kind": "presented",
        "trace": trace.iter().map(DerivedStep::to_json).collect::<Vec<_>>(),
        "verdict": verdict.to_json(),
    });
    let exit = verdict_exit(&verdict);
    Ok(Report { result, text, exit })
}

pub fn explore(params: &ProbeParams) -> Report {
    let report = random_probe(params);
    let mut text = format!(
        "{} samples ({} generators, {} relators, length <= {}), seed {}\n",
        report.samples, params.n_gens, params.n_rels, params.max_len, report.seed
    );
    for (label, count) in &report.verdicts {
        let _ = writeln!(text, "  {label}: {count}");
    }
    let _ = writeln!(
        text,
        "depth histogram: [{}]",
        join(&report.depth_histogram, ", ")
    );
    let _ = writeln!(
        text,
        "largest finite quotient: {}",
        report.max_quotient_order
    );
    Report::ok(report.to_json(), text)
}

pub fn catalog_list() -> Result<Report, CliError> {
    let mut entries = Vec::new();
    let mut text = String::new();
    for name in catalog::list() {
        let e = catalog::get(&name)?;
        let mut forms = Vec::new();
        if e.model.is_some() {
            forms.push("model");
        }
        if e.presentation.is_some() {
            forms.push("presentation");
        }
        let adorability = e.expected.adorability.as_ref().map(|f| {
            let value = match f.value {
                Adorability::Degree(d) => format!("doa {d}"),
                Adorability::NotAdorable => "not adorable".to_string(),
            };
            (value, f.provenance.name())
        });
        let _ = writeln!(
            text,
            "{name:<24} {:<22} {}",
            forms.join("+"),
            adorability
                .as_ref()
                .map_or(String::new(), |(v, p)| format!("{v} [{p}]"))
        );
        entries.push(json!({
            "name": name,
            "description": e.description,
            "forms": forms,
            "adorability": adorability.map(|(v, p)| json!({ "value": v, "provenance": p })),
        }));
    }
    Ok(Report::ok(json!({ "entries": entries }), text))
}

pub fn catalog_show(name: &str) -> Result<Report, CliError> {
    let e = catalog::get(name)?;
    let v = e.to_json();
    let mut text = format!("{}: {}\n", e.name, e.description);
    if let Some(g) = &e.model {
        let _ = writeln!(
            text,
            "model: order {} on {} points, generators {}",
            g.order(),
            g.degree(),
            g.generators_display().join("; ")
        );
    }
    if let Some(p) = &e.presentation {
        let _ = writeln!(text, "presentation: {p}");
    }
    for (key, fact) in v["expected"].as_object().expect("object") {
        if !fact.is_null() {
            let _ = writeln!(
                text,
                "{key}: {} [{}]",
                fact["value"],
                fact["provenance"].as_str().unwrap_or("")
            );
        }
    }
    Ok(Report::ok(v, text))
}
