//! Named groups used as fixtures, examples and oracle pairs.

mod entries;
mod verify;

use serde_json::{json, Value};
use thiserror::Error;

use crate::finite::FiniteGroup;
use crate::fpcore::Presentation;
use crate::intlin::AbelianGroupData;

pub use verify::{verify_entry, CheckResult};

/// Where an expected fact comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Stated in the published literature on adorable groups.
    Published,
    /// Computed independently and cross-checked.
    Derived,
    /// Immediate from the definitions.
    Definitional,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Published => "published",
            Provenance::Derived => "derived",
            Provenance::Definitional => "definitional",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact<T> {
    pub value: T,
    pub provenance: Provenance,
}

impl<T> Fact<T> {
    pub fn new(value: T, provenance: Provenance) -> Self {
        Fact { value, provenance }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adorability {
    Degree(usize),
    NotAdorable,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub adorability: Option<Fact<Adorability>>,
    pub order: Option<Fact<u64>>,
    pub abelianization: Option<Fact<AbelianGroupData>>,
    pub alexander_polynomial: Option<Fact<String>>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub model: Option<FiniteGroup>,
    pub presentation: Option<Presentation>,
    /// Whether the presentation is a knot group presentation.
    pub knot: bool,
    pub expected: ExpectedFacts,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry '{0}'")]
    Unknown(String),
    #[error("catalog entry '{0}' has no presentation")]
    NoPresentation(String),
}

/// Suffix selecting the presented form of an entry.
pub const PRESENTED_SUFFIX: &str = "_presented";

/// All registered names, base entries first, then the `_presented` forms.
pub fn list() -> Vec<String> {
    let base = entries::base_names();
    let presented: Vec<String> = base
        .iter()
        .filter(|n| entries::has_model_and_presentation(n))
        .map(|n| format!("{n}{PRESENTED_SUFFIX}"))
        .collect();
    base.into_iter().chain(presented).collect()
}

pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    if let Some(base) = name.strip_suffix(PRESENTED_SUFFIX) {
        let mut e = entries::build(base).ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
        if e.presentation.is_none() {
            return Err(CatalogError::NoPresentation(base.to_string()));
        }
        e.name = name.to_string();
        e.model = None;
        return Ok(e);
    }
    entries::build(name).ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

fn fact_json<T>(f: &Option<Fact<T>>, value: impl Fn(&T) -> Value) -> Value {
    match f {
        Some(f) => json!({ "value": value(&f.value), "provenance": f.provenance.name() }),
        None => Value::Null,
    }
}

impl CatalogEntry {
    pub fn to_json(&self) -> Value {
        let e = &self.expected;
        json!({
            "name": self.name,
            "description": self.description,
            "model": self.model.as_ref().map(|g| json!({
                "degree": g.degree(),
                "order": g.order(),
                "generators": g.generators_display(),
            })),
            "presentation": self.presentation.as_ref().map(ToString::to_string),
            "knot": self.knot,
            "expected": {
                "adorability": fact_json(&e.adorability, |a| match a {
                    Adorability::Degree(d) => json!({ "adorable": true, "doa": d }),
                    Adorability::NotAdorable => json!({ "adorable": false }),
                }),
                "order": fact_json(&e.order, |o| json!(o)),
                "abelianization": fact_json(&e.abelianization, |a| json!(a.to_string())),
                "alexander_polynomial": fact_json(&e.alexander_polynomial, |p| json!(p)),
            },
        })
    }
}
