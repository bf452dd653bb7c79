use serde_json::{json, Value};

use super::CosetError;
use crate::fpcore::{parse_word, Presentation, Word};

/// Which subgroup a coset table was built for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupTag {
    Commutator,
    Generated(Vec<Word>),
}

/// Column of the signed generator `g^sign` (`sign` = ±1).
pub fn column(g: usize, sign: i64) -> usize {
    2 * g + usize::from(sign < 0)
}

/// A complete coset table. `action[c][column(g, ±1)]` is the coset `c·g^±1`.
/// Coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    action: Vec<Vec<usize>>,
    subgroup: SubgroupTag,
}

impl CosetTable {
    pub fn new(
        ngens: usize,
        action: Vec<Vec<usize>>,
        subgroup: SubgroupTag,
    ) -> Result<Self, CosetError> {
        if action.is_empty() {
            return Err(CosetError::Malformed(
                "a coset table has at least one coset".into(),
            ));
        }
        let n = action.len();
        for row in &action {
            if row.len() != 2 * ngens {
                return Err(CosetError::Malformed(format!(
                    "expected {} columns, found {}",
                    2 * ngens,
                    row.len()
                )));
            }
            if row.iter().any(|&c| c >= n) {
                return Err(CosetError::Malformed("coset index out of range".into()));
            }
        }
        let t = CosetTable {
            ngens,
            action,
            subgroup,
        };
        t.check_inverse_columns()?;
        Ok(t)
    }

    pub fn n_cosets(&self) -> usize {
        self.action.len()
    }

    pub fn index(&self) -> usize {
        self.n_cosets()
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn subgroup(&self) -> &SubgroupTag {
        &self.subgroup
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn act(&self, coset: usize, g: usize, sign: i64) -> usize {
        self.action[coset][column(g, sign)]
    }

    /// Coset reached from `coset` by reading `w`.
    pub fn trace(&self, coset: usize, w: &Word) -> usize {
        w.letters().fold(coset, |c, (g, s)| self.act(c, g, s))
    }

    fn check_inverse_columns(&self) -> Result<(), CosetError> {
        for (c, row) in self.action.iter().enumerate() {
            for g in 0..self.ngens {
                if self.action[row[column(g, 1)]][column(g, -1)] != c {
                    return Err(CosetError::Malformed(format!(
                        "columns of generator {g} and its inverse are not mutually inverse at coset {c}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive check of the table invariants against `p`: inverse
    /// columns, relator closure at every coset, subgroup generators fixing coset 0.
    pub fn audit(&self, p: &Presentation) -> Result<(), CosetError> {
        if p.ngens() != self.ngens {
            return Err(CosetError::GeneratorMismatch {
                table: self.ngens,
                presentation: p.ngens(),
            });
        }
        self.check_inverse_columns()?;
        for (ri, r) in p.relators().iter().enumerate() {
            for c in 0..self.n_cosets() {
                if self.trace(c, r) != c {
                    return Err(CosetError::Malformed(format!(
                        "relator {ri} does not close at coset {c}"
                    )));
                }
            }
        }
        if let SubgroupTag::Generated(words) = &self.subgroup {
            for w in words {
                if self.trace(0, w) != 0 {
                    return Err(CosetError::Malformed(
                        "subgroup generator moves coset 0".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `{"index": k, "action": [[...]], "subgroup": "commutator" | [words]}`.
    /// Columns are ordered `g0, g0^-1, g1, g1^-1, …`.
    pub fn to_json(&self, p: &Presentation) -> Value {
        let subgroup = match &self.subgroup {
            SubgroupTag::Commutator => json!("commutator"),
            SubgroupTag::Generated(ws) => {
                json!(ws.iter().map(|w| p.word_to_string(w)).collect::<Vec<_>>())
            }
        };
        json!({ "index": self.n_cosets(), "action": self.action, "subgroup": subgroup })
    }

    pub fn from_json(v: &Value, p: &Presentation) -> Result<Self, CosetError> {
        let bad = |m: &str| CosetError::Malformed(m.to_string());
        let action: Vec<Vec<usize>> = serde_json::from_value(
            v.get("action")
                .cloned()
                .ok_or_else(|| bad("missing action"))?,
        )
        .map_err(|e| CosetError::Malformed(e.to_string()))?;
        if v.get("index").and_then(Value::as_u64) != Some(action.len() as u64) {
            return Err(bad("index does not match the number of rows"));
        }
        let subgroup = match v.get("subgroup") {
            Some(Value::String(s)) if s == "commutator" => SubgroupTag::Commutator,
            Some(Value::Array(ws)) => {
                let mut words = Vec::new();
                for w in ws {
                    let s = w
                        .as_str()
                        .ok_or_else(|| bad("subgroup words must be strings"))?;
                    words.push(parse_word(p, s).map_err(|e| CosetError::Malformed(e.to_string()))?);
                }
                SubgroupTag::Generated(words)
            }
            _ => return Err(bad("subgroup must be \"commutator\" or a list of words")),
        };
        let t = CosetTable::new(p.ngens(), action, subgroup)?;
        t.audit(p)?;
        Ok(t)
    }
}
