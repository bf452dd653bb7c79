use std::path::PathBuf;

use adorn::catalog::{self, CatalogEntry};
use adorn::finite::{parse_generators, FiniteGroup};
use adorn::fpcore::{parse_presentation, Presentation};
use serde_json::{json, Value};

use crate::CliError;

/// Where the group came from.
#[derive(Clone, Debug)]
pub enum Source {
    Inline(String),
    File(PathBuf),
    Catalog(String),
}

impl Source {
    pub fn from_flags(
        inline: Option<String>,
        catalog: Option<String>,
        file: Option<PathBuf>,
    ) -> Result<Self, CliError> {
        match (inline, catalog, file) {
            (Some(t), None, None) => Ok(Source::Inline(t)),
            (None, Some(c), None) => Ok(Source::Catalog(c)),
            (None, None, Some(f)) => Ok(Source::File(f)),
            (None, None, None) => Err(CliError::Input(
                "no input given; pass text, --catalog NAME or --file PATH".into(),
            )),
            _ => Err(CliError::Input(
                "give exactly one of: inline text, --catalog, --file".into(),
            )),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Source::Inline(t) => json!({ "source": "inline", "text": t }),
            Source::File(p) => json!({ "source": "file", "path": p.display().to_string() }),
            Source::Catalog(n) => json!({ "source": "catalog", "name": n }),
        }
    }

    /// Raw text for inline and file sources.
    pub fn text(&self) -> Result<Option<String>, CliError> {
        match self {
            Source::Inline(t) => Ok(Some(t.clone())),
            Source::File(p) => std::fs::read_to_string(p)
                .map(Some)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
            Source::Catalog(_) => Ok(None),
        }
    }
}

/// A resolved group: a concrete finite model, a presentation, or both.
pub struct GroupInput {
    pub model: Option<FiniteGroup>,
    pub presentation: Option<Presentation>,
    pub entry: Option<CatalogEntry>,
}

impl GroupInput {
    pub fn is_knot(&self) -> bool {
        self.entry.as_ref().is_some_and(|e| e.knot)
    }

    pub fn require_presentation(&self) -> Result<&Presentation, CliError> {
        self.presentation
            .as_ref()
            .ok_or_else(|| CliError::Input("this command needs a presentation".into()))
    }
}

pub fn resolve(source: &Source, max_order: usize) -> Result<GroupInput, CliError> {
    if let Source::Catalog(name) = source {
        let e = catalog::get(name)?;
        return Ok(GroupInput {
            model: e.model.clone(),
            presentation: e.presentation.clone(),
            entry: Some(e),
        });
    }
    let text = source.text()?.expect("inline or file");
    let text = text.trim();
    if text.starts_with('<') {
        let p = parse_presentation(text)?;
        return Ok(GroupInput {
            model: None,
            presentation: Some(p),
            entry: None,
        });
    }
    let gens = parse_generators(text)?;
    let g = FiniteGroup::enumerate(&gens, max_order)?;
    Ok(GroupInput {
        model: Some(g),
        presentation: None,
        entry: None,
    })
}
