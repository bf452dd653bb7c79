use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::Word;
use super::FpError;
use crate::intlin::IntMatrix;

/// A finite presentation `< generators | relators >`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, FpError> {
        let mut seen = HashSet::new();
        for name in &generators {
            if name.is_empty() {
                return Err(FpError::EmptyGeneratorName);
            }
            if !seen.insert(name.as_str()) {
                return Err(FpError::DuplicateGenerator(name.clone()));
            }
        }
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= generators.len() {
                    return Err(FpError::GeneratorOutOfRange {
                        index: g,
                        ngens: generators.len(),
                    });
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Presentation with generators named by `prefix` followed by a 1-based ordinal.
    pub fn with_numbered_generators(
        prefix: &str,
        ngens: usize,
        relators: Vec<Word>,
    ) -> Result<Self, FpError> {
        let names = (1..=ngens).map(|k| format!("{prefix}{k}")).collect();
        Presentation::new(names, relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Sum of relator lengths.
    pub fn total_length(&self) -> u64 {
        self.relators.iter().map(Word::length).sum()
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| r.exponent_vector(self.ngens()))
            .collect();
        IntMatrix::from_i64_rows(self.relators.len(), self.ngens(), &rows)
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        w.display(&self.generators).to_string()
    }
}

/// Free-standing form of [`Presentation::relation_matrix`].
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    p.relation_matrix()
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("< ")?;
        f.write_str(&self.generators.join(", "))?;
        if self.generators.is_empty() {
            f.write_str("| ")?;
        } else {
            f.write_str(" | ")?;
        }
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        if !self.relators.is_empty() {
            f.write_str(" ")?;
        }
        f.write_str(">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpcore::parse_presentation;

    #[test]
    fn relation_matrix_examples() {
        let klein = parse_presentation("< a,b | a*b*a*b^-1 >").unwrap();
        assert_eq!(klein.relation_matrix().to_i64_rows(), vec![vec![2, 0]]);

        let free = parse_presentation("< a,b | >").unwrap();
        let m = free.relation_matrix();
        assert_eq!((m.rows(), m.cols()), (0, 2));

        let trefoil = parse_presentation("< x,y | x*y*x*y^-1*x^-1*y^-1 >").unwrap();
        assert_eq!(trefoil.relation_matrix().to_i64_rows(), vec![vec![1, -1]]);
    }

    #[test]
    fn rejects_out_of_range_relator() {
        let err = Presentation::new(vec!["a".into()], vec![Word::generator(1)]).unwrap_err();
        assert!(matches!(
            err,
            FpError::GeneratorOutOfRange { index: 1, ngens: 1 }
        ));
    }

    #[test]
    fn display_forms() {
        let p = parse_presentation("<a,b|a^2,b^-3>").unwrap();
        assert_eq!(p.to_string(), "< a, b | a^2, b^-3 >");
        let t = Presentation::new(vec![], vec![]).unwrap();
        assert_eq!(t.to_string(), "< | >");
        let f = parse_presentation("<a,b|>").unwrap();
        assert_eq!(f.to_string(), "< a, b | >");
    }
}
