use std::fmt;

use serde::{Deserialize, Serialize};

/// A freely reduced word in a free group, stored run-length encoded as
/// `(generator index, nonzero exponent)` pairs.
///
/// Adjacent runs never share a generator index, so two words are equal as
/// free-group elements exactly when their run lists are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    runs: Vec<(usize, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word { runs: Vec::new() }
    }

    pub fn generator(g: usize) -> Self {
        Word { runs: vec![(g, 1)] }
    }

    pub fn power_of(g: usize, e: i64) -> Self {
        free_reduce([(g, e)])
    }

    /// Builds a word from arbitrary (possibly unreduced) letters.
    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        free_reduce(letters)
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of letters, counting `a^3` as three.
    pub fn length(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.runs.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        Word {
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        free_reduce(self.runs.iter().chain(other.runs.iter()).copied())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let k = n.unsigned_abs();
        let mut out = Vec::with_capacity(base.runs.len() * k as usize);
        for _ in 0..k {
            out.extend_from_slice(&base.runs);
        }
        free_reduce(out)
    }

    /// Exponent sum of every generator; component `j` is the image of the
    /// word in the abelianization of the free group on `ngens` letters.
    pub fn exponent_vector(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0i64; ngens];
        for &(g, e) in &self.runs {
            v[g] += e;
        }
        v
    }

    /// Cyclically reduced representative of the conjugacy class.
    pub fn cyclically_reduced(&self) -> Self {
        let mut runs = self.runs.clone();
        while runs.len() >= 2 {
            let (g0, e0) = runs[0];
            let (gl, el) = runs[runs.len() - 1];
            if g0 != gl {
                break;
            }
            runs.pop();
            let e = e0 + el;
            if e == 0 {
                runs.remove(0);
            } else {
                runs[0] = (g0, e);
            }
        }
        Word { runs }
    }

    /// Canonical key of the cyclic word up to rotation and inversion.
    /// Only meaningful for cyclically reduced words.
    pub fn cyclic_key(&self) -> Vec<(usize, i64)> {
        let mut best: Option<Vec<(usize, i64)>> = None;
        for w in [self.runs.clone(), self.inverse().runs] {
            let n = w.len();
            for start in 0..n.max(1) {
                let rot: Vec<_> = w[start..]
                    .iter()
                    .chain(w[..start].iter())
                    .copied()
                    .collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Replaces generator indices through `map`; `None` entries are deleted
    /// (sent to the identity) and entries map to replacement words.
    pub fn substitute(&self, images: &[Option<Word>]) -> Self {
        let mut letters = Vec::new();
        for &(g, e) in &self.runs {
            if let Some(w) = &images[g] {
                let base = if e < 0 { w.inverse() } else { w.clone() };
                for _ in 0..e.unsigned_abs() {
                    letters.extend_from_slice(&base.runs);
                }
            }
        }
        free_reduce(letters)
    }

    /// Expands runs into signed single letters: `(g, +1)` or `(g, -1)`.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.runs
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

/// Free reduction of a raw letter sequence: merges adjacent runs of the
/// same generator and deletes runs whose exponent cancels to zero.
pub fn free_reduce<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Word {
    let mut runs: Vec<(usize, i64)> = Vec::new();
    for (g, e) in letters {
        if e == 0 {
            continue;
        }
        match runs.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    runs.pop();
                }
            }
            _ => runs.push((g, e)),
        }
    }
    Word { runs }
}

/// `u v u^-1 v^-1`, freely reduced.
pub fn commutator(u: &Word, v: &Word) -> Word {
    free_reduce(
        u.runs
            .iter()
            .copied()
            .chain(v.runs.iter().copied())
            .chain(u.inverse().runs)
            .chain(v.inverse().runs),
    )
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, &(g, e)) in self.word.runs.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match self.names.get(g) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "g{g}")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: usize = 0;
    const B: usize = 1;

    #[test]
    fn reduce_cancels_pair() {
        assert!(free_reduce([(A, 1), (A, -1)]).is_empty());
    }

    #[test]
    fn reduce_merges_exponents() {
        assert_eq!(
            free_reduce([(A, 2), (A, 3), (B, 1)]).runs(),
            &[(A, 5), (B, 1)]
        );
    }

    #[test]
    fn reduce_nested_cancellation() {
        assert!(free_reduce([(A, 1), (B, 1), (B, -1), (A, -1)]).is_empty());
    }

    #[test]
    fn commutator_examples() {
        let a = Word::generator(A);
        let b = Word::generator(B);
        assert!(commutator(&a, &a).is_empty());
        assert_eq!(
            commutator(&a, &b).runs(),
            &[(A, 1), (B, 1), (A, -1), (B, -1)]
        );
        let ab = a.concat(&b);
        assert_eq!(commutator(&ab, &b), commutator(&a, &b));
    }

    #[test]
    fn exponent_vectors() {
        let w = Word::from_letters([(A, 1), (B, 1), (A, 1), (B, -1)]);
        assert_eq!(w.exponent_vector(2), vec![2, 0]);
        assert_eq!(Word::empty().exponent_vector(3), vec![0, 0, 0]);
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_letters([(A, 2), (B, 1), (A, -1)]);
        assert_eq!(w.cyclically_reduced().runs(), &[(A, 1), (B, 1)]);
        let w = Word::from_letters([(A, 1), (B, 1), (A, -1)]);
        assert_eq!(w.cyclically_reduced().runs(), &[(B, 1)]);
    }

    #[test]
    fn cyclic_key_identifies_rotations_and_inverses() {
        let w = Word::from_letters([(A, 1), (B, 2), (A, -3)]).cyclically_reduced();
        let rot = Word::from_letters([(B, 2), (A, -2)]);
        assert_eq!(w.cyclic_key(), rot.cyclic_key());
        assert_eq!(w.cyclic_key(), rot.inverse().cyclic_key());
    }

    #[test]
    fn display_uses_names() {
        let names = vec!["a".to_string(), "b".to_string()];
        let w = Word::from_letters([(A, 2), (B, -1), (A, 1)]);
        assert_eq!(w.display(&names).to_string(), "a^2*b^-1*a");
        assert_eq!(Word::empty().display(&names).to_string(), "1");
    }
}
