//! Length-nonincreasing Tietze simplification.
//!
//! Moves applied, each producing an isomorphic group:
//! cyclic reduction of relators, deletion of empty relators, deletion of
//! relators equal to another up to rotation and inversion, and elimination
//! of a generator `g` occurring exactly once (exponent ±1) in some relator
//! `r`, provided substituting the solved form of `g` everywhere does not
//! grow the total relator length. Relators of length 1 and 2 always qualify.

use std::collections::HashSet;

use super::presentation::Presentation;
use super::word::Word;

/// Default pass budget used by the rewriting pipeline.
pub const DEFAULT_TIETZE_PASSES: usize = 16;

struct Elimination {
    gen: usize,
    relator: usize,
    delta: i64,
}

/// Simplifies `p` with at most `budget` passes. Each pass cleans the
/// relator list and then eliminates generators greedily until no eligible
/// elimination remains; the loop stops early at a fixpoint.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let mut names: Vec<String> = p.generators().to_vec();
    let mut rels: Vec<Word> = p.relators().to_vec();
    for _ in 0..budget {
        let before = (names.len(), rels.len(), total_length(&rels));
        cleanup(&mut rels);
        while let Some(elim) = best_elimination(names.len(), &rels) {
            eliminate(&mut names, &mut rels, elim);
            cleanup(&mut rels);
        }
        if (names.len(), rels.len(), total_length(&rels)) == before {
            break;
        }
    }
    Presentation::new(names, rels).expect("tietze moves keep relators within the generator range")
}

fn total_length(rels: &[Word]) -> u64 {
    rels.iter().map(Word::length).sum()
}

fn cleanup(rels: &mut Vec<Word>) {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(rels.len());
    for r in rels.drain(..) {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        if seen.insert(r.cyclic_key()) {
            out.push(r);
        }
    }
    *rels = out;
}

fn best_elimination(ngens: usize, rels: &[Word]) -> Option<Elimination> {
    if ngens == 0 {
        return None;
    }
    // occurrences[g] = total |exponent| of g over all relators
    let mut occurrences = vec![0u64; ngens];
    for r in rels {
        for &(g, e) in r.runs() {
            occurrences[g] += e.unsigned_abs();
        }
    }
    let mut best: Option<Elimination> = None;
    for (ri, r) in rels.iter().enumerate() {
        let len = r.length() as i64;
        let mut count = vec![0u32; 0];
        for &(g, _) in r.runs() {
            if count.len() <= g {
                count.resize(g + 1, 0);
            }
            count[g] += 1;
        }
        for &(g, e) in r.runs() {
            if e.abs() != 1 || count[g] != 1 {
                continue;
            }
            let elsewhere = occurrences[g] as i64 - 1;
            let delta = elsewhere * (len - 2) - len;
            if delta > 0 {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => {
                    (delta, std::cmp::Reverse(g), ri)
                        < (b.delta, std::cmp::Reverse(b.gen), b.relator)
                }
            };
            if better {
                best = Some(Elimination {
                    gen: g,
                    relator: ri,
                    delta,
                });
            }
        }
    }
    best
}

fn eliminate(names: &mut Vec<String>, rels: &mut Vec<Word>, elim: Elimination) {
    let r = rels.remove(elim.relator);
    let runs = r.runs();
    let pos = runs
        .iter()
        .position(|&(g, _)| g == elim.gen)
        .expect("pivot generator occurs in relator");
    let eps = runs[pos].1;
    // r rotated to g^eps * w, so g^eps = w^-1
    let w = Word::from_letters(runs[pos + 1..].iter().chain(runs[..pos].iter()).copied());
    let replacement = if eps == 1 { w.inverse() } else { w };

    let ngens = names.len();
    let mut images: Vec<Option<Word>> = Vec::with_capacity(ngens);
    for g in 0..ngens {
        if g == elim.gen {
            images.push(Some(replacement.clone()));
        } else {
            images.push(Some(Word::generator(g)));
        }
    }
    // renumber generators above the eliminated one
    let shift: Vec<Option<Word>> = (0..ngens)
        .map(|g| match g.cmp(&elim.gen) {
            std::cmp::Ordering::Less => Some(Word::generator(g)),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(Word::generator(g - 1)),
        })
        .collect();
    for rel in rels.iter_mut() {
        if rel.runs().iter().any(|&(g, _)| g >= elim.gen) {
            *rel = rel.substitute(&images).substitute(&shift);
        }
    }
    names.remove(elim.gen);
}
