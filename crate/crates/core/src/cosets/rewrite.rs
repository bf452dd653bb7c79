use std::collections::VecDeque;

use super::table::{column, CosetTable};
use super::CosetError;
use crate::fpcore::{free_reduce, tietze_simplify, Presentation, Word, DEFAULT_TIETZE_PASSES};

/// Schreier generators of a coset table: the edges `(coset, generator)`
/// outside a breadth-first spanning tree rooted at coset 0.
struct SchreierGenerators {
    /// `index[c][g]` is the ordinal of edge `(c, g)`, `None` for tree edges.
    index: Vec<Vec<Option<usize>>>,
    count: usize,
}

fn schreier_generators(t: &CosetTable) -> Result<SchreierGenerators, CosetError> {
    let n = t.n_cosets();
    let ngens = t.ngens();
    let mut tree = vec![vec![false; ngens]; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..ngens {
            for sign in [1i64, -1] {
                let d = t.action()[c][column(g, sign)];
                if seen[d] {
                    continue;
                }
                seen[d] = true;
                queue.push_back(d);
                if sign == 1 {
                    tree[c][g] = true;
                } else {
                    tree[d][g] = true;
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(CosetError::Malformed("coset graph is not connected".into()));
    }
    let mut count = 0;
    let index = tree
        .iter()
        .map(|row| {
            row.iter()
                .map(|&is_tree| {
                    if is_tree {
                        None
                    } else {
                        count += 1;
                        Some(count - 1)
                    }
                })
                .collect()
        })
        .collect();
    Ok(SchreierGenerators { index, count })
}

/// Reidemeister–Schreier presentation of the subgroup described by `t`,
/// before any simplification. Generators are named `s1, s2, …` in the
/// order (coset, generator) of the non-tree edges; relators are every
/// relator of `p` rewritten at every coset.
pub fn reidemeister_schreier_unsimplified(
    p: &Presentation,
    t: &CosetTable,
) -> Result<Presentation, CosetError> {
    if p.ngens() != t.ngens() {
        return Err(CosetError::GeneratorMismatch {
            table: t.ngens(),
            presentation: p.ngens(),
        });
    }
    let sg = schreier_generators(t)?;
    let mut relators = Vec::with_capacity(p.relators().len() * t.n_cosets());
    for r in p.relators() {
        for c in 0..t.n_cosets() {
            let mut d = c;
            let mut letters = Vec::new();
            for (g, s) in r.letters() {
                if s > 0 {
                    if let Some(k) = sg.index[d][g] {
                        letters.push((k, 1));
                    }
                    d = t.act(d, g, 1);
                } else {
                    let e = t.act(d, g, -1);
                    if let Some(k) = sg.index[e][g] {
                        letters.push((k, -1));
                    }
                    d = e;
                }
            }
            if d != c {
                return Err(CosetError::Malformed(format!(
                    "relator does not close at coset {c}"
                )));
            }
            relators.push(free_reduce(letters));
        }
    }
    Ok(
        Presentation::with_numbered_generators("s", sg.count, relators)
            .expect("schreier indices in range"),
    )
}

/// Subgroup presentation from a complete coset table, simplified by Tietze moves.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<Presentation, CosetError> {
    reidemeister_schreier_with_budget(p, t, DEFAULT_TIETZE_PASSES)
}

pub fn reidemeister_schreier_with_budget(
    p: &Presentation,
    t: &CosetTable,
    tietze_passes: usize,
) -> Result<Presentation, CosetError> {
    let raw = reidemeister_schreier_unsimplified(p, t)?;
    Ok(tietze_simplify(&raw, tietze_passes))
}

/// Rewrites a word that fixes coset 0 as a word in the Schreier generators.
pub fn rewrite_subgroup_word(t: &CosetTable, w: &Word) -> Result<Word, CosetError> {
    let sg = schreier_generators(t)?;
    let mut d = 0;
    let mut letters = Vec::new();
    for (g, s) in w.letters() {
        if s > 0 {
            if let Some(k) = sg.index[d][g] {
                letters.push((k, 1));
            }
            d = t.act(d, g, 1);
        } else {
            let e = t.act(d, g, -1);
            if let Some(k) = sg.index[e][g] {
                letters.push((k, -1));
            }
            d = e;
        }
    }
    if d != 0 {
        return Err(CosetError::NotInSubgroup);
    }
    Ok(free_reduce(letters))
}
