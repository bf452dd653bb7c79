//! HLT coset enumeration with immediate coincidence processing.
//!
//! Relators are scanned at every live coset in order, defining new cosets
//! at the first gap. Coincidences are resolved through a union-find over
//! cosets in which the smaller-numbered coset always survives.

use std::collections::VecDeque;

use super::table::{column, CosetTable, SubgroupTag};
use super::CosetError;
use crate::fpcore::{Presentation, Word};

const UNDEF: usize = usize::MAX;

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    max_cosets: usize,
    max_defined: usize,
    queue: VecDeque<usize>,
}

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

impl Enumerator {
    fn new(ngens: usize, max_cosets: usize) -> Self {
        Enumerator {
            ncols: 2 * ngens,
            table: vec![vec![UNDEF; 2 * ngens]],
            parent: vec![0],
            live: 1,
            max_cosets,
            // total definitions, dead ones included, bounded to cap memory
            max_defined: max_cosets.saturating_mul(16).max(64),
            queue: VecDeque::new(),
        }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: usize, col: usize) -> Result<(), CosetError> {
        if self.live >= self.max_cosets || self.table.len() >= self.max_defined {
            return Err(CosetError::BudgetExhausted {
                limit: self.max_cosets,
            });
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.ncols]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][col] = d;
        self.table[d][inv(col)] = c;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill] = keep;
        self.live -= 1;
        self.queue.push_back(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for col in 0..self.ncols {
                let f = self.table[e][col];
                if f == UNDEF {
                    continue;
                }
                if self.table[f][inv(col)] == e {
                    self.table[f][inv(col)] = UNDEF;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let e1x = self.table[e1][col];
                if e1x != UNDEF {
                    self.merge(f1, e1x);
                } else {
                    let f1y = self.table[f1][inv(col)];
                    if f1y != UNDEF {
                        self.merge(e1, f1y);
                    } else {
                        self.table[e1][col] = f1;
                        self.table[f1][inv(col)] = e1;
                    }
                }
            }
        }
    }

    /// Scans `word` (as columns) from coset `c`, filling gaps with new cosets.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), CosetError> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j && self.table[f][word[i as usize]] != UNDEF {
                f = self.table[f][word[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inv(word[j as usize])] != UNDEF {
                b = self.table[b][inv(word[j as usize])];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction closes the gap
                let col = word[i as usize];
                self.table[f][col] = b;
                self.table[b][inv(col)] = f;
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

fn to_columns(w: &Word) -> Vec<usize> {
    w.letters().map(|(g, s)| column(g, s)).collect()
}

/// Enumerates the cosets of `<subgroup_gens>` in the group presented by `p`.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_gens: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, CosetError> {
    if max_cosets == 0 {
        return Err(CosetError::BudgetExhausted { limit: 0 });
    }
    let ngens = p.ngens();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(to_columns).collect();
    let mut en = Enumerator::new(ngens, max_cosets);

    for w in subgroup_gens {
        let cols = to_columns(w);
        let start = en.rep(0);
        en.scan_and_fill(start, &cols)?;
    }

    let mut c = 0;
    while c < en.table.len() {
        for r in &relators {
            if !en.alive(c) {
                break;
            }
            en.scan_and_fill(c, r)?;
        }
        if en.alive(c) {
            for col in 0..en.ncols {
                if !en.alive(c) {
                    break;
                }
                if en.table[c][col] == UNDEF {
                    en.define(c, col)?;
                }
            }
        }
        c += 1;
    }

    // renumber live cosets in order; coset 0 stays 0
    let mut newnum = vec![UNDEF; en.table.len()];
    let mut count = 0;
    for (i, slot) in newnum.iter_mut().enumerate() {
        if en.parent[i] == i {
            *slot = count;
            count += 1;
        }
    }
    let mut action = Vec::with_capacity(count);
    for i in 0..en.table.len() {
        if en.parent[i] != i {
            continue;
        }
        let mut row = Vec::with_capacity(en.ncols);
        for col in 0..en.ncols {
            let d = en.table[i][col];
            if d == UNDEF {
                return Err(CosetError::Incomplete);
            }
            let r = en.rep(d);
            row.push(newnum[r]);
        }
        action.push(row);
    }
    let t = CosetTable::new(
        ngens,
        action,
        SubgroupTag::Generated(subgroup_gens.to_vec()),
    )?;
    debug_assert!(t.audit(p).is_ok());
    Ok(t)
}
