use serde::Serialize;

use super::group::FiniteGroup;
use super::FiniteError;

/// Largest order for which simplicity is decided.
pub const SIMPLICITY_LIMIT: usize = 10_000;

/// Where the derived series of a finite group becomes stationary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    /// A nontrivial perfect group.
    Perfect,
    /// The trivial group (the solvable case).
    Trivial,
}

/// `[G, G]`, computed as the normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &FiniteGroup) -> FiniteGroup {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = gens[i].commutator(&gens[j]);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    g.normal_closure(&seeds)
        .expect("commutators of generators are elements")
}

/// `G = G^0 ⊋ G^1 ⊋ … ⊋ G^d` where `G^d` is perfect; `d` is the degree of adorability.
pub fn derived_series(g: &FiniteGroup) -> Vec<FiniteGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("series is nonempty");
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// Smallest `i` with `G^i = G^{i+1}`, and what the series stabilizes at.
pub fn doa_finite(g: &FiniteGroup) -> (usize, Terminal) {
    let series = derived_series(g);
    let last = series.last().expect("series is nonempty");
    let terminal = if last.is_trivial() {
        Terminal::Trivial
    } else {
        Terminal::Perfect
    };
    (series.len() - 1, terminal)
}

/// The trivial group counts as perfect.
pub fn is_perfect(g: &FiniteGroup) -> bool {
    derived_subgroup(g).order() == g.order()
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    doa_finite(g).1 == Terminal::Trivial
}

/// Nontrivial and every nonidentity conjugacy class normally generates the group.
pub fn is_simple(g: &FiniteGroup) -> Result<bool, FiniteError> {
    if g.order() > SIMPLICITY_LIMIT {
        return Err(FiniteError::SimplicityBudget {
            order: g.order(),
            limit: SIMPLICITY_LIMIT,
        });
    }
    if g.is_trivial() {
        return Ok(false);
    }
    for x in g.conjugacy_class_representatives() {
        if x.is_identity() {
            continue;
        }
        if g.normal_closure(&[x])?.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{parse_generators, DEFAULT_MAX_ORDER};

    fn group(text: &str) -> FiniteGroup {
        FiniteGroup::enumerate(&parse_generators(text).unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    /// Subgroup generated by the commutators of all pairs of elements.
    fn brute_force_derived(g: &FiniteGroup) -> usize {
        let elems: Vec<_> = g.elements().cloned().collect();
        let mut comms = Vec::new();
        for a in &elems {
            for b in &elems {
                comms.push(a.commutator(b));
            }
        }
        g.subgroup(&comms).unwrap().order()
    }

    #[test]
    fn s3_derived_is_a3() {
        let s3 = group("(0 1), (0 1 2)");
        assert_eq!(derived_subgroup(&s3).order(), 3);
        assert_eq!(brute_force_derived(&s3), 3);
    }

    #[test]
    fn a5_is_perfect() {
        let a5 = group("(0 1 2), (0 1 2 3 4)");
        assert_eq!(a5.order(), 60);
        assert_eq!(derived_subgroup(&a5).order(), 60);
        assert_eq!(doa_finite(&a5), (0, Terminal::Perfect));
    }

    #[test]
    fn cyclic_derived_is_trivial() {
        let c6 = group("(0 1 2 3 4 5)");
        assert!(derived_subgroup(&c6).is_trivial());
        assert_eq!(doa_finite(&c6), (1, Terminal::Trivial));
    }

    #[test]
    fn s5_and_s4_series() {
        assert_eq!(
            doa_finite(&group("(0 1), (0 1 2 3 4)")),
            (1, Terminal::Perfect)
        );
        let s4 = group("(0 1), (0 1 2 3)");
        let orders: Vec<usize> = derived_series(&s4).iter().map(FiniteGroup::order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert_eq!(doa_finite(&s4), (3, Terminal::Trivial));
    }

    #[test]
    fn predicates() {
        let a5 = group("(0 1 2), (0 1 2 3 4)");
        assert!(is_perfect(&a5) && !is_solvable(&a5) && is_simple(&a5).unwrap());
        let s3 = group("(0 1), (0 1 2)");
        assert!(!is_perfect(&s3) && is_solvable(&s3) && !is_simple(&s3).unwrap());
        let one = group("()");
        assert!(is_perfect(&one) && is_solvable(&one) && !is_simple(&one).unwrap());
        let c5 = group("(0 1 2 3 4)");
        assert!(is_simple(&c5).unwrap());
    }

    #[test]
    fn simplicity_budget() {
        let s8 = group("(0 1), (0 1 2 3 4 5 6 7)");
        assert!(matches!(
            is_simple(&s8),
            Err(FiniteError::SimplicityBudget { order: 40320, .. })
        ));
    }

    #[test]
    fn normal_closure_matches_brute_force_on_small_groups() {
        for text in [
            "(0 1), (0 1 2 3)",
            "(0 1 2), (1 2 3)",
            "(0 1 2 3), (0 2)",
            "(0 1 2 3 4 5), (0 5)(1 4)(2 3)",
        ] {
            let g = group(text);
            assert_eq!(
                derived_subgroup(&g).order(),
                brute_force_derived(&g),
                "{text}"
            );
        }
    }
}
