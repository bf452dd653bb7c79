use std::collections::VecDeque;

use adorn::catalog;
use adorn::cosets::{
    coset_table_from_abelianization, reidemeister_schreier, reidemeister_schreier_unsimplified,
    rewrite_subgroup_word, todd_coxeter, DEFAULT_MAX_COSETS,
};
use adorn::finite::{
    abelianization_finite, derived_subgroup, ElementKind, FiniteGroup, Permutation,
};
use adorn::fpcore::{Presentation, Word};
use adorn::intlin::abelian_invariants;
use proptest::prelude::*;

/// Catalog entries carrying both a presentation and a model of order ≤ 200.
fn oracle_pairs() -> Vec<(String, Presentation, FiniteGroup)> {
    catalog::list()
        .into_iter()
        .filter_map(|name| {
            let e = catalog::get(&name).ok()?;
            let (p, g) = (e.presentation?, e.model?);
            (g.order() <= 200).then_some((name, p, g))
        })
        .collect()
}

/// Schreier generators `u_c g u_{cg}^{-1}` of the stabilizer of point 0,
/// built from a breadth-first tree of the action.
fn stabilizer_generators(perms: &[Vec<usize>]) -> Option<Vec<Word>> {
    let k = perms[0].len();
    let mut rep: Vec<Option<Word>> = vec![None; k];
    rep[0] = Some(Word::empty());
    let mut tree = vec![vec![false; perms.len()]; k];
    let mut queue = VecDeque::from([0]);
    while let Some(c) = queue.pop_front() {
        for (g, p) in perms.iter().enumerate() {
            let d = p[c];
            if rep[d].is_none() {
                rep[d] = Some(rep[c].as_ref().unwrap().concat(&Word::generator(g)));
                tree[c][g] = true;
                queue.push_back(d);
            }
        }
    }
    let rep: Vec<Word> = rep.into_iter().collect::<Option<_>>()?;
    let mut gens = Vec::new();
    for c in 0..k {
        for (g, p) in perms.iter().enumerate() {
            if !tree[c][g] {
                gens.push(
                    rep[c]
                        .concat(&Word::generator(g))
                        .concat(&rep[p[c]].inverse()),
                );
            }
        }
    }
    Some(gens)
}

fn permutation_strategy(k: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..k).collect::<Vec<_>>()).prop_shuffle()
}

fn action_strategy() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..=3, 1usize..=8)
        .prop_flat_map(|(n, k)| (Just(k), prop::collection::vec(permutation_strategy(k), n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nielsen_schreier_rank((k, perms) in action_strategy()) {
        let gens = stabilizer_generators(&perms);
        prop_assume!(gens.is_some());
        let n = perms.len();
        let free = Presentation::with_numbered_generators("x", n, vec![]).unwrap();
        let t = todd_coxeter(&free, &gens.unwrap(), DEFAULT_MAX_COSETS).unwrap();
        prop_assert_eq!(t.index(), k);
        let sub = reidemeister_schreier(&free, &t).unwrap();
        prop_assert_eq!(sub.ngens(), k * (n - 1) + 1);
        prop_assert!(sub.relators().is_empty());
    }

    #[test]
    fn subgroup_words_rewrite_and_leave_others((_k, perms) in action_strategy(), w in prop::collection::vec((0usize..3, prop::bool::ANY), 0..12)) {
        let n = perms.len();
        let word = Word::from_letters(w.into_iter().map(|(g, b)| (g % n, if b { 1 } else { -1 })));
        let Some(gens) = stabilizer_generators(&perms) else { return Ok(()) };
        let free = Presentation::with_numbered_generators("x", n, vec![]).unwrap();
        let t = todd_coxeter(&free, &gens, DEFAULT_MAX_COSETS).unwrap();
        let in_subgroup = t.trace(0, &word) == 0;
        prop_assert_eq!(rewrite_subgroup_word(&t, &word).is_ok(), in_subgroup);
    }
}

#[test]
fn enumeration_matches_finite_orders() {
    let pairs = oracle_pairs();
    assert!(pairs.len() >= 10);
    for (name, p, g) in &pairs {
        let regular = todd_coxeter(p, &[], DEFAULT_MAX_COSETS).unwrap();
        regular.audit(p).unwrap();
        assert_eq!(regular.index(), g.order(), "{name}");

        // the regular action realizes the group; cyclic subgroups have index |G| / ord(x)
        let perms: Vec<Permutation> = (0..p.ngens())
            .map(|j| {
                Permutation::from_images(
                    (0..regular.index())
                        .map(|c| regular.act(c, j, 1) as u32)
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        let realized = FiniteGroup::from_permutations(
            ElementKind::Permutation,
            regular.index(),
            perms.clone(),
            10_000,
        )
        .unwrap();
        assert_eq!(realized.order(), g.order(), "{name}");
        for (j, x) in perms.iter().enumerate() {
            let cyclic = realized.subgroup(std::slice::from_ref(x)).unwrap();
            let t = todd_coxeter(p, &[Word::generator(j)], DEFAULT_MAX_COSETS).unwrap();
            assert_eq!(
                t.index() * cyclic.order(),
                g.order(),
                "{name} generator {j}"
            );
        }
    }
}

#[test]
fn commutator_tables_agree_with_models() {
    for (name, p, g) in oracle_pairs() {
        let t = coset_table_from_abelianization(&p).unwrap();
        t.audit(&p).unwrap();
        let ab = abelian_invariants(&p.relation_matrix());
        assert_eq!(ab, abelianization_finite(&g), "{name}");
        assert_eq!(
            num_bigint::BigInt::from(t.index()),
            ab.order().unwrap(),
            "{name}"
        );

        let d = derived_subgroup(&g);
        let sub = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(
            abelian_invariants(&sub.relation_matrix()),
            abelianization_finite(&d),
            "{name}"
        );
        let raw = reidemeister_schreier_unsimplified(&p, &t).unwrap();
        assert_eq!(
            abelian_invariants(&raw.relation_matrix()),
            abelianization_finite(&d),
            "{name}"
        );
        let regular = todd_coxeter(&sub, &[], DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(regular.index(), d.order(), "{name}");
    }
}
