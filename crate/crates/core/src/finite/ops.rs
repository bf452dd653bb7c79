use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;

use super::group::{ElementKind, FiniteGroup};
use super::series::derived_subgroup;
use super::FiniteError;
use crate::intlin::AbelianGroupData;

/// `G × H` acting on the disjoint union of the two domains.
pub fn direct_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    max_order: usize,
) -> Result<FiniteGroup, FiniteError> {
    if g.order().saturating_mul(h.order()) > max_order {
        return Err(FiniteError::BudgetExceeded { limit: max_order });
    }
    let degree = g.degree() + h.degree();
    let mut gens: Vec<_> = g.generators().iter().map(|x| x.embed(degree, 0)).collect();
    gens.extend(h.generators().iter().map(|x| x.embed(degree, g.degree())));
    FiniteGroup::from_permutations(ElementKind::Permutation, degree, gens, max_order)
}

/// `G / N` realized as the regular permutation action on the right cosets `N x`.
pub fn quotient(g: &FiniteGroup, n: &FiniteGroup) -> Result<FiniteGroup, FiniteError> {
    if !n.is_subgroup_of(g) {
        return Err(FiniteError::NotSubgroup("N is not contained in G".into()));
    }
    if !n.is_normal_in(g) {
        return Err(FiniteError::NotNormal);
    }
    let mut label = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for i in 0..g.order() {
        if label[i] != usize::MAX {
            continue;
        }
        let x = g.element(i);
        let c = reps.len();
        for y in n.elements() {
            let j = g.index_of(&y.mul(x)).expect("coset element lies in G");
            label[j] = c;
        }
        reps.push(x.clone());
    }
    let k = reps.len();
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let images = reps
                .iter()
                .map(|r| label[g.index_of(&r.mul(s)).expect("closed")] as u32)
                .collect();
            super::Permutation::from_images(images).expect("coset action is bijective")
        })
        .collect();
    FiniteGroup::from_permutations(ElementKind::Permutation, k, gens, k)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of an abelian finite group, recovered from the number
/// of elements whose order divides each prime power.
pub fn abelian_invariants_finite(g: &FiniteGroup) -> Result<AbelianGroupData, FiniteError> {
    if !g.is_abelian() {
        return Err(FiniteError::NotAbelian);
    }
    let orders: Vec<u64> = g.elements().map(|x| x.order()).collect();
    let mut primary: Vec<BigInt> = Vec::new();
    for p in prime_factors(g.order() as u64) {
        // count[k] = #{x : ord(x) | p^k}; count[k] / count[k-1] = p^(#factors ≥ p^k)
        let mut exps: BTreeMap<u32, usize> = BTreeMap::new();
        let mut k = 1u32;
        let mut prev = 1usize;
        loop {
            let pk = p.pow(k);
            let c = orders.iter().filter(|&&o| pk % o == 0).count();
            if c == prev {
                break;
            }
            let mut ratio = c / prev;
            let mut factors_at_least = 0usize;
            while ratio > 1 {
                ratio /= p as usize;
                factors_at_least += 1;
            }
            exps.insert(k, factors_at_least);
            prev = c;
            k += 1;
        }
        let levels: Vec<(u32, usize)> = exps.into_iter().collect();
        for (i, &(k, at_least)) in levels.iter().enumerate() {
            let next = levels.get(i + 1).map_or(0, |&(_, n)| n);
            for _ in 0..at_least - next {
                primary.push(BigInt::from(p.pow(k)));
            }
        }
    }
    Ok(AbelianGroupData::from_cyclic_orders(0, &primary))
}

/// Every normal subgroup of `g`, ordered by size: the joins of the normal
/// closures of single elements.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<FiniteGroup> {
    let key = |h: &FiniteGroup| -> Vec<usize> {
        let mut k: Vec<usize> = h
            .elements()
            .map(|x| g.index_of(x).expect("subgroup element"))
            .collect();
        k.sort_unstable();
        k
    };
    let mut seen = HashSet::new();
    let mut found = vec![g.trivial_like()];
    seen.insert(key(&found[0]));
    for x in g
        .conjugacy_class_representatives()
        .iter()
        .filter(|x| !x.is_identity())
    {
        let n = g
            .normal_closure(std::slice::from_ref(x))
            .expect("element of g");
        if seen.insert(key(&n)) {
            found.push(n);
        }
    }
    let mut i = 1;
    while i < found.len() {
        for j in 1..i {
            let gens: Vec<_> = found[i]
                .generators()
                .iter()
                .chain(found[j].generators())
                .cloned()
                .collect();
            let join = g.normal_closure(&gens).expect("elements of g");
            if seen.insert(key(&join)) {
                found.push(join);
            }
        }
        i += 1;
    }
    found.sort_by_key(FiniteGroup::order);
    found
}

/// `G / [G, G]` as abelian invariants.
pub fn abelianization_finite(g: &FiniteGroup) -> AbelianGroupData {
    let d = derived_subgroup(g);
    let q = quotient(g, &d).expect("derived subgroup is normal");
    abelian_invariants_finite(&q).expect("abelianization is abelian")
}
