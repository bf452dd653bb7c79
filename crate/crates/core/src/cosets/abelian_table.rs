use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::table::{column, CosetTable, SubgroupTag};
use super::{CosetError, DEFAULT_MAX_COSETS};
use crate::fpcore::Presentation;
use crate::intlin::AbelianizationMap;

/// Coset table of the commutator subgroup, read off the finite
/// abelianization: cosets are the elements of `G/G'` in Smith coordinates
/// (mixed radix, coset 0 = identity) and generator `j` adds its image.
pub fn coset_table_from_abelianization(p: &Presentation) -> Result<CosetTable, CosetError> {
    coset_table_from_abelianization_with_budget(p, DEFAULT_MAX_COSETS)
}

pub fn coset_table_from_abelianization_with_budget(
    p: &Presentation,
    max_cosets: usize,
) -> Result<CosetTable, CosetError> {
    let map = AbelianizationMap::from_relation_matrix(&p.relation_matrix());
    if map.group.rank > 0 {
        return Err(CosetError::InfiniteAbelianization {
            rank: map.group.rank,
        });
    }
    let order = map.group.order().expect("finite");
    if order > BigInt::from(max_cosets) {
        return Err(CosetError::BudgetExhausted { limit: max_cosets });
    }
    let moduli: Vec<usize> = map
        .moduli
        .iter()
        .map(|d| d.to_usize().expect("bounded by budget"))
        .collect();
    let images: Vec<Vec<usize>> = map
        .images
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| x.to_usize().expect("reduced residue"))
                .collect()
        })
        .collect();
    let n = order.to_usize().expect("bounded by budget");

    let decode = |mut idx: usize| -> Vec<usize> {
        moduli
            .iter()
            .map(|&d| {
                let (q, r) = idx.div_rem(&d);
                idx = q;
                r
            })
            .collect()
    };
    let encode = |coords: &[usize]| -> usize {
        coords
            .iter()
            .zip(&moduli)
            .rev()
            .fold(0, |acc, (&c, &d)| acc * d + c)
    };

    let mut action = vec![vec![0usize; 2 * p.ngens()]; n];
    for (c, row) in action.iter_mut().enumerate() {
        let coords = decode(c);
        for (g, img) in images.iter().enumerate() {
            let plus: Vec<usize> = coords
                .iter()
                .zip(img)
                .zip(&moduli)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect();
            let minus: Vec<usize> = coords
                .iter()
                .zip(img)
                .zip(&moduli)
                .map(|((&x, &y), &d)| (x + d - y) % d)
                .collect();
            row[column(g, 1)] = encode(&plus);
            row[column(g, -1)] = encode(&minus);
        }
    }
    CosetTable::new(p.ngens(), action, SubgroupTag::Commutator)
}
