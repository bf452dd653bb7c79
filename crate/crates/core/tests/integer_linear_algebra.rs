use adorn::intlin::{
    abelian_invariants, h2_rank_abelian, smith_normal_form, AbelianGroupData, IntMatrix,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
}

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows.len(), rows[0].len(), rows)
}

/// gcd of all `k × k` minors, computed by brute force.
fn determinantal_divisor(m: &IntMatrix, k: usize) -> BigInt {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let mut g = BigInt::zero();
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let sub: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                .collect();
            let d = IntMatrix::from_rows(sub, k).unwrap().determinant();
            g = num_integer::Integer::gcd(&g, &d);
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_certifies(rows in matrix_strategy()) {
        let m = to_matrix(&rows);
        let s = smith_normal_form(&m);
        prop_assert!(s.certifies(&m));
        prop_assert_eq!(s.left.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(s.right.determinant().abs(), BigInt::from(1));
    }

    #[test]
    fn diagonal_matches_determinantal_divisors(rows in (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)))
    {
        // d_1 ⋯ d_k = gcd of k × k minors
        let m = to_matrix(&rows);
        let s = smith_normal_form(&m);
        let mut prod = BigInt::from(1);
        for k in 1..=m.rows().min(m.cols()) {
            let dk = determinantal_divisor(&m, k);
            if k <= s.diag.len() {
                prod *= &s.diag[k - 1];
                prop_assert_eq!(dk, prod.clone());
            } else {
                prop_assert!(dk.is_zero());
            }
        }
    }

    #[test]
    fn invariants_survive_unimodular_moves(rows in matrix_strategy(), i in 0usize..6, j in 0usize..6, k in -5i64..=5) {
        let m = to_matrix(&rows);
        let (i, j) = (i % m.rows(), j % m.rows());
        let mut moved = rows.clone();
        if i != j {
            for c in 0..moved[0].len() {
                moved[i][c] += k * rows[j][c];
            }
        }
        moved.swap(0, j);
        prop_assert_eq!(abelian_invariants(&to_matrix(&moved)), abelian_invariants(&m));
        prop_assert_eq!(abelian_invariants(&m.transpose()).torsion, abelian_invariants(&m).torsion);
    }

    #[test]
    fn order_is_absolute_determinant(rows in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-20i64..=20, n), n))) {
        let m = to_matrix(&rows);
        let a = abelian_invariants(&m);
        let det = m.determinant();
        if det.is_zero() {
            prop_assert!(a.rank > 0);
        } else {
            prop_assert_eq!(a.order().unwrap(), det.abs());
        }
    }
}

#[test]
fn h2_rank_values() {
    assert_eq!(h2_rank_abelian(&AbelianGroupData::free(3)), 3);
    assert_eq!(h2_rank_abelian(&AbelianGroupData::free(5)), 10);
    assert_eq!(h2_rank_abelian(&AbelianGroupData::free(0)), 0);
    let mixed = AbelianGroupData::from_cyclic_orders(4, &[BigInt::from(6)]);
    assert_eq!(h2_rank_abelian(&mixed), 6);
}

#[test]
fn snf_example() {
    let m = IntMatrix::from_json("[[2,4],[6,8]]").unwrap();
    assert_eq!(
        smith_normal_form(&m).diag,
        [BigInt::from(2), BigInt::from(4)]
    );
}
