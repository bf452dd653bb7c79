//! Rational dimension of the Alexander module, by diagonalizing its
//! presentation matrix over `Q[t, t^-1]` with the exponent span as Euclidean size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::LaurentPoly;

/// `lc(b)·a − lc(a)·t^s·b` with `s` aligning the top exponents; the span of
/// the result is smaller than that of `a` when `span(b) ≤ span(a)`.
fn cancel_top(a: &LaurentPoly, b: &LaurentPoly) -> (BigInt, LaurentPoly) {
    let s = a.max_exp().expect("nonzero") - b.max_exp().expect("nonzero");
    let mult = LaurentPoly::monomial(s, a.leading_coeff().expect("nonzero").clone());
    (b.leading_coeff().expect("nonzero").clone(), mult)
}

fn reduce_line(line: &mut [LaurentPoly]) {
    let g = line.iter().fold(BigInt::zero(), |g, x| g.gcd(&x.content()));
    if !g.is_zero() && !g.is_one() {
        for x in line.iter_mut() {
            *x = x
                .div_exact(&LaurentPoly::monomial(0, g.clone()))
                .expect("content divides");
        }
    }
}

/// `dim_Q` of the module presented by `m` (rows are relations, `cols`
/// generators), or `None` when it is infinite.
pub(crate) fn module_dimension(mut m: Vec<Vec<LaurentPoly>>, cols: usize) -> Option<usize> {
    let rows = m.len();
    let mut dim = 0;
    for k in 0..cols {
        loop {
            let pivot = (k..rows)
                .flat_map(|i| (k..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by_key(|&(i, j)| m[i][j].degree())?;
            m.swap(k, pivot.0);
            for row in m.iter_mut() {
                row.swap(k, pivot.1);
            }
            let mut clean = true;
            for i in k + 1..rows {
                while !m[i][k].is_zero() && m[i][k].degree() >= m[k][k].degree() {
                    let (c, mult) = cancel_top(&m[i][k], &m[k][k]);
                    let pivot_row = m[k].clone();
                    for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                        *x = x.clone() * &c - &mult * p;
                    }
                    reduce_line(&mut m[i]);
                }
                clean &= m[i][k].is_zero();
            }
            for j in k + 1..cols {
                while !m[k][j].is_zero() && m[k][j].degree() >= m[k][k].degree() {
                    let (c, mult) = cancel_top(&m[k][j], &m[k][k]);
                    for row in m.iter_mut() {
                        row[j] = row[j].clone() * &c - &mult * &row[k];
                    }
                }
                clean &= m[k][j].is_zero();
            }
            if clean {
                break;
            }
        }
        dim += m[k][k].degree();
    }
    Some(dim)
}
