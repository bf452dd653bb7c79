use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentPoly;
use crate::fpcore::Word;

/// Fox derivative `∂w/∂x_gen` pushed through the map sending every generator to `t`.
pub fn fox_derivative_abelianized(w: &Word, gen: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut e = 0i64;
    for (g, s) in w.letters() {
        if s > 0 {
            if g == gen {
                out.add_term(e, BigInt::one());
            }
            e += 1;
        } else {
            e -= 1;
            if g == gen {
                out.add_term(e, -BigInt::one());
            }
        }
    }
    out
}

/// Determinant over `Z[t, t^-1]` by fraction-free elimination.
pub(crate) fn determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
