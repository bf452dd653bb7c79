use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `U·M·V = diag(d_1, …, d_k, 0, …)` with `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Positive invariants `d_1 | d_2 | … | d_k`.
    pub diag: Vec<BigInt>,
    /// Unimodular row transform, `rows × rows`.
    pub left: IntMatrix,
    /// Unimodular column transform, `cols × cols`.
    pub right: IntMatrix,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    /// The diagonal matrix `U·M·V` should equal.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, x) in self.diag.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }

    /// Recomputes `U·M·V` and checks it against the claimed diagonal, the
    /// divisibility chain and the unimodularity of both transforms.
    pub fn certifies(&self, m: &IntMatrix) -> bool {
        if m.rows() != self.rows || m.cols() != self.cols {
            return false;
        }
        let chain_ok = self.diag.iter().all(Signed::is_positive)
            && self.diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        let unit = |x: BigInt| x.abs().is_one();
        chain_ok
            && self.left.mul(m).mul(&self.right) == self.diagonal_matrix()
            && unit(self.left.determinant())
            && unit(self.right.determinant())
    }
}

pub(crate) struct Reduction {
    pub diag: Vec<BigInt>,
    pub left: Option<Vec<Vec<BigInt>>>,
    pub right: Option<Vec<Vec<BigInt>>>,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// row[dst] -= q * row[src]
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// col[dst] -= q * col[src]
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let t = q * &row[src];
            row[dst] -= t;
        }
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// Core elimination. Pivots on the smallest nonzero absolute value in the
/// remaining block; transforms are tracked only when requested.
pub(crate) fn reduce(m: &IntMatrix, track_left: bool, track_right: bool) -> Reduction {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut u = track_left.then(|| identity_rows(r));
    let mut v = track_right.then(|| identity_rows(c));
    let mut diag = Vec::new();

    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = smallest_in_block(&a, t, t) else {
            break;
        };
        place_pivot(&mut a, &mut u, &mut v, t, pi, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_axpy(&mut a, i, t, &q);
                    if let Some(u) = u.as_mut() {
                        row_axpy(u, i, t, &q);
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..c {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_axpy(&mut a, j, t, &q);
                    if let Some(v) = v.as_mut() {
                        col_axpy(v, j, t, &q);
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot survives in row or column t
                let (pi, pj) = smallest_in_cross(&a, t);
                place_pivot(&mut a, &mut u, &mut v, t, pi, pj);
                continue;
            }
            let offender =
                (t + 1..r).find(|&i| (t + 1..c).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    // row t += row i, exposing a non-multiple in row t
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    if let Some(u) = u.as_mut() {
                        row_axpy(u, t, i, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -std::mem::take(x);
            }
            if let Some(u) = u.as_mut() {
                for x in u[t].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    Reduction {
        diag,
        left: u,
        right: v,
    }
}

fn smallest_in_block(a: &[Vec<BigInt>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, x) in row.iter().enumerate().skip(c0) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let x = &a[i][j];
        if !x.is_zero() && (a[best.0][best.1].is_zero() || x.abs() < a[best.0][best.1].abs()) {
            *best = (i, j);
        }
    };
    for i in t..a.len() {
        consider(i, t, &mut best);
    }
    for j in t..a[t].len() {
        consider(t, j, &mut best);
    }
    best
}

fn place_pivot(
    a: &mut [Vec<BigInt>],
    u: &mut Option<Vec<Vec<BigInt>>>,
    v: &mut Option<Vec<Vec<BigInt>>>,
    t: usize,
    pi: usize,
    pj: usize,
) {
    if pi != t {
        a.swap(t, pi);
        if let Some(u) = u.as_mut() {
            u.swap(t, pi);
        }
    }
    if pj != t {
        swap_cols(a, t, pj);
        if let Some(v) = v.as_mut() {
            swap_cols(v, t, pj);
        }
    }
}

/// Smith normal form with both transformation matrices.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let red = reduce(m, true, true);
    let to_matrix = |rows: Vec<Vec<BigInt>>, n: usize| {
        IntMatrix::from_rows(rows, n).expect("transform is square")
    };
    SmithForm {
        diag: red.diag,
        left: to_matrix(red.left.expect("tracked"), m.rows()),
        right: to_matrix(red.right.expect("tracked"), m.cols()),
        rows: m.rows(),
        cols: m.cols(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let c = rows.first().map_or(0, Vec::len);
        let m = IntMatrix::from_i64_rows(rows.len(), c, rows);
        let s = smith_normal_form(&m);
        assert!(s.certifies(&m));
        s.diag.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn two_by_two() {
        assert_eq!(diag_of(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn identity_is_fixed() {
        assert_eq!(
            diag_of(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn empty_relation_matrix() {
        let m = IntMatrix::zeros(0, 2);
        let s = smith_normal_form(&m);
        assert!(s.diag.is_empty());
        assert_eq!(s.right, IntMatrix::identity(2));
        assert!(s.certifies(&m));
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is not in Smith form; the invariants are 1, 6
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn rank_deficient() {
        assert_eq!(diag_of(&[vec![2, 4, 6], vec![1, 2, 3]]), vec![1]);
        assert_eq!(diag_of(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
    }
}
