use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use super::IntLinError;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if `rows` is ragged; use [`IntMatrix::from_json`] for untrusted input.
    pub fn from_i64_rows(rows: usize, cols: usize, entries: &[Vec<i64>]) -> Self {
        assert_eq!(entries.len(), rows, "row count mismatch");
        let mut data = Vec::with_capacity(rows * cols);
        for r in entries {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(entries: Vec<Vec<BigInt>>, cols: usize) -> Result<Self, IntLinError> {
        let rows = entries.len();
        let mut data = Vec::with_capacity(rows * cols);
        for (i, r) in entries.into_iter().enumerate() {
            if r.len() != cols {
                return Err(IntLinError::Ragged {
                    row: i,
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Reads a JSON array of arrays. Entries may be integers or decimal
    /// strings (for values beyond 64 bits). `[]` is the 0×0 matrix.
    pub fn from_json(text: &str) -> Result<Self, IntLinError> {
        let v: Value = serde_json::from_str(text).map_err(|e| IntLinError::Json(e.to_string()))?;
        let Value::Array(rows) = v else {
            return Err(IntLinError::Json("expected an array of rows".into()));
        };
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let Value::Array(cells) = row else {
                return Err(IntLinError::Json("each row must be an array".into()));
            };
            let mut out = Vec::with_capacity(cells.len());
            for c in cells {
                let x = match &c {
                    Value::Number(n) => n
                        .as_i64()
                        .map(BigInt::from)
                        .or_else(|| n.as_u64().map(BigInt::from))
                        .ok_or_else(|| IntLinError::Json(format!("not an integer: {n}")))?,
                    Value::String(s) => s
                        .trim()
                        .parse::<BigInt>()
                        .map_err(|_| IntLinError::Json(format!("not a decimal integer: {s:?}")))?,
                    other => return Err(IntLinError::Json(format!("not an integer: {other}"))),
                };
                out.push(x);
            }
            entries.push(out);
        }
        let cols = entries.first().map_or(0, Vec::len);
        IntMatrix::from_rows(entries, cols)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(bigint_json).collect()))
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Panics when an entry does not fit in `i64`; intended for tests.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| i64::try_from(x).expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free Bareiss elimination. Panics on non-square input.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
pub fn bigint_json(x: &BigInt) -> Value {
    if let Ok(v) = i64::try_from(x) {
        Value::from(v)
    } else {
        Value::String(x.to_string())
    }
}
