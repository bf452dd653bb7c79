use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::perm::Permutation;
use super::FiniteError;
use crate::intlin::IntMatrix;

/// An invertible `n × n` matrix over `Z/m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    n: usize,
    modulus: u32,
    entries: Vec<u32>,
}

impl ModMatrix {
    pub fn new(modulus: u32, rows: &[Vec<i64>]) -> Result<Self, FiniteError> {
        if modulus < 2 {
            return Err(FiniteError::Parse(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(FiniteError::Parse(
                "matrix must be square and nonempty".into(),
            ));
        }
        let m = modulus as i64;
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(m) as u32)
            .collect();
        let mat = ModMatrix {
            n,
            modulus,
            entries,
        };
        let det = BigInt::from(mat.determinant_mod());
        if det.gcd(&BigInt::from(modulus)) != BigInt::from(1) {
            return Err(FiniteError::SingularMatrix);
        }
        Ok(mat)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn determinant_mod(&self) -> u32 {
        let rows: Vec<Vec<i64>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as i64).collect())
            .collect();
        let d = IntMatrix::from_i64_rows(self.n, self.n, &rows).determinant();
        let d = d.mod_floor(&BigInt::from(self.modulus));
        u32::try_from(&d).expect("residue fits")
    }

    /// Number of row vectors in `(Z/m)^n`, the degree of the action.
    pub fn action_degree(n: usize, modulus: u32) -> usize {
        (modulus as usize).pow(n as u32)
    }

    /// The faithful right action `v ↦ v·A` on row vectors, indexed
    /// `Σ v_k m^k`. It is a homomorphism for left-to-right permutation products.
    pub fn to_permutation(&self) -> Permutation {
        let m = self.modulus as usize;
        let deg = Self::action_degree(self.n, self.modulus);
        let mut images = Vec::with_capacity(deg);
        let mut v = vec![0usize; self.n];
        for idx in 0..deg {
            let mut rest = idx;
            for x in v.iter_mut() {
                *x = rest % m;
                rest /= m;
            }
            let mut image = 0usize;
            for j in (0..self.n).rev() {
                let s: usize = (0..self.n)
                    .map(|k| v[k] * self.get(k, j) as usize)
                    .sum::<usize>()
                    % m;
                image = image * m + s;
            }
            images.push(image as u32);
        }
        Permutation::from_images(images).expect("invertible matrix acts bijectively")
    }

    /// Inverse of [`ModMatrix::to_permutation`]: rows are the images of basis vectors.
    pub fn from_permutation(p: &Permutation, n: usize, modulus: u32) -> ModMatrix {
        let m = modulus as usize;
        let mut entries = vec![0u32; n * n];
        for k in 0..n {
            let mut idx = p.apply(m.pow(k as u32));
            for j in 0..n {
                entries[k * n + j] = (idx % m) as u32;
                idx /= m;
            }
        }
        ModMatrix {
            n,
            modulus,
            entries,
        }
    }
}

impl fmt::Display for ModMatrix {
    /// `mod 5: [[1,1],[0,1]]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod {}: [", self.modulus)?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(",")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        f.write_str("]")
    }
}

/// Parses `mod m: [[a,b],[c,d]]`.
pub fn parse_mod_matrix(text: &str) -> Result<ModMatrix, FiniteError> {
    let t = text.trim();
    let rest = t.strip_prefix("mod").ok_or_else(|| {
        FiniteError::Parse(format!("matrix literal must start with 'mod': {t:?}"))
    })?;
    let (m, body) = rest
        .split_once(':')
        .ok_or_else(|| FiniteError::Parse("expected ':' after modulus".into()))?;
    let modulus: u32 = m
        .trim()
        .parse()
        .map_err(|_| FiniteError::Parse(format!("invalid modulus {:?}", m.trim())))?;
    let rows: Vec<Vec<i64>> = serde_json::from_str(body.trim())
        .map_err(|e| FiniteError::Parse(format!("invalid matrix entries: {e}")))?;
    ModMatrix::new(modulus, &rows)
}
