use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::matrix::{bigint_json, IntMatrix};
use super::snf::reduce;
use super::IntLinError;

/// A finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with
/// `2 ≤ t_1 | t_2 | … | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupData {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupData {
    /// Normalizes arbitrary invariant factors (entries `0` count toward the
    /// rank, entries `±1` are dropped). The input must already form a
    /// divisibility chain once units and zeros are removed.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self, IntLinError> {
        let torsion: Vec<BigInt> = torsion.into_iter().filter(|t| !t.is_one()).collect();
        for t in &torsion {
            if *t < BigInt::from(2) {
                return Err(IntLinError::InvalidInvariant(t.to_string()));
            }
        }
        if torsion.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err(IntLinError::NotDivisibilityChain);
        }
        Ok(AbelianGroupData { rank, torsion })
    }

    pub fn trivial() -> Self {
        AbelianGroupData {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupData {
            rank,
            torsion: Vec::new(),
        }
    }

    /// From the elementary divisors of a possibly non-canonical decomposition
    /// `⊕ Z/n_i` (e.g. `[2, 3]`), producing invariant factors (`[6]`).
    pub fn from_cyclic_orders(rank: usize, orders: &[BigInt]) -> Self {
        let mut factors: Vec<BigInt> = Vec::new();
        for n in orders {
            if n.is_one() || n.is_zero() {
                continue;
            }
            factors.push(n.clone());
        }
        // repeatedly fold via gcd/lcm until a chain emerges
        let k = factors.len();
        for i in 0..k {
            for j in i + 1..k {
                let g = factors[i].gcd(&factors[j]);
                let l = factors[i].lcm(&factors[j]);
                factors[i] = g;
                factors[j] = l;
            }
        }
        let torsion = factors.into_iter().filter(|t| !t.is_one()).collect();
        AbelianGroupData { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn order(&self) -> Result<BigInt, IntLinError> {
        if !self.is_finite() {
            return Err(IntLinError::InfiniteOrder { rank: self.rank });
        }
        Ok(self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroupData {
    /// `Z^2 + Z/2 + Z/4`; the trivial group prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for AbelianGroupData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AbelianGroupData", 4)?;
        st.serialize_field("rank", &self.rank)?;
        let torsion: Vec<_> = self.torsion.iter().map(bigint_json).collect();
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("order", &self.order().ok().as_ref().map(bigint_json))?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

/// Abelian group presented by the relation matrix `m` (rows are relators,
/// columns are generators).
pub fn abelian_invariants(m: &IntMatrix) -> AbelianGroupData {
    let red = reduce(m, false, false);
    let nonzero = red.diag.len();
    let torsion = red.diag.into_iter().filter(|d| !d.is_one()).collect();
    AbelianGroupData {
        rank: m.cols() - nonzero,
        torsion,
    }
}

/// Rank of `H_2(A; Z)`, which for a finitely generated abelian group of
/// free rank `r` is `r choose 2`.
pub fn h2_rank_abelian(a: &AbelianGroupData) -> u64 {
    let r = a.rank as u64;
    r * r.saturating_sub(1) / 2
}

pub fn is_finite(a: &AbelianGroupData) -> bool {
    a.is_finite()
}

pub fn order(a: &AbelianGroupData) -> Result<BigInt, IntLinError> {
    a.order()
}

/// Coordinates of the abelianization map in Smith coordinates: generator
/// `j` maps to `images[j]`, a vector whose component `i` lives in
/// `Z/moduli[i]` (a modulus of `0` marks a free coordinate).
#[derive(Clone, Debug)]
pub struct AbelianizationMap {
    pub group: AbelianGroupData,
    pub moduli: Vec<BigInt>,
    pub images: Vec<Vec<BigInt>>,
}

impl AbelianizationMap {
    pub fn from_relation_matrix(m: &IntMatrix) -> Self {
        let red = reduce(m, false, true);
        let v = red.right.expect("right transform tracked");
        let cols = m.cols();
        // Column i of V carries Smith coordinate i; unit invariants are dropped.
        let mut keep = Vec::new();
        let mut moduli = Vec::new();
        for i in 0..cols {
            let d = red.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_one() {
                continue;
            }
            keep.push(i);
            moduli.push(d);
        }
        // free coordinates last, torsion first (already ordered by Smith form)
        let images = (0..cols)
            .map(|j| {
                keep.iter()
                    .zip(&moduli)
                    .map(|(&i, d)| {
                        if d.is_zero() {
                            v[j][i].clone()
                        } else {
                            v[j][i].mod_floor(d)
                        }
                    })
                    .collect()
            })
            .collect();
        let rank = moduli.iter().filter(|d| d.is_zero()).count();
        let torsion = moduli.iter().filter(|d| !d.is_zero()).cloned().collect();
        AbelianizationMap {
            group: AbelianGroupData { rank, torsion },
            moduli,
            images,
        }
    }
}
