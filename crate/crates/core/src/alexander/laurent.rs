use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::intlin::bigint_json;

/// Integer Laurent polynomial in one variable `t`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// `c·t^e`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(1, BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == LaurentPoly::one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Span `max − min` of the exponents; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Representative of the class up to units `±t^k`: minimum exponent 0 and
    /// positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return LaurentPoly::zero();
        };
        let p = self.shift(-lo);
        if p.leading_coeff().is_some_and(Signed::is_negative) {
            -p
        } else {
            p
        }
    }

    /// `t^deg · p(1/t)`.
    pub fn reciprocal(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at an integer; `None` if `x` is not a unit and a negative power occurs.
    pub fn eval(&self, x: i64) -> Option<BigInt> {
        let x = BigInt::from(x);
        let mut sum = BigInt::zero();
        for (&e, c) in &self.coeffs {
            let term = if e >= 0 {
                c * x.pow(e as u32)
            } else if x.abs().is_one() {
                c * x.pow(e.unsigned_abs() as u32)
            } else {
                return None;
            };
            sum += term;
        }
        Some(sum)
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (d.min_exp()?, d.max_exp()?);
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let dlead = d.coeffs[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let floor = self.min_exp().expect("nonzero") - dlo;
        while let Some(hi) = rem.max_exp() {
            let k = hi - dhi;
            if k < floor {
                return None;
            }
            let (q, r) = rem.coeffs[&hi].div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            rem = rem - d.shift(k) * &q;
            quot.add_term(k, q);
        }
        Some(quot)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: BTreeMap<String, Value> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), bigint_json(c)))
            .collect();
        json!({ "coeffs": coeffs })
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul<&BigInt> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, c * k)).collect(),
        }
    }
}

fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    let c = p.content();
    if c.is_zero() {
        return LaurentPoly::zero();
    }
    LaurentPoly {
        coeffs: p.coeffs.iter().map(|(e, x)| (*e, x / &c)).collect(),
    }
}

/// `lc(b)^(deg a − deg b + 1) · a mod b`, both with minimum exponent 0.
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let bdeg = b.max_exp().expect("nonzero divisor");
    let blead = b.coeffs[&bdeg].clone();
    let mut r = a.clone();
    while let Some(rdeg) = r.max_exp() {
        if rdeg < bdeg {
            break;
        }
        let rlead = r.coeffs[&rdeg].clone();
        r = r * &blead - b.shift(rdeg - bdeg) * &rlead;
    }
    r
}

/// Greatest common divisor up to units `±t^k`, returned normalized.
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let content = a.content().gcd(&b.content());
    let (mut x, mut y) = (
        primitive_part(&a.normalized()),
        primitive_part(&b.normalized()),
    );
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_remainder(&x, &y);
        x = y;
        y = primitive_part(&r.normalized());
    }
    (primitive_part(&x) * &content).normalized()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(2, 1), (1, -1), (0, 1)]).to_string(), "t^2 - t + 1");
        assert_eq!(lp(&[(2, 1), (1, -3), (0, 1)]).to_string(), "t^2 - 3t + 1");
        assert_eq!(lp(&[(-1, -1)]).to_string(), "-t^-1");
        assert_eq!(lp(&[(0, 2)]).to_string(), "2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let v = lp(&[(2, 1), (1, -1), (0, 1)]).to_json();
        assert_eq!(v, json!({"coeffs": {"0": 1, "1": -1, "2": 1}}));
    }

    #[test]
    fn normalization() {
        let p = lp(&[(-3, -1), (-2, 1), (-1, -1)]);
        assert_eq!(p.normalized(), lp(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(p.degree(), 2);
        assert!(LaurentPoly::monomial(-4, BigInt::from(-1))
            .normalized()
            .is_one());
    }

    #[test]
    fn arithmetic_and_division() {
        let a = lp(&[(2, 1), (1, -1), (0, 1)]);
        let b = lp(&[(1, 1), (0, 1)]);
        let prod = &a * &b;
        assert_eq!(prod, lp(&[(3, 1), (0, 1)]));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.shift(-5).div_exact(&a), Some(b.shift(-5)));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(a.eval(-1), Some(BigInt::from(3)));
        assert_eq!(lp(&[(-1, 1)]).eval(2), None);
    }

    #[test]
    fn gcds() {
        let a = lp(&[(2, 1), (1, -1), (0, 1)]);
        let b = lp(&[(1, 1), (0, -2)]);
        let c = lp(&[(1, 3), (0, 1)]);
        assert_eq!(poly_gcd(&(&a * &b), &(&a * &c)), a);
        let minus_ac = (&a * &c).shift(-2) * LaurentPoly::from_terms([(0, -1)]);
        assert_eq!(poly_gcd(&(&a * &b).shift(7), &minus_ac), a);
        assert!(poly_gcd(&b, &c).is_one());
        assert_eq!(
            poly_gcd(&lp(&[(1, 6), (0, 4)]), &lp(&[(0, 4)])),
            lp(&[(0, 2)])
        );
        assert_eq!(poly_gcd(&LaurentPoly::zero(), &b.shift(3)), b);
        assert!(poly_gcd(&LaurentPoly::zero(), &LaurentPoly::zero()).is_zero());
    }
}
