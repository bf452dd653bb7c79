use std::fmt;

use super::FiniteError;

/// A permutation of `{0, …, n-1}`. Products compose left to right:
/// `(p * q)(x) = q(p(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, FiniteError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(FiniteError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint or overlapping cycles,
    /// applied left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, FiniteError> {
        let mut p = Permutation::identity(n);
        for cyc in cycles {
            if cyc.iter().any(|&x| x >= n) {
                return Err(FiniteError::PointOutOfRange { degree: n });
            }
            let mut c = Permutation::identity(n);
            for (k, &x) in cyc.iter().enumerate() {
                let y = cyc[(k + 1) % cyc.len()];
                c.images[x] = y as u32;
            }
            Permutation::from_images(c.images.clone())?;
            p = p.mul(&c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().mul(self).mul(g)
    }

    /// `self * other * self^-1 * other^-1`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// Extends to a larger domain, fixing the new points; `offset` shifts
    /// the moved points.
    pub fn embed(&self, degree: usize, offset: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut l: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            l = num_integer::lcm(l, len);
        }
        l
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses one permutation written as a product of cycles, e.g. `(0 1 2)(3 4)`.
/// Points inside a cycle may be separated by spaces or commas. The degree
/// is the largest point plus one, or `min_degree` if larger.
pub fn parse_cycles(text: &str, min_degree: usize) -> Result<Permutation, FiniteError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(FiniteError::Parse(format!(
                "expected '(' in cycle notation near {rest:?}"
            )));
        };
        let close = body
            .find(')')
            .ok_or_else(|| FiniteError::Parse(format!("unclosed cycle in {text:?}")))?;
        let inner = &body[..close];
        let mut cyc = Vec::new();
        for tok in inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
        {
            let x = tok
                .parse::<usize>()
                .map_err(|_| FiniteError::Parse(format!("invalid point {tok:?}")))?;
            if cyc.contains(&x) {
                return Err(FiniteError::Parse(format!("point {x} repeated in a cycle")));
            }
            cyc.push(x);
        }
        if !cyc.is_empty() {
            cycles.push(cyc);
        }
        rest = body[close + 1..].trim_start();
    }
    let degree = cycles
        .iter()
        .flatten()
        .map(|&x| x + 1)
        .max()
        .unwrap_or(0)
        .max(min_degree);
    Permutation::from_cycles(degree, &cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let a = parse_cycles("(0 1)", 3).unwrap();
        let b = parse_cycles("(1 2)", 3).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&b).to_string(), "(0 2 1)");
    }

    #[test]
    fn parse_and_print() {
        let p = parse_cycles("(0 1 2)(3,4)", 0).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(parse_cycles("()", 4).unwrap(), Permutation::identity(4));
        assert!(parse_cycles("(0 1", 0).is_err());
        assert!(parse_cycles("(0 0)", 0).is_err());
        assert!(parse_cycles("0 1", 0).is_err());
    }

    #[test]
    fn inverse_and_commutator() {
        let p = parse_cycles("(0 1 2 3)", 0).unwrap();
        assert!(p.mul(&p.inverse()).is_identity());
        assert!(p.commutator(&p).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(matches!(
            Permutation::from_images(vec![0, 0]),
            Err(FiniteError::NotBijection)
        ));
    }
}
