//! Single-variable Fox calculus and Alexander polynomials of knot groups.

mod fox;
mod laurent;
mod module;

use serde_json::{json, Value};
use thiserror::Error;

use crate::engine::{Certificate, Evidence, NotAdorableReason, Verdict};
use crate::fpcore::Presentation;
use crate::intlin::AbelianizationMap;

pub use fox::fox_derivative_abelianized;
pub use laurent::{poly_gcd, LaurentPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("abelianization is {0}, not infinite cyclic")]
    NotInfiniteCyclic(String),
    #[error("generators do not all map to the same generator of the abelianization")]
    GeneratorImagesDiffer,
    #[error("column {column} out of range for {ngens} generators")]
    ColumnOutOfRange { column: usize, ngens: usize },
    #[error("Alexander polynomial is zero (fewer independent relators than generators minus one)")]
    Degenerate,
}

/// Abelianized Fox matrix and the Alexander polynomial read off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderData {
    /// `matrix[r][g] = ∂(relator r)/∂(generator g)` at `g ↦ t`.
    pub matrix: Vec<Vec<LaurentPoly>>,
    pub deleted_column: usize,
    /// Normalized gcd of the maximal minors; zero when degenerate.
    pub polynomial: LaurentPoly,
    pub degree: usize,
}

impl AlexanderData {
    pub fn is_degenerate(&self) -> bool {
        self.polynomial.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matrix": self.matrix.iter().map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "deleted_column": self.deleted_column,
            "polynomial": self.polynomial.to_string(),
            "coeffs": self.polynomial.to_json()["coeffs"],
            "degree": self.degree,
            "degenerate": self.is_degenerate(),
        })
    }
}

/// Checks that `H_1` is infinite cyclic with every generator mapping to the same generator.
pub fn check_knot_like(p: &Presentation) -> Result<(), AlexanderError> {
    let map = AbelianizationMap::from_relation_matrix(&p.relation_matrix());
    if map.group.rank != 1 || !map.group.torsion.is_empty() {
        return Err(AlexanderError::NotInfiniteCyclic(map.group.to_string()));
    }
    let first = &map.images[0];
    if map.images.iter().any(|img| img != first) {
        return Err(AlexanderError::GeneratorImagesDiffer);
    }
    Ok(())
}

/// Matrix of abelianized Fox derivatives, one row per relator.
pub fn alexander_matrix(p: &Presentation) -> Result<Vec<Vec<LaurentPoly>>, AlexanderError> {
    check_knot_like(p)?;
    Ok(p.relators()
        .iter()
        .map(|r| {
            (0..p.ngens())
                .map(|g| fox_derivative_abelianized(r, g))
                .collect()
        })
        .collect())
}

pub fn alexander_polynomial(p: &Presentation) -> Result<AlexanderData, AlexanderError> {
    alexander_polynomial_deleting(p, 0)
}

/// gcd of the maximal minors of the Fox matrix with column `column` removed.
pub fn alexander_polynomial_deleting(
    p: &Presentation,
    column: usize,
) -> Result<AlexanderData, AlexanderError> {
    if column >= p.ngens() {
        return Err(AlexanderError::ColumnOutOfRange {
            column,
            ngens: p.ngens(),
        });
    }
    let matrix = alexander_matrix(p)?;
    let reduced: Vec<Vec<LaurentPoly>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != column)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect();
    let k = p.ngens() - 1;
    let mut g = LaurentPoly::zero();
    if reduced.len() >= k {
        for rows in combinations(reduced.len(), k) {
            let minor: Vec<Vec<LaurentPoly>> = rows.iter().map(|&r| reduced[r].clone()).collect();
            g = poly_gcd(&g, &fox::determinant(&minor));
            if g.is_one() {
                break;
            }
        }
    }
    let polynomial = g.normalized();
    let degree = polynomial.degree();
    Ok(AlexanderData {
        matrix,
        deleted_column: column,
        polynomial,
        degree,
    })
}

/// Rank of `G'/G''` (its dimension after tensoring with `Q`), computed by
/// diagonalizing the Alexander module rather than from the polynomial.
pub fn h1prime_rank(p: &Presentation) -> Result<usize, AlexanderError> {
    let matrix = alexander_matrix(p)?;
    let reduced: Vec<Vec<LaurentPoly>> = matrix
        .into_iter()
        .map(|row| row.into_iter().skip(1).collect())
        .collect();
    module::module_dimension(reduced, p.ngens() - 1).ok_or(AlexanderError::Degenerate)
}

/// A knot group is adorable exactly when its Alexander polynomial is 1, and
/// then its commutator subgroup is perfect.
pub fn knot_adorability_verdict(p: &Presentation) -> Result<Verdict, AlexanderError> {
    let data = alexander_polynomial(p)?;
    if data.is_degenerate() {
        return Err(AlexanderError::Degenerate);
    }
    if data.polynomial.is_one() {
        return Ok(Verdict::Adorable {
            doa: 1,
            certificate: Certificate::TrivialAlexanderPolynomial,
        });
    }
    Ok(Verdict::NotAdorable {
        reason: NotAdorableReason::NontrivialAlexanderPolynomial,
        evidence: Evidence::AlexanderPolynomial {
            polynomial: data.polynomial.to_string(),
            degree: data.degree,
        },
    })
}

/// Index sets `{i_1 < … < i_k} ⊆ {0, …, n−1}` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpcore::parse_presentation;
    use crate::intlin::{abelian_invariants, IntMatrix};
    use num_bigint::BigInt;

    fn pres(s: &str) -> Presentation {
        parse_presentation(s).unwrap()
    }

    const TREFOIL: &str = "< x,y | x*y*x*y^-1*x^-1*y^-1 >";
    const FIGURE_EIGHT: &str = "< x,y | x^-1*y*x*y^-1*x*y*x^-1*y^-1*x*y^-1 >";

    /// Order of the group presented by the integer matrix obtained at `t = -1`.
    fn order_at_minus_one(p: &Presentation) -> BigInt {
        let data = alexander_polynomial(p).unwrap();
        let rows: Vec<Vec<BigInt>> = data
            .matrix
            .iter()
            .map(|row| row.iter().skip(1).map(|x| x.eval(-1).unwrap()).collect())
            .collect();
        let m = IntMatrix::from_rows(rows, p.ngens() - 1).unwrap();
        abelian_invariants(&m).order().unwrap()
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(3, 2), [[0, 1], [0, 2], [1, 2]]);
        assert_eq!(combinations(2, 0), [Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }

    #[test]
    fn unknot() {
        let u = pres("< x | >");
        let d = alexander_polynomial(&u).unwrap();
        assert!(d.polynomial.is_one());
        assert_eq!(d.degree, 0);
        assert_eq!(h1prime_rank(&u).unwrap(), 0);
        assert!(matches!(
            knot_adorability_verdict(&u).unwrap(),
            Verdict::Adorable { doa: 1, .. }
        ));
    }

    #[test]
    fn trefoil() {
        let p = pres(TREFOIL);
        let d = alexander_polynomial(&p).unwrap();
        assert_eq!(d.polynomial.to_string(), "t^2 - t + 1");
        assert_eq!(h1prime_rank(&p).unwrap(), 2);
        assert_eq!(d.polynomial.eval(-1).unwrap(), BigInt::from(3));
        assert_eq!(order_at_minus_one(&p), BigInt::from(3));
        assert!(matches!(
            knot_adorability_verdict(&p).unwrap(),
            Verdict::NotAdorable {
                reason: NotAdorableReason::NontrivialAlexanderPolynomial,
                ..
            }
        ));
    }

    #[test]
    fn figure_eight() {
        let p = pres(FIGURE_EIGHT);
        let d = alexander_polynomial(&p).unwrap();
        assert_eq!(d.polynomial.to_string(), "t^2 - 3t + 1");
        assert_eq!(d.polynomial.eval(-1).unwrap(), BigInt::from(5));
        assert_eq!(order_at_minus_one(&p), BigInt::from(5));
    }

    #[test]
    fn connected_sum_and_column_choice() {
        let p = pres("< x,y,z | x*y*x = y*x*y, x*z*x = z*x*z >");
        let d = alexander_polynomial(&p).unwrap();
        assert_eq!(d.polynomial.to_string(), "t^4 - 2t^3 + 3t^2 - 2t + 1");
        assert_eq!(h1prime_rank(&p).unwrap(), 4);
        for c in 0..3 {
            assert_eq!(
                alexander_polynomial_deleting(&p, c).unwrap().polynomial,
                d.polynomial
            );
        }
        assert!(alexander_polynomial_deleting(&p, 3).is_err());
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            alexander_polynomial(&pres("< a,b | a^2, b^3 >")),
            Err(AlexanderError::NotInfiniteCyclic(_))
        ));
        assert!(matches!(
            alexander_polynomial(&pres("< a,b | a*b^-2 >")),
            Err(AlexanderError::GeneratorImagesDiffer)
        ));
        // Z with a redundant generator: all images equal but one relator short
        let p = pres("< a,b,c | a*b^-1 >");
        assert!(matches!(
            alexander_polynomial(&p),
            Err(AlexanderError::NotInfiniteCyclic(_))
        ));
        let q = pres("< a,b | a*b^-1, a*b^-1 >");
        assert!(alexander_polynomial(&q).unwrap().polynomial.is_one());
    }
}
