use super::EngineError;
use crate::finite::{derived_subgroup, is_perfect, FiniteError, FiniteGroup};

/// Checks a chain `G = G_0 ≥ G_1 ≥ … ≥ G_n` inside a finite group: each
/// member normal in its predecessor with abelian quotient, `G_n` perfect.
/// The first member must be `g` itself.
pub fn check_filtration_certificate(
    g: &FiniteGroup,
    chain: &[FiniteGroup],
) -> Result<bool, EngineError> {
    let first = chain.first().ok_or(EngineError::EmptyChain)?;
    if !first.same_elements(g) {
        return Err(EngineError::ChainStart);
    }
    for (i, h) in chain.iter().enumerate() {
        if !h.is_subgroup_of(g) {
            return Err(FiniteError::NotSubgroup(format!(
                "chain member {i} is not contained in G"
            ))
            .into());
        }
    }
    for w in chain.windows(2) {
        let (big, small) = (&w[0], &w[1]);
        if !small.is_subgroup_of(big) || !small.is_normal_in(big) {
            return Ok(false);
        }
        // big/small is abelian iff [big, big] ≤ small
        if !derived_subgroup(big).is_subgroup_of(small) {
            return Ok(false);
        }
    }
    Ok(is_perfect(chain.last().expect("nonempty")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{doa_finite, parse_cycles, parse_generators, DEFAULT_MAX_ORDER};

    fn group(text: &str) -> FiniteGroup {
        FiniteGroup::enumerate(&parse_generators(text).unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    fn sub(g: &FiniteGroup, gens: &[&str]) -> FiniteGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| parse_cycles(s, g.degree()).unwrap())
            .collect();
        g.subgroup(&gens).unwrap()
    }

    #[test]
    fn s4_standard_series() {
        let s4 = group("(0 1), (0 1 2 3)");
        let a4 = sub(&s4, &["(0 1 2)", "(1 2 3)"]);
        let v4 = sub(&s4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let one = s4.trivial_like();
        let chain = [s4.clone(), a4, v4.clone(), one];
        assert!(check_filtration_certificate(&s4, &chain).unwrap());
        assert!(doa_finite(&s4).0 < chain.len());
        assert!(
            !check_filtration_certificate(&s4, &[s4.clone(), v4.clone(), s4.trivial_like()])
                .unwrap()
        );
        // a non-perfect tail is rejected
        assert!(!check_filtration_certificate(
            &s4,
            &[s4.clone(), sub(&s4, &["(0 1 2)", "(1 2 3)"])]
        )
        .unwrap());
    }

    #[test]
    fn s5_over_a5() {
        let s5 = group("(0 1), (0 1 2 3 4)");
        let a5 = sub(&s5, &["(0 1 2)", "(0 1 2 3 4)"]);
        assert!(check_filtration_certificate(&s5, &[s5.clone(), a5]).unwrap());
    }

    #[test]
    fn malformed_chains() {
        let s4 = group("(0 1), (0 1 2 3)");
        assert!(matches!(
            check_filtration_certificate(&s4, &[]),
            Err(EngineError::EmptyChain)
        ));
        let v4 = sub(&s4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        assert!(matches!(
            check_filtration_certificate(&s4, &[v4]),
            Err(EngineError::ChainStart)
        ));
        let c5 = group("(0 1 2 3 4)");
        assert!(check_filtration_certificate(&s4, &[s4.clone(), c5]).is_err());
    }
}
