use std::collections::VecDeque;
use std::fmt;

use indexmap::IndexSet;

use super::modmatrix::{parse_mod_matrix, ModMatrix};
use super::perm::{parse_cycles, Permutation};
use super::FiniteError;

/// Default enumeration budget.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// How the elements of a group were originally given. Matrix groups are
/// stored through their faithful action on row vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Permutation,
    ModMatrix { dim: usize, modulus: u32 },
}

/// A generator as written by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupGenerator {
    Perm(Permutation),
    Matrix(ModMatrix),
}

/// A finite group given by generators, with all elements enumerated in
/// breadth-first discovery order. Element 0 is the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    kind: ElementKind,
    degree: usize,
    generators: Vec<Permutation>,
    elements: IndexSet<Permutation>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("kind", &self.kind)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field(
                "generators",
                &self
                    .generators
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Breadth-first closure of `gens` inside `Sym(degree)`.
fn closure(
    degree: usize,
    gens: &[Permutation],
    max_order: usize,
) -> Result<IndexSet<Permutation>, FiniteError> {
    let mut elements = IndexSet::new();
    elements.insert(Permutation::identity(degree));
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y = x.mul(g);
            if !elements.contains(&y) {
                if elements.len() >= max_order {
                    return Err(FiniteError::BudgetExceeded { limit: max_order });
                }
                elements.insert(y);
            }
        }
    }
    Ok(elements)
}

/// Enlarges the closed set `elements = <gens>` by `new_gen`, in place.
fn extend_closure(
    elements: &mut IndexSet<Permutation>,
    gens: &[Permutation],
    new_gen: &Permutation,
) {
    let old = elements.len();
    let mut queue: VecDeque<usize> = (0..old).collect();
    while let Some(idx) = queue.pop_front() {
        let x = elements[idx].clone();
        let mut push = |y: Permutation, elements: &mut IndexSet<Permutation>| {
            let (i, inserted) = elements.insert_full(y);
            if inserted {
                queue.push_back(i);
            }
        };
        push(x.mul(new_gen), elements);
        if idx >= old {
            for g in gens {
                push(x.mul(g), elements);
            }
        }
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators`.
    pub fn enumerate(generators: &[GroupGenerator], max_order: usize) -> Result<Self, FiniteError> {
        let first = generators.first().ok_or(FiniteError::EmptyGenerators)?;
        match first {
            GroupGenerator::Perm(_) => {
                let mut perms = Vec::new();
                for g in generators {
                    match g {
                        GroupGenerator::Perm(p) => perms.push(p.clone()),
                        GroupGenerator::Matrix(_) => return Err(FiniteError::MixedGenerators),
                    }
                }
                let degree = perms.iter().map(Permutation::degree).max().unwrap_or(0);
                let perms = perms.iter().map(|p| p.embed(degree, 0)).collect::<Vec<_>>();
                Self::from_permutations(ElementKind::Permutation, degree, perms, max_order)
            }
            GroupGenerator::Matrix(m0) => {
                let (dim, modulus) = (m0.dim(), m0.modulus());
                let mut perms = Vec::new();
                for g in generators {
                    match g {
                        GroupGenerator::Matrix(m) if m.dim() == dim && m.modulus() == modulus => {
                            perms.push(m.to_permutation())
                        }
                        _ => return Err(FiniteError::MixedGenerators),
                    }
                }
                let degree = ModMatrix::action_degree(dim, modulus);
                Self::from_permutations(
                    ElementKind::ModMatrix { dim, modulus },
                    degree,
                    perms,
                    max_order,
                )
            }
        }
    }

    pub fn from_permutations(
        kind: ElementKind,
        degree: usize,
        generators: Vec<Permutation>,
        max_order: usize,
    ) -> Result<Self, FiniteError> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(FiniteError::MixedGenerators);
        }
        let elements = closure(degree, &generators, max_order)?;
        let g = FiniteGroup {
            kind,
            degree,
            generators,
            elements,
        };
        #[cfg(debug_assertions)]
        g.audit().expect("enumerated group is closed");
        Ok(g)
    }

    /// Trivial group in the same ambient representation.
    pub fn trivial_like(&self) -> FiniteGroup {
        let elements = closure(self.degree, &[], 1).expect("identity fits");
        FiniteGroup {
            kind: self.kind,
            degree: self.degree,
            generators: Vec::new(),
            elements,
        }
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.elements.get_index_of(x)
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.elements.contains(x)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].mul(&g[j]) == g[j].mul(&g[i])))
    }

    /// Structural check: identity present, closed under inverses and right
    /// multiplication by generators (which implies closure for finite sets).
    pub fn audit(&self) -> Result<(), FiniteError> {
        if !self.contains(&self.identity()) {
            return Err(FiniteError::AuditFailed("identity missing".into()));
        }
        for x in &self.elements {
            if !self.contains(&x.inverse()) {
                return Err(FiniteError::AuditFailed(format!("inverse of {x} missing")));
            }
            for g in &self.generators {
                if !self.contains(&x.mul(g)) {
                    return Err(FiniteError::AuditFailed(format!("{x} * {g} missing")));
                }
            }
        }
        Ok(())
    }

    /// Subgroup generated by elements of `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<FiniteGroup, FiniteError> {
        if let Some(g) = gens.iter().find(|g| !self.contains(g)) {
            return Err(FiniteError::NotSubgroup(format!(
                "{g} is not an element of the group"
            )));
        }
        let mut sub = self.trivial_like();
        for g in gens {
            sub.adjoin(g.clone());
        }
        Ok(sub)
    }

    /// Adds `g` as a generator (no-op if already a member).
    fn adjoin(&mut self, g: Permutation) -> bool {
        if self.contains(&g) {
            return false;
        }
        extend_closure(&mut self.elements, &self.generators, &g);
        self.generators.push(g);
        true
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<FiniteGroup, FiniteError> {
        if let Some(g) = seeds.iter().find(|g| !self.contains(g)) {
            return Err(FiniteError::NotSubgroup(format!(
                "{g} is not an element of the group"
            )));
        }
        let mut sub = self.trivial_like();
        let mut pending: VecDeque<Permutation> = seeds.iter().cloned().collect();
        while let Some(h) = pending.pop_front() {
            if sub.adjoin(h.clone()) {
                for g in &self.generators {
                    pending.push_back(h.conjugate_by(g));
                }
            }
        }
        Ok(sub)
    }

    /// Same ambient representation and every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Assumes `self ≤ other`.
    pub fn is_normal_in(&self, other: &FiniteGroup) -> bool {
        self.generators.iter().all(|h| {
            other
                .generators
                .iter()
                .all(|g| self.contains(&h.conjugate_by(g)))
        })
    }

    pub fn same_elements(&self, other: &FiniteGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Orbit of `x` under conjugation.
    pub fn conjugacy_class(&self, x: &Permutation) -> IndexSet<Permutation> {
        let mut class = IndexSet::new();
        class.insert(x.clone());
        let mut head = 0;
        while head < class.len() {
            let y = class[head].clone();
            head += 1;
            for g in &self.generators {
                class.insert(y.conjugate_by(g));
            }
        }
        class
    }

    /// One representative per conjugacy class, in discovery order.
    pub fn conjugacy_class_representatives(&self) -> Vec<Permutation> {
        let mut seen = vec![false; self.order()];
        let mut reps = Vec::new();
        for i in 0..self.order() {
            if seen[i] {
                continue;
            }
            let x = self.elements[i].clone();
            for y in self.conjugacy_class(&x) {
                seen[self.index_of(&y).expect("conjugate stays in group")] = true;
            }
            reps.push(x);
        }
        reps
    }

    pub fn generators_display(&self) -> Vec<String> {
        match self.kind {
            ElementKind::Permutation => self.generators.iter().map(ToString::to_string).collect(),
            ElementKind::ModMatrix { dim, modulus } => self
                .generators
                .iter()
                .map(|g| ModMatrix::from_permutation(g, dim, modulus).to_string())
                .collect(),
        }
    }
}

/// Parses a generator list. Generators are separated by `;`; permutation
/// generators may also be separated by top-level commas:
/// `(0 1), (0 1 2 3 4)` or `mod 5: [[1,1],[0,1]]; mod 5: [[1,0],[1,1]]`.
pub fn parse_generators(text: &str) -> Result<Vec<GroupGenerator>, FiniteError> {
    let mut out = Vec::new();
    for segment in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        if segment.starts_with("mod") {
            out.push(GroupGenerator::Matrix(parse_mod_matrix(segment)?));
            continue;
        }
        let mut depth = 0i32;
        let mut start = 0;
        let bytes = segment.as_bytes();
        let mut pieces = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b',' if depth == 0 => {
                    pieces.push(&segment[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&segment[start..]);
        for p in pieces.into_iter().map(str::trim).filter(|s| !s.is_empty()) {
            out.push(GroupGenerator::Perm(parse_cycles(p, 0)?));
        }
    }
    if out.is_empty() {
        return Err(FiniteError::EmptyGenerators);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(text: &str) -> FiniteGroup {
        FiniteGroup::enumerate(&parse_generators(text).unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn s5_from_transposition_and_cycle() {
        assert_eq!(group("(0 1), (0 1 2 3 4)").order(), 120);
    }

    #[test]
    fn identity_alone_is_trivial() {
        let g = group("()");
        assert_eq!(g.order(), 1);
        assert!(g.is_trivial());
    }

    #[test]
    fn sl2_f5_order() {
        let g = group("mod 5: [[1,1],[0,1]]; mod 5: [[1,0],[1,1]]");
        assert_eq!(g.order(), (25 - 1) * 5);
        assert_eq!(g.kind(), ElementKind::ModMatrix { dim: 2, modulus: 5 });
        assert_eq!(g.generators_display()[0], "mod 5: [[1,1],[0,1]]");
    }

    #[test]
    fn budget_exceeded() {
        let gens = parse_generators("(0 1), (0 1 2 3 4)").unwrap();
        assert!(matches!(
            FiniteGroup::enumerate(&gens, 100),
            Err(FiniteError::BudgetExceeded { limit: 100 })
        ));
    }

    #[test]
    fn mixed_generators_rejected() {
        let gens = parse_generators("(0 1); mod 3: [[1,1],[0,1]]").unwrap();
        assert!(matches!(
            FiniteGroup::enumerate(&gens, 100),
            Err(FiniteError::MixedGenerators)
        ));
        assert!(matches!(
            parse_generators(" ; "),
            Err(FiniteError::EmptyGenerators)
        ));
    }

    #[test]
    fn normal_closure_of_three_cycle_in_s4_is_a4() {
        let s4 = group("(0 1), (0 1 2 3)");
        let c = parse_cycles("(0 1 2)", 4).unwrap();
        let n = s4.normal_closure(&[c]).unwrap();
        assert_eq!(n.order(), 12);
        assert!(n.is_subgroup_of(&s4) && n.is_normal_in(&s4));
        n.audit().unwrap();
    }

    #[test]
    fn class_representatives_of_s4() {
        let s4 = group("(0 1), (0 1 2 3)");
        assert_eq!(s4.conjugacy_class_representatives().len(), 5);
    }
}
