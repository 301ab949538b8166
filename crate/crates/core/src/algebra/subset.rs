//! Connection sets and the subset predicates used as theorem hypotheses.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::arith::gcd;
use super::group::{Element, FiniteGroup};
use crate::error::{Error, Result};

/// A subset of a group, kept sorted and duplicate-free.
#[derive(Debug, Clone)]
pub struct GroupSubset {
    group: Arc<FiniteGroup>,
    members: Vec<Element>,
    mask: Vec<bool>,
}

impl PartialEq for GroupSubset {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.group.same_as(&other.group)
    }
}

impl GroupSubset {
    pub fn new(group: &Arc<FiniteGroup>, members: impl IntoIterator<Item = Element>) -> Result<Self> {
        let n = group.order();
        let mut mask = vec![false; n];
        for g in members {
            if g >= n {
                return Err(Error::IndexOutOfRange { index: g, order: n });
            }
            mask[g] = true;
        }
        let members = (0..n).filter(|&g| mask[g]).collect();
        Ok(GroupSubset { group: Arc::clone(group), members, mask })
    }

    pub fn empty(group: &Arc<FiniteGroup>) -> Self {
        Self::new(group, []).expect("empty subset is valid")
    }

    pub fn identity_only(group: &Arc<FiniteGroup>) -> Self {
        Self::new(group, [group.identity()]).expect("identity is a valid index")
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        Self::new(group, 0..group.order()).expect("all indices valid")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, g: Element) -> bool {
        self.mask.get(g).copied().unwrap_or(false)
    }


    pub fn ensure_over(&self, group: &FiniteGroup) -> Result<()> {
        if self.group.same_as(group) {
            Ok(())
        } else {
            Err(Error::MismatchedGroup {
                expected: group.label().to_string(),
                found: self.group.label().to_string(),
            })
        }
    }

    pub fn union(&self, other: &GroupSubset) -> Result<Self> {
        other.ensure_over(&self.group)?;
        Self::new(&self.group, self.members.iter().chain(&other.members).copied())
    }

    pub fn with_identity(&self) -> Self {
        Self::new(&self.group, self.members.iter().copied().chain([self.group.identity()]))
            .expect("indices already validated")
    }

    /// `S⁻¹`.
    pub fn inverse(&self) -> Self {
        Self::new(&self.group, self.members.iter().map(|&g| self.group.invert_unchecked(g)))
            .expect("indices already validated")
    }

    /// Re-homes the subset onto an equal group (same label and table).
    pub fn rebind(&self, group: &Arc<FiniteGroup>) -> Result<Self> {
        self.ensure_over(group)?;
        Self::new(group, self.members.iter().copied())
    }

    pub fn predicates(&self) -> SubsetPredicates {
        subset_predicates(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubsetPredicates {
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub normal: bool,
    pub antinormal: bool,
    pub eulerian: bool,
    pub contains_identity: bool,
}

pub fn subset_predicates(s: &GroupSubset) -> SubsetPredicates {
    let g = s.group();
    let symmetric = s.members.iter().all(|&x| s.contains(g.invert_unchecked(x)));
    let antisymmetric = s.members.iter().all(|&x| !s.contains(g.invert_unchecked(x)));
    let preserves = |h: Element| {
        let hi = g.invert_unchecked(h);
        s.members
            .iter()
            .all(|&x| s.contains(g.combine_unchecked(g.combine_unchecked(h, x), hi)))
    };
    let normal = (0..g.order()).all(preserves);
    // S ∩ N_G(S) = ∅, where N_G(S) = {h : hSh⁻¹ = S}.
    let antinormal = s.members.iter().all(|&h| !preserves(h));
    SubsetPredicates {
        symmetric,
        antisymmetric,
        normal,
        antinormal,
        eulerian: is_eulerian(s),
        contains_identity: s.contains(g.identity()),
    }
}

/// Power-closed: `x ∈ S` and `gcd(j, ord x) = 1` imply `x^j ∈ S`.
pub fn is_eulerian(s: &GroupSubset) -> bool {
    let g = s.group();
    s.members.iter().all(|&x| {
        let ord = g.element_order(x);
        let mut y = x;
        for j in 1..ord {
            if gcd(j as u64, ord as u64) == 1 && !s.contains(y) {
                return false;
            }
            y = g.combine_unchecked(y, x);
        }
        true
    })
}

/// Membership in the Boolean algebra generated by the subgroups of an abelian group.
///
/// The atoms are the classes `{h : ⟨h⟩ = ⟨g⟩}`; they are found here by comparing
/// the cyclic subgroups themselves rather than by walking power maps.
pub fn boolean_algebra_member(s: &GroupSubset) -> Result<bool> {
    let g = s.group();
    if !g.is_abelian() {
        return Err(Error::NonAbelian(g.label().to_string()));
    }
    let mut class_of: HashMap<Vec<Element>, (bool, bool)> = HashMap::new();
    for x in 0..g.order() {
        let entry = class_of.entry(g.cyclic_subgroup(x)).or_insert((false, false));
        if s.contains(x) {
            entry.0 = true;
        } else {
            entry.1 = true;
        }
    }
    Ok(class_of.values().all(|&(inside, outside)| !(inside && outside)))
}

/// `S_n(d) = {a ∈ Z_n : gcd(a, n) = d}` for `d | n`, `1 ≤ d < n`.
pub fn gcd_class(group: &Arc<FiniteGroup>, d: usize) -> Result<GroupSubset> {
    let n = cyclic_modulus(group)?;
    if d == 0 || d >= n || n % d != 0 {
        return Err(Error::NotDivisor { divisor: d as u64, value: n as u64 });
    }
    GroupSubset::new(group, (1..n).filter(|&a| gcd(a as u64, n as u64) == d as u64))
}

/// Union of gcd classes over `D`.
pub fn gcd_union(group: &Arc<FiniteGroup>, divisors: &[usize]) -> Result<GroupSubset> {
    let mut members = Vec::new();
    for &d in divisors {
        members.extend_from_slice(gcd_class(group, d)?.members());
    }
    GroupSubset::new(group, members)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GcdDecomposition {
    /// `S` is the union of `S_n(d)` over these divisors.
    Union(Vec<usize>),
    /// `inside ∈ S`, `outside ∉ S`, same gcd with `n`.
    NotUnion { inside: Element, outside: Element },
}

impl GcdDecomposition {
    pub fn is_union(&self) -> bool {
        matches!(self, GcdDecomposition::Union(_))
    }
}

/// Decides whether a subset of `Z_n` is a union of gcd classes.
pub fn gcd_decomposition(s: &GroupSubset) -> Result<GcdDecomposition> {
    let n = cyclic_modulus(s.group())?;
    let mut by_gcd: Vec<(usize, Option<Element>, Option<Element>)> = Vec::new();
    for a in 0..n {
        let d = gcd(a as u64, n as u64) as usize;
        let slot = match by_gcd.iter_mut().find(|(e, _, _)| *e == d) {
            Some(slot) => slot,
            None => {
                by_gcd.push((d, None, None));
                by_gcd.last_mut().unwrap()
            }
        };
        if s.contains(a) {
            slot.1.get_or_insert(a);
        } else {
            slot.2.get_or_insert(a);
        }
    }
    let mut divisors = Vec::new();
    for &(d, inside, outside) in &by_gcd {
        match (inside, outside) {
            (Some(i), Some(o)) => return Ok(GcdDecomposition::NotUnion { inside: i, outside: o }),
            (Some(_), None) => divisors.push(d),
            _ => {}
        }
    }
    divisors.sort_unstable();
    Ok(GcdDecomposition::Union(divisors))
}

fn cyclic_modulus(group: &FiniteGroup) -> Result<usize> {
    if group.is_cyclic_residues() {
        Ok(group.order())
    } else {
        Err(Error::InvalidParameter(format!(
            "{} is not a cyclic group in residue order",
            group.label()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: usize) -> Arc<FiniteGroup> {
        FiniteGroup::cyclic(n).unwrap()
    }

    const S1: [usize; 8] = [1, 2, 4, 5, 9, 10, 12, 13];

    #[test]
    fn predicates_on_small_sets() {
        let g = z(4);
        let s = GroupSubset::new(&g, [1, 3]).unwrap();
        let p = s.predicates();
        assert!(p.symmetric && p.normal && p.eulerian && !p.contains_identity && !p.antisymmetric);

        let g16 = z(16);
        let p = GroupSubset::new(&g16, S1).unwrap().predicates();
        assert!(!p.symmetric && p.normal);

        let p = GroupSubset::new(&g, [0, 1]).unwrap().predicates();
        assert!(p.contains_identity && !p.antisymmetric);
    }

    #[test]
    fn antinormal_in_dihedral() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        // a normalizes {a}, and {a} is not closed under conjugation by b.
        let s = GroupSubset::new(&d3, [2]).unwrap();
        let p = s.predicates();
        assert!(!p.normal && !p.antinormal);
        // {b}: b normalizes {b}, so not antinormal.
        let s = GroupSubset::new(&d3, [1]).unwrap();
        assert!(!s.predicates().antinormal);
        // {b, ab}: neither reflection fixes the set under conjugation.
        let s = GroupSubset::new(&d3, [1, 3]).unwrap();
        assert!(s.predicates().antinormal);
    }

    #[test]
    fn gcd_classes() {
        assert_eq!(gcd_class(&z(4), 1).unwrap().members(), &[1, 3]);
        assert_eq!(gcd_class(&z(12), 4).unwrap().members(), &[4, 8]);
        assert!(matches!(gcd_class(&z(12), 5), Err(Error::NotDivisor { .. })));
        assert!(matches!(gcd_class(&z(12), 12), Err(Error::NotDivisor { .. })));
        let s1 = GroupSubset::new(&z(16), S1).unwrap();
        assert_eq!(gcd_decomposition(&s1).unwrap(), GcdDecomposition::NotUnion { inside: 1, outside: 3 });
        let u = gcd_union(&z(12), &[1, 4]).unwrap();
        assert_eq!(gcd_decomposition(&u).unwrap(), GcdDecomposition::Union(vec![1, 4]));
    }

    #[test]
    fn boolean_algebra_examples() {
        let g = z(4);
        assert!(boolean_algebra_member(&GroupSubset::new(&g, [1, 3]).unwrap()).unwrap());
        assert!(!boolean_algebra_member(&GroupSubset::new(&g, [1]).unwrap()).unwrap());
        let r = FiniteGroup::abelian("Z4xZ3", &[4, 3]).unwrap();
        // units {1,3}×{1,2} in mixed radix (a,b) ↦ 3a+b
        let units = GroupSubset::new(&r, [4, 5, 10, 11]).unwrap();
        assert!(boolean_algebra_member(&units).unwrap());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(matches!(
            boolean_algebra_member(&GroupSubset::empty(&s3)),
            Err(Error::NonAbelian(_))
        ));
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = GroupSubset::new(&z(4), [1]).unwrap();
        let b = GroupSubset::new(&z(5), [1]).unwrap();
        assert!(matches!(a.union(&b), Err(Error::MismatchedGroup { .. })));
        // An equal group built separately is accepted.
        let c = GroupSubset::new(&z(4), [3]).unwrap();
        assert_eq!(a.union(&c).unwrap().members(), &[1, 3]);
    }

    fn abelian_factors() -> impl Strategy<Value = Vec<usize>> {
        prop_oneof![
            (2usize..=48).prop_map(|n| vec![n]),
            (2usize..=6, 2usize..=8).prop_filter("≤48", |(a, b)| a * b <= 48).prop_map(|(a, b)| vec![a, b]),
            Just(vec![2, 2, 2]),
            Just(vec![2, 2, 4]),
            Just(vec![2, 2, 2, 2]),
        ]
    }

    proptest! {
        #[test]
        fn eulerian_iff_boolean_algebra(factors in abelian_factors(), bits in any::<u64>()) {
            let g = FiniteGroup::abelian("A", &factors).unwrap();
            let s = GroupSubset::new(&g, (0..g.order()).filter(|i| bits >> i & 1 == 1)).unwrap();
            prop_assert_eq!(is_eulerian(&s), boolean_algebra_member(&s).unwrap());
        }

        #[test]
        fn cyclic_gcd_union_iff_eulerian(n in 2usize..=48, bits in any::<u64>(), closure in any::<bool>()) {
            let g = z(n);
            let mut s = GroupSubset::new(&g, (0..n).filter(|i| bits >> i & 1 == 1)).unwrap();
            if closure {
                // Close under generators so the positive case is exercised too.
                let keep: Vec<usize> = (0..n).filter(|&a| s.members().iter().any(|&x| gcd(a as u64, n as u64) == gcd(x as u64, n as u64))).collect();
                s = GroupSubset::new(&g, keep).unwrap();
            }
            prop_assert_eq!(gcd_decomposition(&s).unwrap().is_union(), is_eulerian(&s));
        }
    }
}
