//! Left ideals and graded left ideals of a finite ring.
//!
//! Enumeration works by iterated extension: every left ideal of a finite
//! unital ring is a finite sum of principal left ideals `Rx`, so starting
//! from `{0}` and repeatedly adding principal ideals reaches the whole
//! lattice. For graded ideals only homogeneous generators are used.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::grading::Grading;
use crate::limits::Limits;
use crate::ring::FiniteRing;
use crate::Result;

/// A left ideal as a membership set. `graded` records the status with
/// respect to the grading the ideal was enumerated under, when known.
/// Equality and ordering look at the members only.
#[derive(Clone, Debug)]
pub struct IdealSet {
    members: ElemSet,
    graded: Option<bool>,
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for IdealSet {}

impl Ord for IdealSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl PartialOrd for IdealSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl IdealSet {
    pub fn new(members: ElemSet) -> Self {
        IdealSet { members, graded: None }
    }

    pub fn with_graded(mut self, graded: bool) -> Self {
        self.graded = Some(graded);
        self
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn graded(&self) -> Option<bool> {
        self.graded
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// `{0}`
    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.members.universe()
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Whether `I cap J != {0}`.
    pub fn meets(&self, other: &IdealSet) -> bool {
        self.members.intersection_len(&other.members) > 1
    }
}

/// `Rx`; with a unity this is already closed under addition.
pub fn principal_left_ideal(ring: &FiniteRing, x: usize) -> ElemSet {
    ElemSet::from_iter(ring.size(), ring.elements().map(|r| ring.mul(r, x)))
}

/// `{a + b}` for left ideals `a`, `b`.
fn sum_sets(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    if a.is_subset(b) {
        return b.clone();
    }
    if b.is_subset(a) {
        return a.clone();
    }
    let mut out = ring.empty_set();
    let bs: Vec<usize> = b.iter().collect();
    for x in a.iter() {
        for &y in &bs {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// The smallest left ideal containing `gens`.
pub fn generated_left_ideal<I: IntoIterator<Item = usize>>(ring: &FiniteRing, gens: I) -> IdealSet {
    let mut current = ElemSet::singleton(ring.size(), ring.zero());
    for g in gens {
        if !current.contains(g) {
            current = sum_sets(ring, &current, &principal_left_ideal(ring, g));
        }
    }
    IdealSet::new(current)
}

fn enumerate_from(ring: &FiniteRing, principal: BTreeSet<ElemSet>, limits: &Limits) -> Result<Vec<IdealSet>> {
    let zero = ElemSet::singleton(ring.size(), ring.zero());
    let mut found: BTreeSet<ElemSet> = BTreeSet::new();
    found.insert(zero.clone());
    let mut queue = alloc::vec![zero];
    while let Some(ideal) = queue.pop() {
        for p in &principal {
            if p.is_subset(&ideal) {
                continue;
            }
            let next = sum_sets(ring, &ideal, p);
            if !found.contains(&next) {
                if found.len() >= limits.ideal_count {
                    return Err(Error::IdealCountLimit { cap: limits.ideal_count });
                }
                found.insert(next.clone());
                queue.push(next);
            }
        }
    }
    Ok(found.into_iter().map(IdealSet::new).collect())
}

/// All left ideals, `{0}` and `R` included, ordered by size then members.
pub fn enumerate_left_ideals(ring: &FiniteRing, limits: &Limits) -> Result<Vec<IdealSet>> {
    let principal: BTreeSet<ElemSet> = ring.elements().map(|x| principal_left_ideal(ring, x)).collect();
    enumerate_from(ring, principal, limits)
}

/// All graded left ideals, `{0}` and `R` included, each flagged graded.
pub fn enumerate_graded_left_ideals(grading: &Grading, limits: &Limits) -> Result<Vec<IdealSet>> {
    let ring = grading.ring();
    let principal: BTreeSet<ElemSet> =
        grading.homogeneous_elements().map(|x| principal_left_ideal(ring, x)).collect();
    let ideals = enumerate_from(ring, principal, limits)?;
    Ok(ideals
        .into_iter()
        .map(|i| {
            debug_assert!(is_graded(grading, i.members()));
            i.with_graded(true)
        })
        .collect())
}

/// Every homogeneous component of every member is a member.
pub fn is_graded(grading: &Grading, members: &ElemSet) -> bool {
    members.iter().all(|x| grading.decompose(x).iter().all(|&(_, y)| members.contains(y)))
}

/// Marks each ideal with its graded status.
pub fn mark_graded(grading: &Grading, ideals: Vec<IdealSet>) -> Vec<IdealSet> {
    ideals
        .into_iter()
        .map(|i| {
            let g = is_graded(grading, i.members());
            i.with_graded(g)
        })
        .collect()
}

/// Drops `{0}` and `R`.
pub fn nontrivial_proper(ideals: &[IdealSet]) -> Vec<IdealSet> {
    ideals.iter().filter(|i| !i.is_zero() && !i.is_whole()).cloned().collect()
}

pub fn ideal_sum(ring: &FiniteRing, a: &IdealSet, b: &IdealSet) -> IdealSet {
    IdealSet::new(sum_sets(ring, &a.members, &b.members))
}

pub fn ideal_intersect(a: &IdealSet, b: &IdealSet) -> IdealSet {
    IdealSet::new(a.members.intersection(&b.members))
}

/// The left ideal generated by all products `ab`.
pub fn ideal_product(ring: &FiniteRing, a: &IdealSet, b: &IdealSet) -> IdealSet {
    let products: BTreeSet<usize> = a.members.iter().flat_map(|x| b.members.iter().map(move |y| ring.mul(x, y))).collect();
    generated_left_ideal(ring, products)
}

/// `I^k`, with `I^0 = R`.
pub fn ideal_power(ring: &FiniteRing, a: &IdealSet, k: usize) -> IdealSet {
    let mut acc = IdealSet::new(ElemSet::full(ring.size()));
    for _ in 0..k {
        acc = ideal_product(ring, &acc, a);
    }
    acc
}

/// No member of `family` lies strictly inside `ideal`.
pub fn is_minimal(ideal: &IdealSet, family: &[IdealSet]) -> bool {
    !family.iter().any(|j| j != ideal && j.is_subset(ideal))
}

/// No member of `family` strictly contains `ideal`.
pub fn is_maximal(ideal: &IdealSet, family: &[IdealSet]) -> bool {
    !family.iter().any(|j| j != ideal && ideal.is_subset(j))
}

/// `ideal` meets every member of `family` nontrivially.
pub fn is_essential(ideal: &IdealSet, family: &[IdealSet]) -> bool {
    family.iter().all(|j| ideal.meets(j))
}

/// The maximal members of a family of proper ideals.
pub fn maximal_members(family: &[IdealSet]) -> Vec<IdealSet> {
    family.iter().filter(|i| is_maximal(i, family)).cloned().collect()
}

pub fn minimal_members(family: &[IdealSet]) -> Vec<IdealSet> {
    family.iter().filter(|i| is_minimal(i, family)).cloned().collect()
}

/// Every nonzero homogeneous element is a unit.
pub fn is_graded_division(grading: &Grading) -> bool {
    let ring = grading.ring();
    grading.homogeneous_elements().all(|x| ring.is_unit(x))
}

pub fn is_graded_field(grading: &Grading) -> bool {
    grading.ring().is_commutative() && is_graded_division(grading)
}

/// Commutative with no nonzero homogeneous zero divisors.
pub fn is_graded_domain(grading: &Grading) -> bool {
    let ring = grading.ring();
    if !ring.is_commutative() {
        return false;
    }
    let homogeneous: Vec<usize> = grading.homogeneous_elements().collect();
    homogeneous
        .iter()
        .all(|&a| homogeneous.iter().all(|&b| ring.mul(a, b) != ring.zero()))
}

/// No nonzero homogeneous nilpotent element.
pub fn is_graded_reduced(grading: &Grading) -> bool {
    let ring = grading.ring();
    grading.homogeneous_elements().all(|x| !ring.is_nilpotent(x))
}

/// Exactly one maximal proper graded left ideal. `graded_family` holds the
/// nontrivial proper graded ideals; when it is empty `{0}` is the unique
/// maximal one.
pub fn is_graded_local(graded_family: &[IdealSet]) -> bool {
    graded_family.is_empty() || maximal_members(graded_family).len() == 1
}

/// A pair `I, J` of the family with `I + J = R` and `I cap J = {0}`.
pub fn complementary_pair(ring: &FiniteRing, family: &[IdealSet]) -> Option<(usize, usize)> {
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate().skip(i + 1) {
            if a.len() * b.len() == ring.size() && !a.meets(b) && ideal_sum(ring, a, b).is_whole() {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_graded_indecomposable(ring: &FiniteRing, graded_family: &[IdealSet]) -> bool {
    complementary_pair(ring, graded_family).is_none()
}

/// A greedy generating set: ascending members not yet in the span. With a
/// grading, only homogeneous members are used (which suffices for graded
/// ideals).
pub fn generators(ring: &FiniteRing, ideal: &IdealSet, grading: Option<&Grading>) -> Vec<usize> {
    let mut span = IdealSet::new(ElemSet::singleton(ring.size(), ring.zero()));
    let mut gens = Vec::new();
    for x in ideal.members().iter() {
        if span.contains(x) {
            continue;
        }
        if let Some(g) = grading {
            if !g.is_homogeneous(x) {
                continue;
            }
        }
        gens.push(x);
        span = ideal_sum(ring, &span, &IdealSet::new(principal_left_ideal(ring, x)));
        if span == *ideal {
            break;
        }
    }
    if span != *ideal {
        // Not generated by homogeneous members: fall back to all members.
        return generators(ring, ideal, None);
    }
    gens
}

/// `(g1,g2,...)` using element labels.
pub fn describe(ring: &FiniteRing, ideal: &IdealSet, grading: Option<&Grading>) -> String {
    if ideal.is_zero() {
        return "(0)".into();
    }
    if ideal.is_whole() {
        return "(1)".into();
    }
    let gens: Vec<&str> = generators(ring, ideal, grading).into_iter().map(|g| ring.label(g)).collect();
    alloc::format!("({})", gens.join(","))
}

/// Smallest number of homogeneous elements generating `ideal`, searched up
/// to `max_k`.
pub fn min_homogeneous_generators(grading: &Grading, ideal: &IdealSet, max_k: usize) -> Option<usize> {
    let ring = grading.ring();
    if ideal.is_zero() {
        return Some(0);
    }
    let homogeneous: Vec<usize> = ideal.members().iter().filter(|&x| grading.degree_of(x).is_some()).collect();
    // Distinct principal ideals are all that matter.
    let principal: Vec<IdealSet> = homogeneous
        .iter()
        .map(|&x| IdealSet::new(principal_left_ideal(ring, x)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    fn search(ring: &FiniteRing, principal: &[IdealSet], target: &IdealSet, start: usize, acc: &IdealSet, left: usize) -> bool {
        if acc == target {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..principal.len()).any(|i| {
            !principal[i].is_subset(acc) && search(ring, principal, target, i + 1, &ideal_sum(ring, acc, &principal[i]), left - 1)
        })
    }
    let zero = IdealSet::new(ElemSet::singleton(ring.size(), ring.zero()));
    (1..=max_k).find(|&k| search(ring, &principal, ideal, 0, &zero, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{self, Degree, GradeGroup};
    use crate::ring::{self, FiniteGroup, FiniteModule};
    use alloc::sync::Arc;
    use alloc::vec;

    fn lim() -> Limits {
        Limits::default()
    }

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(ring::make_cyclic_ring(n, &lim()).unwrap())
    }

    fn sets(list: &[IdealSet]) -> Vec<Vec<usize>> {
        list.iter().map(|i| i.members().iter().collect()).collect()
    }

    fn square_zero_algebra() -> Arc<FiniteRing> {
        let e = |i: usize| {
            let mut v = vec![0; 3];
            v[i] = 1;
            v
        };
        let zero = vec![0; 3];
        let table = vec![
            vec![e(0), e(1), e(2)],
            vec![e(1), zero.clone(), zero.clone()],
            vec![e(2), zero.clone(), zero],
        ];
        Arc::new(ring::algebra_over_zn(2, 3, &table, Some(vec!["1".into(), "x".into(), "y".into()]), &lim()).unwrap())
    }

    #[test]
    fn z12_lattice() {
        let r = z(12);
        assert_eq!(generated_left_ideal(&r, [4]).members().iter().collect::<Vec<_>>(), vec![0, 4, 8]);
        assert!(generated_left_ideal(&r, []).is_zero());
        let all = enumerate_left_ideals(&r, &lim()).unwrap();
        assert_eq!(all.len(), 6);
        let np = nontrivial_proper(&all);
        let labels: Vec<String> = np.iter().map(|i| describe(&r, i, None)).collect();
        assert_eq!(np.iter().map(|i| i.len()).collect::<Vec<_>>(), vec![2, 3, 4, 6]);
        assert_eq!(labels, vec!["(6)", "(4)", "(3)", "(2)"]);
    }

    #[test]
    fn z12_arithmetic() {
        let r = z(12);
        let i4 = generated_left_ideal(&r, [4]);
        let i6 = generated_left_ideal(&r, [6]);
        assert!(ideal_intersect(&i4, &i6).is_zero());
        assert_eq!(ideal_sum(&r, &i4, &i6), generated_left_ideal(&r, [2]));
        let np = nontrivial_proper(&enumerate_left_ideals(&r, &lim()).unwrap());
        let i6 = &np[0];
        let i2 = &np[3];
        assert!(is_minimal(i6, &np));
        assert!(!is_minimal(i2, &np));
        assert!(is_essential(i2, &np));
        assert!(!is_essential(&np[1], &np));
        let single = vec![i6.clone()];
        assert!(is_minimal(i6, &single) && is_maximal(i6, &single) && is_essential(i6, &single));
    }

    #[test]
    fn square_zero_algebra_ideals() {
        let r = square_zero_algebra();
        let np = nontrivial_proper(&enumerate_left_ideals(&r, &lim()).unwrap());
        let labels: Vec<String> = np.iter().map(|i| describe(&r, i, None)).collect();
        assert_eq!(labels, vec!["(x)", "(y)", "(x+y)", "(x,y)"]);
        let m = &np[3];
        assert!(ideal_power(&r, m, 2).is_zero());
        assert!(ideal_power(&r, m, 0).is_whole());
    }

    #[test]
    fn fields_have_trivial_lattices() {
        assert_eq!(enumerate_left_ideals(&z(2), &lim()).unwrap().len(), 2);
        let f4 = ring::polynomial_quotient(&z(2), &[1, 1, 1], &lim()).unwrap();
        assert_eq!(enumerate_left_ideals(&f4, &lim()).unwrap().len(), 2);
    }

    #[test]
    fn graded_ideals_of_group_ring() {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let r = Arc::new(ring::group_ring(&z(4), &c2, &lim()).unwrap());
        let g = grading::group_ring_grading(&r).unwrap();
        let u = r.element("1+g").unwrap();
        let i = generated_left_ideal(&r, [u]);
        let labels: Vec<&str> = i.members().iter().map(|x| r.label(x)).collect();
        assert_eq!(labels, vec!["0", "1+g", "2+2g", "3+3g"]);
        assert!(!is_graded(&g, i.members()));
        let graded = nontrivial_proper(&enumerate_graded_left_ideals(&g, &lim()).unwrap());
        assert_eq!(graded.len(), 1);
        assert_eq!(describe(&r, &graded[0], Some(&g)), "(2)");
        assert!(nontrivial_proper(&enumerate_left_ideals(&r, &lim()).unwrap()).len() > 1);
    }

    #[test]
    fn graded_ideals_of_idealization() {
        let z4 = z(4);
        let m = Arc::new(FiniteModule::self_module(&z4).unwrap());
        let r = Arc::new(ring::idealization(&z4, &m, &lim()).unwrap());
        let g = grading::idealization_grading(&r).unwrap();
        let graded = nontrivial_proper(&enumerate_graded_left_ideals(&g, &lim()).unwrap());
        let labels: Vec<String> = graded.iter().map(|i| describe(&r, i, Some(&g))).collect();
        assert_eq!(labels, vec!["((0,2))", "((0,1))", "((0,2),(2,0))", "((0,1),(2,0))"]);
        assert_eq!(graded.iter().map(|i| i.len()).collect::<Vec<_>>(), vec![2, 4, 4, 8]);
    }

    #[test]
    fn trivial_grading_keeps_every_ideal() {
        let r = z(12);
        let g = grading::trivial_grading(&r, GradeGroup::Integers);
        assert_eq!(
            sets(&enumerate_graded_left_ideals(&g, &lim()).unwrap()),
            sets(&enumerate_left_ideals(&r, &lim()).unwrap())
        );
    }

    #[test]
    fn graded_predicates() {
        let f4 = Arc::new(ring::polynomial_quotient(&z(2), &[1, 1, 1], &lim()).unwrap());
        let g = grading::trivial_grading(&f4, GradeGroup::Integers);
        assert!(is_graded_field(&g) && is_graded_domain(&g) && is_graded_reduced(&g));
        let x3 = Arc::new(ring::polynomial_quotient(&z(2), &[0, 0, 0, 1], &lim()).unwrap());
        let gx = grading::poly_quotient_integer_grading(&x3).unwrap();
        assert!(!is_graded_domain(&gx));
        let fam = nontrivial_proper(&enumerate_graded_left_ideals(&gx, &lim()).unwrap());
        assert!(is_graded_local(&fam));
        assert_eq!(describe(&x3, &maximal_members(&fam)[0], Some(&gx)), "(x)");
        let z4 = grading::trivial_grading(&z(4), GradeGroup::Integers);
        assert!(!is_graded_reduced(&z4));
    }

    #[test]
    fn decomposability() {
        let p = Arc::new(ring::direct_product(&z(2), &z(2), &lim()).unwrap());
        let fam = nontrivial_proper(&enumerate_left_ideals(&p, &lim()).unwrap());
        assert!(!is_graded_indecomposable(&p, &fam));
        let r12 = z(12);
        let fam = nontrivial_proper(&enumerate_left_ideals(&r12, &lim()).unwrap());
        let (i, j) = complementary_pair(&r12, &fam).unwrap();
        assert_eq!((describe(&r12, &fam[i], None), describe(&r12, &fam[j], None)), ("(4)".into(), "(3)".into()));
        let r8 = z(8);
        assert!(is_graded_indecomposable(&r8, &nontrivial_proper(&enumerate_left_ideals(&r8, &lim()).unwrap())));
    }

    #[test]
    fn homogeneous_generator_counts() {
        let r = square_zero_algebra();
        let g = grading::grading_from_generators(&r, GradeGroup::Integers, &[(Degree(0), vec![1]), (Degree(1), vec![2]), (Degree(2), vec![4])]).unwrap();
        let m = generated_left_ideal(&r, [2, 4]);
        assert_eq!(min_homogeneous_generators(&g, &m, 3), Some(2));
        let x = generated_left_ideal(&r, [2]);
        assert_eq!(min_homogeneous_generators(&g, &x, 3), Some(1));
    }

    #[test]
    fn limit_is_enforced() {
        let tight = Limits { ideal_count: 3, ..lim() };
        assert!(matches!(enumerate_left_ideals(&z(12), &tight), Err(Error::IdealCountLimit { cap: 3 })));
    }
}
