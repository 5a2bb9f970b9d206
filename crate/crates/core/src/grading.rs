//! Gradings `R = sum_sigma R_sigma` of a finite ring by a finite group or
//! by the ordered integers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::ring::{Construction, FiniteGroup, FiniteRing};
use crate::Result;

/// Integer degrees are kept within this bound so group products never
/// overflow.
pub const DEGREE_BOUND: i64 = 1 << 31;

/// A degree: the element index for finite grade groups, the integer itself
/// for the ordered integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Degree(pub i64);

#[derive(Clone, Debug)]
pub enum GradeGroup {
    Finite(Arc<FiniteGroup>),
    /// The integers with their standard order; positives form the cone.
    Integers,
}

impl GradeGroup {
    pub fn identity(&self) -> Degree {
        match self {
            GradeGroup::Finite(g) => Degree(g.identity() as i64),
            GradeGroup::Integers => Degree(0),
        }
    }

    pub fn op(&self, a: Degree, b: Degree) -> Degree {
        match self {
            GradeGroup::Finite(g) => Degree(g.op(a.0 as usize, b.0 as usize) as i64),
            GradeGroup::Integers => Degree(a.0 + b.0),
        }
    }

    pub fn inverse(&self, a: Degree) -> Degree {
        match self {
            GradeGroup::Finite(g) => Degree(g.inverse(a.0 as usize) as i64),
            GradeGroup::Integers => Degree(-a.0),
        }
    }

    pub fn contains(&self, d: Degree) -> bool {
        match self {
            GradeGroup::Finite(g) => d.0 >= 0 && (d.0 as usize) < g.size(),
            GradeGroup::Integers => d.0.abs() < DEGREE_BOUND,
        }
    }

    pub fn label(&self, d: Degree) -> String {
        match self {
            GradeGroup::Finite(g) if self.contains(d) => g.name(d.0 as usize).to_string(),
            _ => d.0.to_string(),
        }
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, GradeGroup::Integers)
    }

    /// All degrees of a finite grade group; `None` for the integers.
    pub fn elements(&self) -> Option<Vec<Degree>> {
        match self {
            GradeGroup::Finite(g) => Some((0..g.size() as i64).map(Degree).collect()),
            GradeGroup::Integers => None,
        }
    }

    pub fn description(&self) -> String {
        match self {
            GradeGroup::Finite(g) => g.description().to_string(),
            GradeGroup::Integers => "Z".to_string(),
        }
    }
}

/// Where a grading came from; idealization- and integer-specific theorem
/// checks dispatch on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradingKind {
    Trivial,
    GroupRing,
    Idealization,
    PolyPower,
    Explicit,
}

/// A validated grading with its precomputed decomposition table.
#[derive(Clone)]
pub struct Grading {
    ring: Arc<FiniteRing>,
    group: GradeGroup,
    components: BTreeMap<Degree, ElemSet>,
    decomposition: Vec<Vec<(Degree, usize)>>,
    kind: GradingKind,
}

impl fmt::Debug for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Grading")
            .field("ring", &self.ring.description())
            .field("group", &self.group.description())
            .field("support", &self.support())
            .field("kind", &self.kind)
            .finish()
    }
}

/// Validates `components` as a grading of `ring` by `group`. Zero components
/// may be omitted. The decomposition table is built by enumerating the
/// product of the support components, which doubles as the direct-sum proof.
pub fn validate_grading(
    ring: Arc<FiniteRing>,
    group: GradeGroup,
    components: BTreeMap<Degree, ElemSet>,
    kind: GradingKind,
) -> Result<Grading> {
    let n = ring.size();
    let mut support: BTreeMap<Degree, ElemSet> = BTreeMap::new();
    for (d, set) in components {
        if !group.contains(d) {
            return Err(Error::InvalidDegree { degree: d.0.to_string() });
        }
        if set.universe() != n {
            return Err(Error::InvalidConstruction {
                reason: format!("component of degree {} has the wrong universe", group.label(d)),
            });
        }
        if set.is_empty() {
            return Err(Error::NotSubgroup { degree: group.label(d), a: ring.zero(), b: ring.zero() });
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(ring.add(a, b)) {
                    return Err(Error::NotSubgroup { degree: group.label(d), a, b });
                }
            }
        }
        if set.len() > 1 {
            support.insert(d, set);
        }
    }

    // Direct-sum check: odometer over the product of the components.
    let parts: Vec<(Degree, Vec<usize>)> = support.iter().map(|(d, s)| (*d, s.iter().collect())).collect();
    let mut decomposition: Vec<Option<Vec<(Degree, usize)>>> = vec![None; n];
    let mut counter = vec![0usize; parts.len()];
    loop {
        let mut sum = ring.zero();
        let mut decomp = Vec::new();
        for (i, (d, members)) in parts.iter().enumerate() {
            let x = members[counter[i]];
            sum = ring.add(sum, x);
            if x != ring.zero() {
                decomp.push((*d, x));
            }
        }
        if decomposition[sum].is_some() {
            return Err(Error::NotDirectSum { element: sum, decompositions: 2 });
        }
        decomposition[sum] = Some(decomp);
        let mut i = 0;
        while i < parts.len() {
            counter[i] += 1;
            if counter[i] < parts[i].1.len() {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
        if i == parts.len() {
            break;
        }
    }
    if let Some(missing) = decomposition.iter().position(|d| d.is_none()) {
        return Err(Error::NotDirectSum { element: missing, decompositions: 0 });
    }
    let decomposition: Vec<Vec<(Degree, usize)>> = decomposition.into_iter().map(|d| d.unwrap()).collect();

    for (&s, rs) in &support {
        for (&t, rt) in &support {
            let st = group.op(s, t);
            let target = support.get(&st);
            for a in rs.iter() {
                for b in rt.iter() {
                    let p = ring.mul(a, b);
                    let ok = match target {
                        Some(set) => set.contains(p),
                        None => p == ring.zero(),
                    };
                    if !ok {
                        return Err(Error::ProductEscapes { sigma: group.label(s), tau: group.label(t), a, b });
                    }
                }
            }
        }
    }

    let e = group.identity();
    if decomposition[ring.one()] != [(e, ring.one())] {
        return Err(Error::UnityNotInIdentityComponent);
    }

    Ok(Grading { ring, group, components: support, decomposition, kind })
}

/// `R_e = R`, every other component zero.
pub fn trivial_grading(ring: &Arc<FiniteRing>, group: GradeGroup) -> Grading {
    let e = group.identity();
    let mut components = BTreeMap::new();
    components.insert(e, ElemSet::full(ring.size()));
    validate_grading(ring.clone(), group, components, GradingKind::Trivial)
        .expect("the trivial grading is always valid")
}

/// `(R[G])_sigma = R sigma`.
pub fn group_ring_grading(ring: &Arc<FiniteRing>) -> Result<Grading> {
    let Construction::GroupRing { base, group } = ring.construction() else {
        return Err(Error::WrongConstruction { expected: "a group ring" });
    };
    let b = base.size();
    let mut components = BTreeMap::new();
    let mut place = 1usize;
    for s in 0..group.size() {
        components.insert(Degree(s as i64), ElemSet::from_iter(ring.size(), (0..b).map(|c| c * place)));
        place *= b;
    }
    validate_grading(ring.clone(), GradeGroup::Finite(group.clone()), components, GradingKind::GroupRing)
}

/// `(R(+)M)_0 = R (+) 0`, `(R(+)M)_1 = 0 (+) M`, graded by `C_2`.
pub fn idealization_grading(ring: &Arc<FiniteRing>) -> Result<Grading> {
    let Construction::Idealization { base, module } = ring.construction() else {
        return Err(Error::WrongConstruction { expected: "an idealization" });
    };
    let m = module.size();
    let n = ring.size();
    let mut components = BTreeMap::new();
    components.insert(Degree(0), ElemSet::from_iter(n, (0..base.size()).map(|r| r * m + module.zero())));
    components.insert(Degree(1), ElemSet::from_iter(n, (0..m).map(|x| base.zero() * m + x)));
    let c2 = Arc::new(FiniteGroup::cyclic(2)?);
    validate_grading(ring.clone(), GradeGroup::Finite(c2), components, GradingKind::Idealization)
}

/// The x-degree grading of `base[x]/(x^m)` by the integers.
pub fn poly_quotient_integer_grading(ring: &Arc<FiniteRing>) -> Result<Grading> {
    let Construction::PolyQuotient { base, modulus } = ring.construction() else {
        return Err(Error::WrongConstruction { expected: "a polynomial quotient by x^m" });
    };
    let d = modulus.len() - 1;
    if modulus[..d].iter().any(|&c| c != base.zero()) {
        return Err(Error::WrongConstruction { expected: "a polynomial quotient by x^m" });
    }
    let b = base.size();
    let mut components = BTreeMap::new();
    let mut place = 1usize;
    for k in 0..d {
        components.insert(Degree(k as i64), ElemSet::from_iter(ring.size(), (0..b).map(|c| c * place)));
        place *= b;
    }
    validate_grading(ring.clone(), GradeGroup::Integers, components, GradingKind::PolyPower)
}

/// The natural grading of a composite ring: group rings by their group,
/// idealizations by `C_2`, and `base[x]/(x^m)` by the integers.
pub fn canonical_grading(ring: &Arc<FiniteRing>) -> Result<Grading> {
    match ring.construction() {
        Construction::GroupRing { .. } => group_ring_grading(ring),
        Construction::Idealization { .. } => idealization_grading(ring),
        Construction::PolyQuotient { .. } => poly_quotient_integer_grading(ring),
        _ => Err(Error::WrongConstruction { expected: "a group ring, idealization, or x^m quotient" }),
    }
}

/// A grading whose components are the additive spans of the given
/// generators.
pub fn grading_from_generators(
    ring: &Arc<FiniteRing>,
    group: GradeGroup,
    generators: &[(Degree, Vec<usize>)],
) -> Result<Grading> {
    let mut components: BTreeMap<Degree, ElemSet> = BTreeMap::new();
    for (d, gens) in generators {
        if let Some(&bad) = gens.iter().find(|&&g| g >= ring.size()) {
            return Err(Error::InvalidConstruction { reason: format!("generator {bad} is not a ring element") });
        }
        let span = ring.additive_span(gens.iter().copied());
        let slot = components.entry(*d).or_insert_with(|| ring.empty_set());
        let merged = ring.additive_span(slot.iter().chain(span.iter()));
        *slot = merged;
    }
    validate_grading(ring.clone(), group, components, GradingKind::Explicit)
}

impl Grading {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn group(&self) -> &GradeGroup {
        &self.group
    }

    pub fn kind(&self) -> GradingKind {
        self.kind
    }

    pub fn identity(&self) -> Degree {
        self.group.identity()
    }

    /// Degrees with a nonzero component, ascending.
    pub fn support(&self) -> Vec<Degree> {
        self.components.keys().copied().collect()
    }

    pub fn components(&self) -> &BTreeMap<Degree, ElemSet> {
        &self.components
    }

    /// The component of degree `d` (the zero subgroup outside the support).
    pub fn component(&self, d: Degree) -> ElemSet {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| ElemSet::singleton(self.ring.size(), self.ring.zero()))
    }

    pub fn identity_component(&self) -> &ElemSet {
        &self.components[&self.group.identity()]
    }

    /// Homogeneous components of `x`, ascending by degree, zeros omitted.
    pub fn decompose(&self, x: usize) -> &[(Degree, usize)] {
        &self.decomposition[x]
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree_of(&self, x: usize) -> Option<Degree> {
        match self.decomposition[x].as_slice() {
            [(d, _)] => Some(*d),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self, x: usize) -> bool {
        self.decomposition[x].len() <= 1
    }

    /// Nonzero homogeneous elements, ascending.
    pub fn homogeneous_elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.ring.elements().filter(|&x| self.decomposition[x].len() == 1)
    }

    pub fn label_degree(&self, d: Degree) -> String {
        self.group.label(d)
    }

    /// The additive subgroup `R_sigma R_tau`.
    pub fn product_span(&self, sigma: Degree, tau: Degree) -> ElemSet {
        let (Some(a), Some(b)) = (self.components.get(&sigma), self.components.get(&tau)) else {
            return ElemSet::singleton(self.ring.size(), self.ring.zero());
        };
        let products: Vec<usize> = a.iter().flat_map(|x| b.iter().map(move |y| (x, y))).map(|(x, y)| self.ring.mul(x, y)).collect();
        self.ring.additive_span(products)
    }

    /// `R_{sigma tau^-1} x_tau != 0` for every nonzero homogeneous `x_tau`.
    pub fn is_sigma_faithful(&self, sigma: Degree) -> bool {
        self.sigma_faithful_witness(sigma).is_none()
    }

    /// A nonzero homogeneous element annihilated by `R_{sigma tau^-1}`.
    pub fn sigma_faithful_witness(&self, sigma: Degree) -> Option<usize> {
        for (&tau, members) in &self.components {
            let shift = self.group.op(sigma, self.group.inverse(tau));
            let Some(left) = self.components.get(&shift) else {
                return members.iter().find(|&x| x != self.ring.zero());
            };
            for x in members.iter().filter(|&x| x != self.ring.zero()) {
                if left.iter().all(|r| self.ring.mul(r, x) == self.ring.zero()) {
                    return Some(x);
                }
            }
        }
        None
    }

    /// Faithful at every degree. An integer grading of a finite ring never
    /// is: `R_{k} 1 = 0` for any `k` beyond the support.
    pub fn is_faithful(&self) -> bool {
        match self.group.elements() {
            Some(all) => all.into_iter().all(|s| self.is_sigma_faithful(s)),
            None => false,
        }
    }

    fn unity_in_product(&self, sigma: Degree) -> bool {
        self.product_span(sigma, self.group.inverse(sigma)).contains(self.ring.one())
    }

    /// `1 in R_sigma R_{sigma^-1}` for every degree of the group. Over the
    /// integers this forces the support to be `{0}`.
    pub fn is_strong(&self) -> bool {
        match self.group.elements() {
            Some(all) => all.into_iter().all(|s| self.unity_in_product(s)),
            None => self.components.len() == 1,
        }
    }

    /// The support is a subgroup and `1 in R_sigma R_{sigma^-1}` on it.
    pub fn is_first_strong(&self) -> bool {
        let support = self.support();
        let closed = support.iter().all(|&a| {
            self.components.contains_key(&self.group.inverse(a))
                && support.iter().all(|&b| self.components.contains_key(&self.group.op(a, b)))
        });
        closed && support.iter().all(|&s| self.unity_in_product(s))
    }

    /// `R = R_e`.
    pub fn is_trivial(&self) -> bool {
        self.components.len() == 1
    }
}
