//! Gradings by the ordered integers: leading-term ideals and the
//! comparison between the graded and the full intersection graph.
//!
//! A finite ring has finite support, so the support is well ordered and
//! every nonzero element has a component of highest degree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::grading::Grading;
use crate::graph::{Extended, IntersectionGraph};
use crate::ideal::{self, IdealSet};
use crate::Result;

#[derive(Clone, Debug)]
pub struct LeadingIdealResult {
    pub source: IdealSet,
    pub leading: IdealSet,
    /// `(x, top component of x)` for every nonzero member `x`.
    pub generator_trace: Vec<(usize, usize)>,
}

fn integer_graded(g: &Grading) -> Result<()> {
    if g.group().is_integers() {
        Ok(())
    } else {
        Err(Error::NotIntegerGraded)
    }
}

/// The graded left ideal generated by the highest-degree components of the
/// members of `i`.
pub fn leading_ideal(g: &Grading, i: &IdealSet) -> Result<LeadingIdealResult> {
    integer_graded(g)?;
    let generator_trace: Vec<(usize, usize)> = i
        .members()
        .iter()
        .filter_map(|x| g.decompose(x).last().map(|&(_, top)| (x, top)))
        .collect();
    let leading = ideal::generated_left_ideal(g.ring(), generator_trace.iter().map(|&(_, t)| t)).with_graded(true);
    Ok(LeadingIdealResult { source: i.clone(), leading, generator_trace })
}

/// One statement checked over every instance it applies to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub instances: usize,
    pub witness: Option<String>,
}

impl Clause {
    fn new(name: &'static str) -> Self {
        Clause { name, instances: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// The four parts of the leading-ideal lemma plus idempotence of `~`,
/// checked over `all` (every left ideal, `{0}` and `R` included).
pub fn lemma_ll_check(g: &Grading, all: &[IdealSet]) -> Result<Vec<Clause>> {
    integer_graded(g)?;
    let ring = g.ring();
    let name = |i: &IdealSet| ideal::describe(ring, i, None);
    let tilde: Vec<IdealSet> = all.iter().map(|i| leading_ideal(g, i).map(|r| r.leading)).collect::<Result<_>>()?;
    let mut c1 = Clause::new("I = I~ iff I is graded");
    let mut c2 = Clause::new("I~ = 0 iff I = 0");
    let mut c3 = Clause::new("I in J implies I~ in J~");
    let mut c4 = Clause::new("for I in J: I = J iff I~ = J~");
    let mut idem = Clause::new("(I~)~ = I~");
    for (i, a) in all.iter().enumerate() {
        let graded = ideal::is_graded(g, a.members());
        c1.record((*a == tilde[i]) == graded, || format!("{} (graded: {graded})", name(a)));
        c2.record(tilde[i].is_zero() == a.is_zero(), || name(a));
        let again = leading_ideal(g, &tilde[i])?.leading;
        idem.record(again == tilde[i], || name(a));
        for (j, b) in all.iter().enumerate() {
            if i == j || !a.is_subset(b) {
                continue;
            }
            c3.record(tilde[i].is_subset(&tilde[j]), || format!("{} in {}", name(a), name(b)));
            c4.record(tilde[i] != tilde[j], || format!("{} in {}", name(a), name(b)));
        }
    }
    Ok(vec![c1, c2, c3, c4, idem])
}

/// Number of maximal chains `{0} = I_0 < I_1 < ... < I_k = R` of left
/// ideals, keyed by the number of terms `k + 1`.
pub fn chain_length_distribution(all: &[IdealSet]) -> BTreeMap<usize, usize> {
    let n = all.len();
    let covers: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    j != i
                        && all[i].is_subset(&all[j])
                        && !(0..n).any(|k| k != i && k != j && all[i].is_subset(&all[k]) && all[k].is_subset(&all[j]))
                })
                .collect()
        })
        .collect();
    // Ideals are sorted by size, so walking backwards visits covers first.
    let mut dist: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for i in (0..n).rev() {
        if all[i].is_whole() {
            dist[i].insert(1, 1);
            continue;
        }
        let mut acc = BTreeMap::new();
        for &j in &covers[i] {
            for (&len, &count) in &dist[j] {
                *acc.entry(len + 1).or_insert(0) += count;
            }
        }
        dist[i] = acc;
    }
    all.iter().position(|i| i.is_zero()).map(|z| dist[z].clone()).unwrap_or_default()
}

#[derive(Clone, Debug)]
pub struct R545Report {
    pub graded_maximal: String,
    pub clauses: Vec<Clause>,
    pub chain_lengths: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug)]
pub struct OrderedReport {
    pub graded_connected: bool,
    pub full_connected: bool,
    pub local: bool,
    pub graded_girth: Extended,
    pub full_girth: Extended,
    /// Present when the graded girth is infinite and the full girth is 3.
    pub r545: Option<R545Report>,
}

impl OrderedReport {
    pub fn connectivity_agrees(&self) -> bool {
        self.graded_connected == self.full_connected
    }

    /// `None` when the ring is not local.
    pub fn girth_agrees(&self) -> Option<bool> {
        self.local.then_some(self.graded_girth == self.full_girth)
    }
}

/// Compares `Gr` (on the nontrivial proper graded ideals) with `G` (on all
/// nontrivial proper left ideals). `all` lists every left ideal.
pub fn ordered_comparison_check(
    g: &Grading,
    all: &[IdealSet],
    gr: &IntersectionGraph,
    full: &IntersectionGraph,
) -> Result<OrderedReport> {
    integer_graded(g)?;
    let ring = g.ring();
    let proper = ideal::nontrivial_proper(all);
    let maximal = ideal::maximal_members(&proper);
    let local = maximal.len() <= 1;
    let graded_girth = gr.girth();
    let full_girth = full.girth();
    let r545 = if graded_girth == Extended::Infinite && full_girth == Extended::Finite(3) {
        let graded: Vec<IdealSet> = proper.iter().filter(|i| ideal::is_graded(g, i.members())).cloned().collect();
        let graded_max = ideal::maximal_members(&graded);
        let m = match graded_max.as_slice() {
            [m] => m.clone(),
            _ => IdealSet::new(crate::bitset::ElemSet::singleton(ring.size(), ring.zero())),
        };
        let mut c1 = Clause::new("M is maximal among all proper left ideals");
        c1.record(graded_max.len() == 1 && ideal::is_maximal(&m, &proper), || ideal::describe(ring, &m, Some(g)));
        let mut c2 = Clause::new("K~ = M for every maximal left ideal K");
        for k in &maximal {
            let lk = leading_ideal(g, k)?.leading;
            c2.record(lk == m, || format!("{}~ = {}", ideal::describe(ring, k, None), ideal::describe(ring, &lk, Some(g))));
        }
        let chain_lengths = chain_length_distribution(all);
        let mut c3 = Clause::new("every maximal chain of left ideals has four terms");
        for (&len, &count) in &chain_lengths {
            for _ in 0..count {
                c3.record(len == 4, || format!("a chain with {len} terms"));
            }
        }
        Some(R545Report { graded_maximal: ideal::describe(ring, &m, Some(g)), clauses: vec![c1, c2, c3], chain_lengths })
    } else {
        None
    };
    Ok(OrderedReport {
        graded_connected: gr.is_connected(),
        full_connected: full.is_connected(),
        local,
        graded_girth,
        full_girth,
        r545,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{self, Degree, GradeGroup};
    use crate::limits::Limits;
    use crate::ring::{self, FiniteRing};
    use alloc::sync::Arc;

    fn lim() -> Limits {
        Limits::default()
    }

    fn z2() -> Arc<FiniteRing> {
        Arc::new(ring::make_cyclic_ring(2, &lim()).unwrap())
    }

    fn truncated(k: usize) -> Grading {
        let mut modulus = vec![0; k + 1];
        modulus[k] = 1;
        let r = Arc::new(ring::polynomial_quotient(&z2(), &modulus, &lim()).unwrap());
        grading::poly_quotient_integer_grading(&r).unwrap()
    }

    fn square_zero() -> Grading {
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
        let r = Arc::new(ring::algebra_over_zn(2, 3, &table, Some(vec!["1".into(), "x".into(), "y".into()]), &lim()).unwrap());
        grading::grading_from_generators(&r, GradeGroup::Integers, &[(Degree(0), vec![1]), (Degree(1), vec![2]), (Degree(2), vec![4])]).unwrap()
    }

    fn graphs(g: &Grading) -> (Vec<IdealSet>, IntersectionGraph, IntersectionGraph) {
        let all = ideal::enumerate_left_ideals(g.ring(), &lim()).unwrap();
        let proper = ideal::nontrivial_proper(&all);
        let graded: Vec<IdealSet> = proper.iter().filter(|i| ideal::is_graded(g, i.members())).cloned().collect();
        (all, IntersectionGraph::new(&graded), IntersectionGraph::new(&proper))
    }

    #[test]
    fn leading_ideal_examples() {
        let g = square_zero();
        let r = g.ring();
        let xy = ideal::generated_left_ideal(r, [r.element("x+y").unwrap()]);
        let lead = leading_ideal(&g, &xy).unwrap();
        assert_eq!(ideal::describe(r, &lead.leading, Some(&g)), "(y)");
        assert_eq!(lead.generator_trace, vec![(r.element("x+y").unwrap(), r.element("y").unwrap())]);
        let zero = ideal::generated_left_ideal(r, []);
        assert!(leading_ideal(&g, &zero).unwrap().leading.is_zero());

        let t = truncated(3);
        let x = ideal::generated_left_ideal(t.ring(), [t.ring().element("x").unwrap()]);
        assert_eq!(leading_ideal(&t, &x).unwrap().leading, x);
    }

    #[test]
    fn needs_integer_grading() {
        let g = grading::trivial_grading(&z2(), GradeGroup::Finite(Arc::new(ring::FiniteGroup::cyclic(2).unwrap())));
        assert!(matches!(leading_ideal(&g, &ideal::generated_left_ideal(g.ring(), [])), Err(Error::NotIntegerGraded)));
    }

    #[test]
    fn lemma_holds_on_examples() {
        for g in [truncated(3), truncated(4), square_zero()] {
            let all = ideal::enumerate_left_ideals(g.ring(), &lim()).unwrap();
            for c in lemma_ll_check(&g, &all).unwrap() {
                assert!(c.holds(), "{}: {:?}", c.name, c.witness);
            }
        }
    }

    #[test]
    fn comparisons() {
        let g = truncated(3);
        let (all, gr, full) = graphs(&g);
        let rep = ordered_comparison_check(&g, &all, &gr, &full).unwrap();
        assert!(rep.connectivity_agrees() && rep.local);
        assert_eq!((rep.graded_girth, rep.girth_agrees()), (Extended::Infinite, Some(true)));
        assert!(rep.r545.is_none());

        let g = truncated(4);
        let (all, gr, full) = graphs(&g);
        let rep = ordered_comparison_check(&g, &all, &gr, &full).unwrap();
        assert_eq!((rep.graded_girth, rep.full_girth), (Extended::Finite(3), Extended::Finite(3)));

        let g = square_zero();
        let (all, gr, full) = graphs(&g);
        let rep = ordered_comparison_check(&g, &all, &gr, &full).unwrap();
        assert_eq!((rep.graded_girth, rep.full_girth), (Extended::Infinite, Extended::Infinite));
        assert!(rep.r545.is_none());
    }

    #[test]
    fn chain_lengths() {
        let all = ideal::enumerate_left_ideals(square_zero().ring(), &lim()).unwrap();
        let d = chain_length_distribution(&all);
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(4, 3)]);
        let z12 = ring::make_cyclic_ring(12, &lim()).unwrap();
        let all = ideal::enumerate_left_ideals(&z12, &lim()).unwrap();
        // 0<(6)<(2)<R, 0<(6)<(3)<R, 0<(4)<(2)<R
        assert_eq!(chain_length_distribution(&all).into_iter().collect::<Vec<_>>(), vec![(4, 3)]);
    }
}
