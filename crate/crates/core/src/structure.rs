//! The identity component `R_e`, the partition of graded ideals by their
//! trace on `R_e`, the resulting quotient graph, and the explicit
//! correspondence with the intersection graph of `R_e`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::grading::Grading;
use crate::graph::IntersectionGraph;
use crate::ideal::{self, IdealSet};
use crate::limits::Limits;
use crate::ring::{self, FiniteRing};
use crate::Result;

/// `R_e` re-indexed as a ring of its own.
#[derive(Clone, Debug)]
pub struct IdentityComponent {
    ring: Arc<FiniteRing>,
    embedding: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl IdentityComponent {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    /// `embedding()[i]` is the element of `R` behind index `i` of `R_e`.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// Image of a subset of `R_e` in `R`.
    pub fn lift(&self, set: &ElemSet) -> Vec<usize> {
        set.iter().map(|i| self.embedding[i]).collect()
    }

    /// `I cap R_e`, in `R_e` indices.
    pub fn trace(&self, members: &ElemSet) -> ElemSet {
        ElemSet::from_iter(
            self.embedding.len(),
            members.iter().filter_map(|x| self.position[x]),
        )
    }

    /// The left ideal `R I_e` of the parent ring.
    pub fn generate(&self, parent: &FiniteRing, ie: &IdealSet) -> IdealSet {
        ideal::generated_left_ideal(parent, self.lift(ie.members()))
    }
}

pub fn identity_component_ring(g: &Grading) -> Result<IdentityComponent> {
    let (sub, embedding) = ring::subring_on(g.ring(), g.identity_component())?;
    let mut position = vec![None; g.ring().size()];
    for (i, &x) in embedding.iter().enumerate() {
        position[x] = Some(i);
    }
    Ok(IdentityComponent { ring: Arc::new(sub), embedding, position })
}

/// `R_e` together with `I*(R_e)` and `G(R_e)`.
#[derive(Clone, Debug)]
pub struct ComponentView {
    pub re: IdentityComponent,
    pub ideals: Vec<IdealSet>,
    pub graph: IntersectionGraph,
}

pub fn component_view(g: &Grading, limits: &Limits) -> Result<ComponentView> {
    let re = identity_component_ring(g)?;
    let all = ideal::enumerate_left_ideals(re.ring(), limits)?;
    let ideals = ideal::nontrivial_proper(&all);
    let labels = ideals.iter().map(|i| ideal::describe(re.ring(), i, None)).collect();
    let graph = IntersectionGraph::new(&ideals).with_labels(labels);
    Ok(ComponentView { re, ideals, graph })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimClass {
    /// Index of the common trace in `ComponentView::ideals`.
    pub key: usize,
    /// Indices into the graded family.
    pub members: Vec<usize>,
    /// Index of `R I_e` in the graded family, when it is a member of the
    /// family at all.
    pub generated: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct SimPartition {
    pub classes: Vec<SimClass>,
    pub class_of: Vec<usize>,
}

fn e_faithful(g: &Grading) -> Result<()> {
    match g.sigma_faithful_witness(g.identity()) {
        None => Ok(()),
        Some(x) => Err(Error::NotEFaithful {
            witness: format!("R_e-annihilated homogeneous element {}", g.ring().label(x)),
        }),
    }
}

/// Groups the graded family (nontrivial proper graded ideals) by trace on
/// `R_e`.
pub fn sim_partition(g: &Grading, view: &ComponentView, graded: &[IdealSet]) -> Result<SimPartition> {
    e_faithful(g)?;
    let ring = g.ring();
    let mut keys = Vec::with_capacity(graded.len());
    for i in graded {
        let trace = view.re.trace(i.members());
        if trace.len() <= 1 {
            return Err(Error::NotEFaithful {
                witness: format!("{} meets R_e trivially", ideal::describe(ring, i, Some(g))),
            });
        }
        let key = view.ideals.iter().position(|j| *j.members() == trace).ok_or_else(|| Error::IsoViolation {
            detail: format!("trace of {} is not a proper ideal of R_e", ideal::describe(ring, i, Some(g))),
        })?;
        keys.push(key);
    }
    let mut distinct: Vec<usize> = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let classes: Vec<SimClass> = distinct
        .iter()
        .map(|&key| {
            let generated = view.re.generate(ring, &view.ideals[key]);
            SimClass {
                key,
                members: (0..graded.len()).filter(|&i| keys[i] == key).collect(),
                generated: graded.iter().position(|j| *j == generated),
            }
        })
        .collect();
    let class_of = keys.iter().map(|k| distinct.binary_search(k).unwrap()).collect();
    Ok(SimPartition { classes, class_of })
}

impl SimPartition {
    /// A pair inside one class that is not adjacent in `gr`.
    pub fn non_clique_witness(&self, gr: &IntersectionGraph) -> Option<(usize, usize)> {
        self.classes.iter().find_map(|c| {
            c.members.iter().enumerate().find_map(|(i, &a)| {
                c.members[i + 1..].iter().find(|&&b| !gr.adjacent(a, b)).map(|&b| (a, b))
            })
        })
    }

    /// A class not containing `R I_e` for its key `I_e`.
    pub fn missing_generated(&self) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.generated.is_none_or(|gi| !c.members.contains(&gi)))
    }
}

/// The graph on classes; adjacency is read from one representative pair
/// and then confirmed on every pair.
pub fn quotient_graph(p: &SimPartition, view: &ComponentView, gr: &IntersectionGraph) -> Result<IntersectionGraph> {
    let n = p.classes.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (ca, cb) = (&p.classes[a], &p.classes[b]);
            let rep = gr.adjacent(ca.members[0], cb.members[0]);
            for &x in &ca.members {
                for &y in &cb.members {
                    if gr.adjacent(x, y) != rep {
                        return Err(Error::WellDefinednessViolation {
                            detail: format!(
                                "{} and {} disagree with the representatives of their classes",
                                gr.labels()[x],
                                gr.labels()[y]
                            ),
                        });
                    }
                }
            }
            if rep {
                edges.push((a, b));
            }
        }
    }
    let labels = p.classes.iter().map(|c| format!("[{}]", view.graph.labels()[c.key])).collect();
    Ok(IntersectionGraph::from_edges(n, &edges).with_labels(labels))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiVariant {
    /// `I_e -> [R I_e]` onto the quotient graph (e-faithful gradings).
    Classes,
    /// `I_e -> R I_e` onto the graded graph itself (first strong gradings).
    Direct,
}

#[derive(Clone, Debug)]
pub struct PhiReport {
    pub variant: PhiVariant,
    /// `(I_e, image)` by label, in vertex order of `G(R_e)`.
    pub correspondence: Vec<(String, String)>,
    pub source_order: usize,
    pub target_order: usize,
}

/// Verifies that `phi` is a bijection preserving adjacency both ways. A
/// failure is reported as `IsoViolation` with the offending pair.
pub fn phi_iso_check(
    g: &Grading,
    view: &ComponentView,
    graded: &[IdealSet],
    gr: &IntersectionGraph,
    variant: PhiVariant,
) -> Result<PhiReport> {
    let ring = g.ring();
    let (target, partition) = match variant {
        PhiVariant::Classes => {
            let p = sim_partition(g, view, graded)?;
            (quotient_graph(&p, view, gr)?, Some(p))
        }
        PhiVariant::Direct => {
            if !g.is_first_strong() {
                return Err(Error::WrongInstanceKind { theorem: "t56", needs: "a first strong grading" });
            }
            (gr.clone(), None)
        }
    };
    let mut image = Vec::with_capacity(view.ideals.len());
    for (i, ie) in view.ideals.iter().enumerate() {
        let generated = view.re.generate(ring, ie);
        let idx = graded.iter().position(|j| *j == generated).ok_or_else(|| Error::IsoViolation {
            detail: format!("R{} is not a proper nontrivial graded ideal", view.graph.labels()[i]),
        })?;
        image.push(match &partition {
            Some(p) => p.class_of[idx],
            None => idx,
        });
    }
    let mut seen = vec![None; target.order()];
    for (i, &t) in image.iter().enumerate() {
        if let Some(j) = seen[t] {
            return Err(Error::IsoViolation {
                detail: format!(
                    "{} and {} have the same image",
                    view.graph.labels()[j],
                    view.graph.labels()[i]
                ),
            });
        }
        seen[t] = Some(i);
    }
    if let Some(t) = seen.iter().position(|s| s.is_none()) {
        return Err(Error::IsoViolation { detail: format!("{} has no preimage", target.labels()[t]) });
    }
    for a in 0..image.len() {
        for b in a + 1..image.len() {
            if view.graph.adjacent(a, b) != target.adjacent(image[a], image[b]) {
                return Err(Error::IsoViolation {
                    detail: format!(
                        "adjacency of {} and {} is not preserved",
                        view.graph.labels()[a],
                        view.graph.labels()[b]
                    ),
                });
            }
        }
    }
    let correspondence = image
        .iter()
        .enumerate()
        .map(|(i, &t)| (view.graph.labels()[i].clone(), target.labels()[t].clone()))
        .collect();
    Ok(PhiReport { variant, correspondence, source_order: view.ideals.len(), target_order: target.order() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub gamma_re: usize,
    pub gamma_gr: usize,
    pub omega_gr: usize,
    /// Largest total class size over cliques of `G(R_e)`.
    pub omega_formula: usize,
    /// A clique of `G(R_e)` attaining it, by label.
    pub best_clique: Vec<String>,
}

impl TransferReport {
    pub fn holds(&self) -> bool {
        self.gamma_re == self.gamma_gr && self.omega_gr == self.omega_formula
    }
}

pub fn gamma_omega_transfer(
    g: &Grading,
    view: &ComponentView,
    graded: &[IdealSet],
    gr: &IntersectionGraph,
    limits: &Limits,
) -> Result<TransferReport> {
    let p = sim_partition(g, view, graded)?;
    let mut weights = vec![0; view.ideals.len()];
    for c in &p.classes {
        weights[c.key] = c.members.len();
    }
    let (omega_formula, clique) = view.graph.max_weight_clique(&weights, limits)?;
    Ok(TransferReport {
        gamma_re: view.graph.domination_number(limits)?,
        gamma_gr: gr.domination_number(limits)?,
        omega_gr: gr.clique_number(limits)?,
        omega_formula,
        best_clique: clique.iter().map(|&v| view.graph.labels()[v].clone()).collect(),
    })
}

/// A left ideal that is a ring with its own unity (a direct factor), with
/// the grading it inherits. Fails when the ideal has no unity.
pub fn ideal_as_graded_ring(g: &Grading, ideal: &IdealSet) -> Result<Grading> {
    let ring = g.ring();
    let embedding: Vec<usize> = ideal.members().iter().collect();
    let mut position = vec![usize::MAX; ring.size()];
    for (i, &x) in embedding.iter().enumerate() {
        position[x] = i;
    }
    let k = embedding.len();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &a in &embedding {
        for &b in &embedding {
            let (s, p) = (position[ring.add(a, b)], position[ring.mul(a, b)]);
            if s == usize::MAX || p == usize::MAX {
                return Err(Error::NotASubring { reason: format!("{} is not closed", ideal::describe(ring, ideal, Some(g))) });
            }
            add.push(s);
            mul.push(p);
        }
    }
    let labels = embedding.iter().map(|&x| String::from(ring.label(x))).collect();
    let description = format!("{} as a ring", ideal::describe(ring, ideal, Some(g)));
    let sub = FiniteRing::from_tables(
        add,
        mul,
        labels,
        description,
        crate::ring::Construction::Subring { parent: ring.clone(), embedding: embedding.clone() },
    )?;
    let components = g
        .components()
        .iter()
        .map(|(&d, comp)| (d, ElemSet::from_iter(k, comp.iter().filter_map(|x| Some(position[x]).filter(|&p| p != usize::MAX)))))
        .collect();
    crate::grading::validate_grading(Arc::new(sub), g.group().clone(), components, crate::grading::GradingKind::Explicit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{self, GradeGroup};
    use crate::ring::{FiniteGroup, FiniteModule};

    fn lim() -> Limits {
        Limits::default()
    }

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(ring::make_cyclic_ring(n, &lim()).unwrap())
    }

    fn graded(g: &Grading) -> (Vec<IdealSet>, IntersectionGraph) {
        let fam = ideal::nontrivial_proper(&ideal::enumerate_graded_left_ideals(g, &lim()).unwrap());
        let labels = fam.iter().map(|i| ideal::describe(g.ring(), i, Some(g))).collect();
        let gr = IntersectionGraph::new(&fam).with_labels(labels);
        (fam, gr)
    }

    /// Checks that `emb` carries the tables of `Z_n` (index k = k*1) onto `R_e`.
    fn is_cyclic(re: &FiniteRing, n: usize) -> bool {
        if re.size() != n {
            return false;
        }
        let mut multiple = vec![re.zero()];
        for _ in 1..n {
            multiple.push(re.add(*multiple.last().unwrap(), re.one()));
        }
        (0..n).all(|a| {
            (0..n).all(|b| re.add(multiple[a], multiple[b]) == multiple[(a + b) % n] && re.mul(multiple[a], multiple[b]) == multiple[a * b % n])
        })
    }

    #[test]
    fn identity_components() {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let r = Arc::new(ring::group_ring(&z(4), &c2, &lim()).unwrap());
        let g = grading::group_ring_grading(&r).unwrap();
        assert!(is_cyclic(identity_component_ring(&g).unwrap().ring(), 4));

        let z4 = z(4);
        let m = Arc::new(FiniteModule::self_module(&z4).unwrap());
        let id = Arc::new(ring::idealization(&z4, &m, &lim()).unwrap());
        let gi = grading::idealization_grading(&id).unwrap();
        assert!(is_cyclic(identity_component_ring(&gi).unwrap().ring(), 4));

        let t = grading::trivial_grading(&z(12), GradeGroup::Integers);
        let ic = identity_component_ring(&t).unwrap();
        assert_eq!(ic.embedding(), (0..12).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn trivial_grading_partition() {
        let g = grading::trivial_grading(&z(12), GradeGroup::Integers);
        let view = component_view(&g, &lim()).unwrap();
        let (fam, gr) = graded(&g);
        let p = sim_partition(&g, &view, &fam).unwrap();
        assert_eq!(p.classes.len(), 4);
        assert!(p.classes.iter().all(|c| c.members.len() == 1));
        let q = quotient_graph(&p, &view, &gr).unwrap();
        assert_eq!(q.edges(), gr.edges());
        let phi = phi_iso_check(&g, &view, &fam, &gr, PhiVariant::Classes).unwrap();
        assert!(phi.correspondence.iter().all(|(a, b)| format!("[{a}]") == *b));
        let t = gamma_omega_transfer(&g, &view, &fam, &gr, &lim()).unwrap();
        assert_eq!((t.gamma_re, t.gamma_gr), (1, 1));
        assert!(t.holds());
    }

    #[test]
    fn group_ring_partition() {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let r = Arc::new(ring::group_ring(&z(4), &c2, &lim()).unwrap());
        let g = grading::group_ring_grading(&r).unwrap();
        let view = component_view(&g, &lim()).unwrap();
        let (fam, gr) = graded(&g);
        let p = sim_partition(&g, &view, &fam).unwrap();
        assert_eq!(p.classes.len(), 1);
        assert_eq!(view.graph.labels()[p.classes[0].key], "(2)");
        assert_eq!(p.missing_generated(), None);
        assert_eq!(quotient_graph(&p, &view, &gr).unwrap().order(), 1);
        let phi = phi_iso_check(&g, &view, &fam, &gr, PhiVariant::Direct).unwrap();
        assert_eq!(phi.correspondence, vec![("(2)".into(), "(2)".into())]);
        let t = gamma_omega_transfer(&g, &view, &fam, &gr, &lim()).unwrap();
        assert_eq!((t.gamma_re, t.gamma_gr, t.omega_gr, t.omega_formula), (1, 1, 1, 1));
    }

    #[test]
    fn z2_group_ring_is_empty_on_both_sides() {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let r = Arc::new(ring::group_ring(&z(2), &c2, &lim()).unwrap());
        let g = grading::group_ring_grading(&r).unwrap();
        let view = component_view(&g, &lim()).unwrap();
        let (fam, gr) = graded(&g);
        assert_eq!(fam.len(), 0);
        let phi = phi_iso_check(&g, &view, &fam, &gr, PhiVariant::Direct).unwrap();
        assert_eq!((phi.source_order, phi.target_order), (0, 0));
    }

    #[test]
    fn idealization_is_not_e_faithful() {
        let z4 = z(4);
        let m = Arc::new(FiniteModule::self_module(&z4).unwrap());
        let id = Arc::new(ring::idealization(&z4, &m, &lim()).unwrap());
        let g = grading::idealization_grading(&id).unwrap();
        let view = component_view(&g, &lim()).unwrap();
        let (fam, _) = graded(&g);
        assert!(matches!(sim_partition(&g, &view, &fam), Err(Error::NotEFaithful { .. })));
    }

    #[test]
    fn direct_factors_as_rings() {
        let g = grading::trivial_grading(&z(12), GradeGroup::Integers);
        let fam = ideal::nontrivial_proper(&ideal::enumerate_left_ideals(g.ring(), &lim()).unwrap());
        // (4) = {0,4,8} is Z_3 with unity 4; (2) has no unity.
        let f = ideal_as_graded_ring(&g, &fam[1]).unwrap();
        assert_eq!(f.ring().size(), 3);
        assert_eq!(f.ring().label(f.ring().one()), "4");
        assert!(ideal::is_graded_field(&f));
        assert!(ideal_as_graded_ring(&g, &fam[3]).is_err());
    }

    #[test]
    fn z8_transfer() {
        let g = grading::trivial_grading(&z(8), GradeGroup::Integers);
        let view = component_view(&g, &lim()).unwrap();
        let (fam, gr) = graded(&g);
        let t = gamma_omega_transfer(&g, &view, &fam, &gr, &lim()).unwrap();
        assert_eq!((t.gamma_re, t.gamma_gr, t.omega_gr, t.omega_formula), (1, 1, 2, 2));
    }
}
