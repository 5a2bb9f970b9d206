//! Every registered statement as a hypothesis / conclusion pair evaluated
//! exhaustively on one graded ring.
//!
//! A check reports PASS when its hypotheses hold and its conclusion was
//! verified, VACUOUS when the hypotheses fail, FAIL with a witness when the
//! conclusion fails, and SKIPPED when the instance is of the wrong kind.
//! Equivalences are split into one part per direction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::grading::{self, Degree, GradeGroup, Grading, GradingKind};
use crate::graph::{Extended, GraphInvariants, IntersectionGraph};
use crate::ideal::{self, IdealSet};
use crate::limits::Limits;
use crate::ordered;
use crate::planarity::Planarity;
use crate::ring::{Construction, FiniteModule, FiniteRing, ModuleKind};
use crate::structure::{self, ComponentView, PhiVariant};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "UPPERCASE"))]
pub enum Verdict {
    Pass,
    Vacuous,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Vacuous => "VACUOUS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Part {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    pub verdict: Verdict,
    pub hypotheses: String,
    pub conclusion: String,
    pub parts: Vec<Part>,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

/// Which instances a check applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applies {
    Any,
    /// `R(+)M` with its canonical two-component grading.
    Idealization,
    /// `R(+)R` with its canonical grading.
    SelfIdealization,
    /// `R[G]` graded by group elements.
    GroupRing,
    /// Gradings by the ordered integers.
    Ordered,
}

impl Applies {
    fn needs(self) -> &'static str {
        match self {
            Applies::Any => "any instance",
            Applies::Idealization => "an idealization with its canonical grading",
            Applies::SelfIdealization => "an idealization R(+)R with its canonical grading",
            Applies::GroupRing => "a group ring with its canonical grading",
            Applies::Ordered => "a grading by the ordered integers",
        }
    }
}

pub struct TheoremInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub applies: Applies,
    check: fn(&Analysis) -> Result<Outcome>,
}

impl fmt::Debug for TheoremInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TheoremInfo({})", self.id)
    }
}

macro_rules! entry {
    ($id:literal, $applies:ident, $check:ident, $statement:literal) => {
        TheoremInfo { id: $id, statement: $statement, applies: Applies::$applies, check: $check }
    };
}

/// Every registered check, in report order.
pub static REGISTRY: &[TheoremInfo] = &[
    entry!("lemmaB", Any, lemma_b, "sums and intersections of graded left ideals are graded"),
    entry!("r1", Any, r1, "graded minimal iff N(I) = {A : I < A}; isolated iff minimal and maximal; essential iff N(I) is everything else"),
    entry!("t1", Any, t1, "Gr disconnected iff Gr = N_n with n >= 2"),
    entry!("c1", Any, c1, "Gr disconnected => >= 2 graded minimal ideals, each vertex principal, minimal and maximal"),
    entry!("c11", Any, c11, "R commutative: Gr disconnected iff R = R1 x R2 with graded fields R1, R2"),
    entry!("c101", Any, c101, "R commutative, Gr connected => graded maximal ideals meet pairwise"),
    entry!("t2", Any, t2, "Gr connected => diam(Gr) <= 2"),
    entry!("t51", Any, t51, "R commutative: graded domain iff graded reduced and Gr complete"),
    entry!("t52", Any, t52, "Gr has an edge: regular => unique graded minimal => complete => regular"),
    entry!("t6", Any, t6, "R commutative: gamma(Gr) <= 2; indecomposable => gamma = 1; R = S x T: gamma = 2 iff no factor has gamma 1"),
    entry!("l18", Any, l18, "finite clique number => graded chains are finite (bounded by omega)"),
    entry!("l187", Any, l187, "R commutative: omega = 1 iff Gr in {N_1, N_2}; 1 < omega => graded maximal ideals form a clique"),
    entry!("t3", Any, t3, "girth(Gr) in {3, inf}"),
    entry!("t4", Any, t4, "Gr not N_n (n >= 2), girth inf => graded local star centred at M; M principal => K_1 or K_2; 2 generators => M^2 = 0"),
    entry!("t100", Any, t100, "|I*(R_e)| >= 2, G(R_e) connected => Gr and G(R) connected"),
    entry!("lemma51", Any, lemma51, "sigma-faithful iff every nonzero graded ideal meets R_sigma"),
    entry!("t1001", Any, t1001, "e-faithful => I_e -> [R I_e] is an isomorphism G(R_e) -> Gr_e(R)"),
    entry!("conn_equiv", Any, conn_equiv, "e-faithful: G(R_e) connected iff Gr connected"),
    entry!("field_product_cor", Any, field_product_cor, "e-faithful, commutative: R_e a product of two fields iff R a product of two graded fields"),
    entry!("gamma_eq", Any, gamma_eq, "e-faithful => gamma(G(R_e)) = gamma(Gr)"),
    entry!("omega_formula", Any, omega_formula, "e-faithful => omega(Gr) = max over cliques C of G(R_e) of sum |[R I_e]|"),
    entry!("lemma_l0", Any, lemma_l0, "first strong => every graded ideal I equals R (I cap R_e)"),
    entry!("t56", Any, t56, "first strong => I_e -> R I_e is an isomorphism G(R_e) -> Gr"),
    entry!("group_ring_example", GroupRing, group_ring_example, "R[G] is strongly graded and Gr(R[G]) = G(R)"),
    entry!("lemma17", Idealization, lemma17, "graded ideals of R(+)M are exactly I(+)N with IM in N; intersections are componentwise"),
    entry!("t777", Idealization, t777, "Gr(R(+)M) edgeless iff R field and M simple; girth 3 under each of three conditions"),
    entry!("t777_cor", SelfIdealization, t777_cor, "Gr(R(+)R) has an edge iff R is not a field iff girth 3"),
    entry!("t231", SelfIdealization, t231, "omega(Gr(R(+)R)) >= 1 + 2 omega(G(R)) + |G(R)|, equality iff G(R) null"),
    entry!("planarity_cor", SelfIdealization, planarity_cor, "Gr(R(+)R) planar iff R has at most one nontrivial proper ideal"),
    entry!("lemma_ll", Ordered, lemma_ll, "leading ideals: fixed points are graded, zero only for zero, monotone, injective on chains"),
    entry!("t543", Ordered, t543, "well-ordered support: Gr connected iff G(R) connected"),
    entry!("t544", Ordered, t544, "well-ordered support, R local => girth(Gr) = girth(G(R))"),
    entry!("r545", Ordered, r545, "girth(Gr) = inf, girth(G(R)) = 3 => M maximal overall, K~ = M for maximal K, maximal chains have four terms"),
];

pub fn registry_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|t| t.id)
}

pub fn lookup(id: &str) -> Option<&'static TheoremInfo> {
    REGISTRY.iter().find(|t| t.id == id)
}

/// Everything the checks share: both ideal families and both graphs, with
/// the expensive extras computed on first use.
pub struct Analysis {
    grading: Grading,
    limits: Limits,
    all: Vec<IdealSet>,
    graded: Vec<IdealSet>,
    all_proper: Vec<IdealSet>,
    graded_proper: Vec<IdealSet>,
    full_graph: IntersectionGraph,
    graded_graph: IntersectionGraph,
    graded_invariants: OnceCell<Result<GraphInvariants>>,
    view: OnceCell<Result<ComponentView>>,
}

impl fmt::Debug for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Analysis({})", self.grading.ring().description())
    }
}

impl Analysis {
    pub fn new(grading: Grading, limits: Limits) -> Result<Self> {
        let ring = grading.ring().clone();
        let all = ideal::mark_graded(&grading, ideal::enumerate_left_ideals(&ring, &limits)?);
        let graded = ideal::enumerate_graded_left_ideals(&grading, &limits)?;
        let all_proper = ideal::nontrivial_proper(&all);
        let graded_proper = ideal::nontrivial_proper(&graded);
        let full_labels = all_proper.iter().map(|i| ideal::describe(&ring, i, None)).collect();
        let graded_labels = graded_proper.iter().map(|i| ideal::describe(&ring, i, Some(&grading))).collect();
        let full_graph = IntersectionGraph::new(&all_proper).with_labels(full_labels);
        let graded_graph = IntersectionGraph::new(&graded_proper).with_labels(graded_labels);
        Ok(Analysis {
            grading,
            limits,
            all,
            graded,
            all_proper,
            graded_proper,
            full_graph,
            graded_graph,
            graded_invariants: OnceCell::new(),
            view: OnceCell::new(),
        })
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.grading.ring()
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Every left ideal, `{0}` and `R` included, flagged graded or not.
    pub fn all_ideals(&self) -> &[IdealSet] {
        &self.all
    }

    /// Every graded left ideal, `{0}` and `R` included.
    pub fn graded_ideals(&self) -> &[IdealSet] {
        &self.graded
    }

    pub fn proper_ideals(&self) -> &[IdealSet] {
        &self.all_proper
    }

    pub fn graded_proper_ideals(&self) -> &[IdealSet] {
        &self.graded_proper
    }

    /// `G(R)`.
    pub fn full_graph(&self) -> &IntersectionGraph {
        &self.full_graph
    }

    /// `Gr_G(R)`.
    pub fn graded_graph(&self) -> &IntersectionGraph {
        &self.graded_graph
    }

    pub fn graded_invariants(&self) -> Result<&GraphInvariants> {
        self.graded_invariants
            .get_or_init(|| self.graded_graph.invariants(&self.limits))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `R_e`, `I*(R_e)` and `G(R_e)`.
    pub fn component_view(&self) -> Result<&ComponentView> {
        self.view
            .get_or_init(|| structure::component_view(&self.grading, &self.limits))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn label(&self, i: &IdealSet) -> String {
        ideal::describe(self.ring(), i, Some(&self.grading))
    }

    fn e_faithful(&self) -> bool {
        self.grading.is_sigma_faithful(self.grading.identity())
    }

    fn idealization_parts(&self) -> Option<(&Arc<FiniteRing>, &Arc<FiniteModule>)> {
        match self.ring().construction() {
            Construction::Idealization { base, module } if self.grading.kind() == GradingKind::Idealization => {
                Some((base, module))
            }
            _ => None,
        }
    }

    pub fn applies(&self, a: Applies) -> bool {
        match a {
            Applies::Any => true,
            Applies::Idealization => self.idealization_parts().is_some(),
            Applies::SelfIdealization => {
                self.idealization_parts().is_some_and(|(_, m)| m.kind() == ModuleKind::SelfModule)
            }
            Applies::GroupRing => {
                matches!(self.ring().construction(), Construction::GroupRing { .. })
                    && self.grading.kind() == GradingKind::GroupRing
            }
            Applies::Ordered => self.grading.group().is_integers(),
        }
    }
}

/// Evaluate one registered check.
pub fn run_check(id: &str, a: &Analysis) -> Result<TheoremReport> {
    let info = lookup(id).ok_or_else(|| Error::UnknownTheorem(id.into()))?;
    if !a.applies(info.applies) {
        return Err(Error::WrongInstanceKind { theorem: info.id, needs: info.applies.needs() });
    }
    Ok(evaluate(info, a))
}

/// Every check in registry order; checks of the wrong kind are SKIPPED.
pub fn run_all(a: &Analysis) -> Vec<TheoremReport> {
    REGISTRY
        .iter()
        .map(|info| {
            if a.applies(info.applies) {
                evaluate(info, a)
            } else {
                TheoremReport {
                    id: info.id.into(),
                    statement: info.statement.into(),
                    verdict: Verdict::Skipped,
                    hypotheses: format!("needs {}", info.applies.needs()),
                    conclusion: String::new(),
                    parts: Vec::new(),
                    witness: None,
                    notes: Vec::new(),
                }
            }
        })
        .collect()
}

fn evaluate(info: &TheoremInfo, a: &Analysis) -> TheoremReport {
    let outcome = (info.check)(a).unwrap_or_else(|e| {
        let mut o = Outcome::new("evaluation aborted");
        o.claim("evaluation", false, e.to_string());
        o
    });
    let verdict = if outcome.parts.iter().any(|p| p.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if outcome.settled || outcome.parts.iter().any(|p| p.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Vacuous
    };
    let witness = outcome
        .parts
        .iter()
        .find(|p| p.verdict == Verdict::Fail)
        .map(|p| format!("{}: {}", p.name, p.detail));
    let conclusion = outcome
        .parts
        .iter()
        .map(|p| format!("{} {}", p.name, p.verdict))
        .collect::<Vec<_>>()
        .join("; ");
    TheoremReport {
        id: info.id.into(),
        statement: info.statement.into(),
        verdict,
        hypotheses: outcome.hypotheses,
        conclusion,
        parts: outcome.parts,
        witness,
        notes: outcome.notes,
    }
}

struct Outcome {
    hypotheses: String,
    parts: Vec<Part>,
    notes: Vec<String>,
    /// An equivalence was confirmed even if both of its directions were
    /// vacuous on their own.
    settled: bool,
}

impl Outcome {
    fn new(hypotheses: impl Into<String>) -> Self {
        Outcome { hypotheses: hypotheses.into(), parts: Vec::new(), notes: Vec::new(), settled: false }
    }

    fn push(&mut self, name: &str, verdict: Verdict, detail: String) {
        self.parts.push(Part { name: name.into(), verdict, detail });
    }

    /// An unconditional statement.
    fn claim(&mut self, name: &str, ok: bool, detail: String) {
        self.push(name, if ok { Verdict::Pass } else { Verdict::Fail }, detail);
    }

    /// `hyp => conclusion`; the conclusion is only evaluated when needed.
    fn implies(&mut self, name: &str, hyp: bool, conclusion: impl FnOnce() -> Result<(bool, String)>) -> Result<()> {
        if hyp {
            let (ok, detail) = conclusion()?;
            self.claim(name, ok, detail);
        } else {
            self.push(name, Verdict::Vacuous, "hypothesis not met".into());
        }
        Ok(())
    }

    /// Both directions of `lhs <=> rhs` on one instance.
    fn iff(&mut self, name: &str, lhs: bool, rhs: bool, detail: String) {
        self.settled |= lhs == rhs;
        self.implies(&format!("{name} (=>)"), lhs, || Ok((rhs, detail.clone()))).unwrap();
        self.implies(&format!("{name} (<=)"), rhs, || Ok((lhs, detail.clone()))).unwrap();
    }

    /// Both directions of `lhs <=> rhs` over many cases `(lhs, rhs, name)`.
    fn iff_over(&mut self, name: &str, cases: impl IntoIterator<Item = (bool, bool, String)>) {
        let cases: Vec<(bool, bool, String)> = cases.into_iter().collect();
        self.settled |= !cases.is_empty() && cases.iter().all(|c| c.0 == c.1);
        for (dir, pick) in [("=>", 0), ("<=", 1)] {
            let relevant: Vec<&(bool, bool, String)> =
                cases.iter().filter(|c| if pick == 0 { c.0 } else { c.1 }).collect();
            let part = format!("{name} ({dir})");
            if relevant.is_empty() {
                self.push(&part, Verdict::Vacuous, "no case meets the hypothesis".into());
            } else if let Some(bad) = relevant.iter().find(|c| if pick == 0 { !c.1 } else { !c.0 }) {
                self.push(&part, Verdict::Fail, bad.2.clone());
            } else {
                self.push(&part, Verdict::Pass, format!("{} case(s)", relevant.len()));
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

// ---------------------------------------------------------------------------
// Shared helpers

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn neighbourhood(gr: &IntersectionGraph, v: usize) -> ElemSet {
    gr.neighbours(v).clone()
}

/// Pairs `(I, J)` of the family with `I + J = R` and `I cap J = 0`.
fn complementary_pairs(ring: &FiniteRing, family: &[IdealSet]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate().skip(i + 1) {
            if a.len() * b.len() == ring.size() && !a.meets(b) && ideal::ideal_sum(ring, a, b).is_whole() {
                out.push((i, j));
            }
        }
    }
    out
}

/// Graded-field factorisations `R = I x J` inside `family`.
fn field_factorisation(g: &Grading, family: &[IdealSet]) -> Result<Option<(usize, usize)>> {
    for (i, j) in complementary_pairs(g.ring(), family) {
        let fi = structure::ideal_as_graded_ring(g, &family[i])?;
        let fj = structure::ideal_as_graded_ring(g, &family[j])?;
        if ideal::is_graded_field(&fi) && ideal::is_graded_field(&fj) {
            return Ok(Some((i, j)));
        }
    }
    Ok(None)
}

/// `Gr` of a graded ring given on its own.
fn graded_graph_of(g: &Grading, limits: &Limits) -> Result<IntersectionGraph> {
    let fam = ideal::nontrivial_proper(&ideal::enumerate_graded_left_ideals(g, limits)?);
    Ok(IntersectionGraph::new(&fam))
}

fn is_field(ring: &FiniteRing) -> bool {
    ring.is_commutative() && ring.elements().all(|x| x == ring.zero() || ring.is_unit(x))
}

// ---------------------------------------------------------------------------
// Connectivity and shape

fn lemma_b(a: &Analysis) -> Result<Outcome> {
    let mut o = Outcome::new(format!("{} graded left ideals", a.graded.len()));
    let ring = a.ring();
    let mut bad = None;
    let mut pairs = 0;
    'outer: for (i, x) in a.graded.iter().enumerate() {
        for y in &a.graded[i + 1..] {
            pairs += 1;
            let s = ideal::ideal_sum(ring, x, y);
            let t = ideal::ideal_intersect(x, y);
            if !ideal::is_graded(&a.grading, s.members()) || !ideal::is_graded(&a.grading, t.members()) {
                bad = Some(format!("{} and {}", a.label(x), a.label(y)));
                break 'outer;
            }
        }
    }
    let ok = bad.is_none();
    o.claim("I + J and I cap J graded", ok, bad.unwrap_or_else(|| format!("{pairs} pairs")));
    Ok(o)
}

fn r1(a: &Analysis) -> Result<Outcome> {
    let gr = &a.graded_graph;
    let fam = &a.graded_proper;
    let n = fam.len();
    let mut o = Outcome::new(format!("{n} vertices"));
    let label = |v: usize| gr.labels()[v].clone();
    o.iff_over(
        "minimal iff N(I) = strict supersets",
        (0..n).map(|v| {
            let above = ElemSet::from_iter(n, (0..n).filter(|&w| w != v && fam[v].is_subset(&fam[w])));
            (ideal::is_minimal(&fam[v], fam), neighbourhood(gr, v) == above, label(v))
        }),
    );
    o.iff_over(
        "isolated iff minimal and maximal",
        (0..n).map(|v| {
            (gr.degree(v) == 0, ideal::is_minimal(&fam[v], fam) && ideal::is_maximal(&fam[v], fam), label(v))
        }),
    );
    o.iff_over(
        "essential iff adjacent to all others",
        (0..n).map(|v| (ideal::is_essential(&fam[v], fam), gr.degree(v) == n - 1, label(v))),
    );
    Ok(o)
}

fn t1(a: &Analysis) -> Result<Outcome> {
    let gr = &a.graded_graph;
    let disconnected = !gr.is_connected();
    let null2 = gr.order() >= 2 && gr.size() == 0;
    let mut o = Outcome::new(format!("order {}, disconnected: {}", gr.order(), yes(disconnected)));
    o.iff("disconnected iff N_n, n >= 2", disconnected, null2, format!("order {}, size {}", gr.order(), gr.size()));
    Ok(o)
}

fn c1(a: &Analysis) -> Result<Outcome> {
    let gr = &a.graded_graph;
    let fam = &a.graded_proper;
    let ring = a.ring();
    let disconnected = !gr.is_connected();
    let mut o = Outcome::new(format!("Gr disconnected: {}", yes(disconnected)));
    o.implies("at least two graded minimal ideals", disconnected, || {
        let k = ideal::minimal_members(fam).len();
        Ok((k >= 2, format!("{k} minimal")))
    })?;
    o.implies("every vertex principal, minimal and maximal", disconnected, || {
        let bad = fam.iter().find(|i| {
            let principal = i.members().iter().any(|x| ideal::principal_left_ideal(ring, x) == *i.members());
            !(principal && ideal::is_minimal(i, fam) && ideal::is_maximal(i, fam))
        });
        Ok(match bad {
            Some(i) => (false, a.label(i)),
            None => (true, format!("{} vertices", fam.len())),
        })
    })?;
    Ok(o)
}

fn c11(a: &Analysis) -> Result<Outcome> {
    let commutative = a.ring().is_commutative();
    let mut o = Outcome::new(format!("commutative: {}", yes(commutative)));
    if !commutative {
        o.push("Gr disconnected iff product of two graded fields", Verdict::Vacuous, "ring not commutative".into());
        return Ok(o);
    }
    let disconnected = !a.graded_graph.is_connected();
    let split = field_factorisation(&a.grading, &a.graded_proper)?;
    let detail = match split {
        Some((i, j)) => format!("R = {} x {}", a.label(&a.graded_proper[i]), a.label(&a.graded_proper[j])),
        None => "no graded-field factorisation".into(),
    };
    o.iff("Gr disconnected iff product of two graded fields", disconnected, split.is_some(), detail);
    Ok(o)
}

fn c101(a: &Analysis) -> Result<Outcome> {
    let fam = &a.graded_proper;
    let maximal = ideal::maximal_members(fam);
    let hyp = a.ring().is_commutative() && a.graded_graph.is_connected() && maximal.len() >= 2;
    let mut o = Outcome::new(format!(
        "commutative: {}, connected: {}, graded maximal ideals: {}",
        yes(a.ring().is_commutative()),
        yes(a.graded_graph.is_connected()),
        maximal.len()
    ));
    o.implies("graded maximal ideals meet pairwise", hyp, || {
        for (i, x) in maximal.iter().enumerate() {
            for y in &maximal[i + 1..] {
                if !x.meets(y) {
                    return Ok((false, format!("{} cap {} = 0", a.label(x), a.label(y))));
                }
            }
        }
        Ok((true, format!("{} maximal ideals", maximal.len())))
    })?;
    Ok(o)
}

fn t2(a: &Analysis) -> Result<Outcome> {
    let gr = &a.graded_graph;
    let connected = gr.is_connected();
    let mut o = Outcome::new(format!("connected: {}, order {}", yes(connected), gr.order()));
    o.implies("diam <= 2", connected, || {
        let d = gr.diameter();
        Ok((d <= Extended::Finite(2), format!("diam = {d}")))
    })?;
    Ok(o)
}

fn t51(a: &Analysis) -> Result<Outcome> {
    let g = &a.grading;
    let commutative = a.ring().is_commutative();
    let mut o = Outcome::new(format!("commutative: {}", yes(commutative)));
    if !commutative {
        o.push("graded domain iff reduced and complete", Verdict::Vacuous, "ring not commutative".into());
        return Ok(o);
    }
    let domain = ideal::is_graded_domain(g);
    let reduced = ideal::is_graded_reduced(g);
    let complete = a.graded_graph.shape().complete;
    o.iff(
        "graded domain iff reduced and complete",
        domain,
        reduced && complete,
        format!("domain {}, reduced {}, complete {}", yes(domain), yes(reduced), yes(complete)),
    );
    Ok(o)
}

fn t52(a: &Analysis) -> Result<Outcome> {
    let gr = &a.graded_graph;
    let hyp = gr.size() > 0;
    let mut o = Outcome::new(format!("Gr has an edge: {}", yes(hyp)));
    let shape = gr.shape();
    let minimal = ideal::minimal_members(&a.graded_proper).len();
    let detail = format!("regular {}, graded minimal ideals {}, complete {}", yes(shape.regular), minimal, yes(shape.complete));
    o.implies("regular => unique graded minimal", hyp && shape.regular, || Ok((minimal == 1, detail.clone())))?;
    o.implies("unique graded minimal => complete", hyp && minimal == 1, || Ok((shape.complete, detail.clone())))?;
    o.implies("complete => regular", hyp && shape.complete, || Ok((shape.regular, detail.clone())))?;
    Ok(o)
}

// ---------------------------------------------------------------------------
// Domination, cliques, girth

fn t6(a: &Analysis) -> Result<Outcome> {
    let commutative = a.ring().is_commutative();
    let mut o = Outcome::new(format!("commutative: {}", yes(commutative)));
    if !commutative {
        o.push("gamma <= 2", Verdict::Vacuous, "ring not commutative".into());
        return Ok(o);
    }
    let inv = a.graded_invariants()?;
    let gamma = inv.domination_number;
    o.claim("gamma <= 2", gamma <= 2, format!("gamma = {gamma}"));
    let fam = &a.graded_proper;
    let indecomposable = ideal::is_graded_indecomposable(a.ring(), fam);
    o.implies("indecomposable => gamma = 1", indecomposable && !fam.is_empty(), || {
        Ok((gamma == 1, format!("gamma = {gamma}")))
    })?;
    let pairs = complementary_pairs(a.ring(), fam);
    let mut cases = Vec::new();
    let mut literal = Vec::new();
    for &(i, j) in &pairs {
        let s = structure::ideal_as_graded_ring(&a.grading, &fam[i])?;
        let t = structure::ideal_as_graded_ring(&a.grading, &fam[j])?;
        let gs = graded_graph_of(&s, &a.limits)?.domination_number(&a.limits)?;
        let gt = graded_graph_of(&t, &a.limits)?.domination_number(&a.limits)?;
        let name = format!("R = {} x {}: gamma {gamma}, factors {gs} and {gt}", a.label(&fam[i]), a.label(&fam[j]));
        literal.push(((gamma == 2) == (gs == 2 && gt == 2), name.clone()));
        cases.push((gamma == 2, gs != 1 && gt != 1, name));
    }
    o.iff_over("R = S x T: gamma = 2 iff neither factor has gamma 1", cases);
    if let Some((_, name)) = literal.iter().find(|(ok, _)| !ok) {
        o.note(format!("literal reading (both factors with gamma 2) fails: {name}"));
    } else if !literal.is_empty() {
        o.note("literal reading (both factors with gamma 2) also holds here");
    }
    Ok(o)
}

fn l18(a: &Analysis) -> Result<Outcome> {
    let fam = &a.graded_proper;
    let inv = a.graded_invariants()?;
    let mut o = Outcome::new(format!("omega = {} (finite)", inv.clique_number));
    // Longest strictly increasing chain, by size order.
    let mut best = alloc::vec![1usize; fam.len()];
    for j in 0..fam.len() {
        for i in 0..j {
            if fam[i] != fam[j] && fam[i].is_subset(&fam[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    let longest = best.iter().copied().max().unwrap_or(0);
    let chains_are_cliques = (0..fam.len()).all(|i| {
        (0..fam.len()).all(|j| i == j || !fam[i].is_subset(&fam[j]) || a.graded_graph.adjacent(i, j))
    });
    o.claim("nested graded ideals are adjacent", chains_are_cliques, format!("{} vertices", fam.len()));
    o.claim(
        "graded chains are bounded by omega",
        longest <= inv.clique_number,
        format!("longest chain {longest}, omega {}", inv.clique_number),
    );
    o.note("graded chain conditions are automatic for finite rings; the check bounds chains by the clique number");
    Ok(o)
}

fn l187(a: &Analysis) -> Result<Outcome> {
    let commutative = a.ring().is_commutative();
    let mut o = Outcome::new(format!("commutative: {}", yes(commutative)));
    if !commutative {
        o.push("omega = 1 iff Gr in {N_1, N_2}", Verdict::Vacuous, "ring not commutative".into());
        return Ok(o);
    }
    let gr = &a.graded_graph;
    let omega = a.graded_invariants()?.clique_number;
    let small_null = gr.size() == 0 && (gr.order() == 1 || gr.order() == 2);
    o.iff("omega = 1 iff Gr in {N_1, N_2}", omega == 1, small_null, format!("omega {omega}, order {}", gr.order()));
    let maximal: Vec<usize> = (0..a.graded_proper.len())
        .filter(|&i| ideal::is_maximal(&a.graded_proper[i], &a.graded_proper))
        .collect();
    o.implies("1 < omega => graded maximal ideals form a clique", omega > 1, || {
        let bad = maximal
            .iter()
            .enumerate()
            .find_map(|(k, &x)| maximal[k + 1..].iter().find(|&&y| !gr.adjacent(x, y)).map(|&y| (x, y)));
        Ok(match bad {
            Some((x, y)) => (false, format!("{} and {}", gr.labels()[x], gr.labels()[y])),
            None => (true, format!("{} graded maximal ideals", maximal.len())),
        })
    })?;
    Ok(o)
}

fn t3(a: &Analysis) -> Result<Outcome> {
    let girth = a.graded_graph.girth();
    let mut o = Outcome::new("none");
    o.claim("girth in {3, inf}", matches!(girth, Extended::Finite(3) | Extended::Infinite), format!("girth = {girth}"));
    Ok(o)
}

fn t4(a: &Analysis) -> Result<Outcome> {
    let gr = &a.graded_graph;
    let fam = &a.graded_proper;
    let not_null = gr.order() >= 1 && !(gr.order() >= 2 && gr.size() == 0);
    let girth = gr.girth();
    let hyp = not_null && girth == Extended::Infinite;
    let mut o = Outcome::new(format!("order {}, size {}, girth {girth}", gr.order(), gr.size()));
    let maximal: Vec<usize> = (0..fam.len()).filter(|&i| ideal::is_maximal(&fam[i], fam)).collect();
    o.implies("graded local, star centred at M", hyp, || {
        let local = ideal::is_graded_local(fam) && maximal.len() == 1;
        let centred = local && gr.star_centre().is_some() && gr.degree(maximal[0]) + 1 == gr.order();
        Ok((centred, format!("graded maximal ideals {}, star {}", maximal.len(), yes(gr.star_centre().is_some()))))
    })?;
    if !hyp || maximal.len() != 1 {
        o.push("M principal => K_1 or K_2", Verdict::Vacuous, "hypothesis not met".into());
        o.push("two homogeneous generators => M^2 = 0", Verdict::Vacuous, "hypothesis not met".into());
        return Ok(o);
    }
    let m = &fam[maximal[0]];
    let k = ideal::min_homogeneous_generators(&a.grading, m, 3);
    o.claim(
        "M needs at most two homogeneous generators",
        matches!(k, Some(1) | Some(2)),
        format!("M = {}, generators {}", a.label(m), k.map_or("> 3".into(), |k| k.to_string())),
    );
    o.implies("M principal => K_1 or K_2", k == Some(1), || {
        let complete = gr.shape().complete && gr.order() <= 2;
        Ok((complete, format!("order {}", gr.order())))
    })?;
    o.implies("two homogeneous generators => M^2 = 0", k == Some(2), || {
        let sq = ideal::ideal_power(a.ring(), m, 2);
        Ok((sq.is_zero(), format!("M^2 = {}", a.label(&sq))))
    })?;
    Ok(o)
}

// ---------------------------------------------------------------------------
// Identity component and faithful gradings

fn t100(a: &Analysis) -> Result<Outcome> {
    let view = a.component_view()?;
    let hyp = view.ideals.len() >= 2 && view.graph.is_connected();
    let mut o = Outcome::new(format!(
        "|I*(R_e)| = {}, G(R_e) connected: {}",
        view.ideals.len(),
        yes(view.graph.is_connected())
    ));
    o.implies("Gr and G(R) connected", hyp, || {
        let (x, y) = (a.graded_graph.is_connected(), a.full_graph.is_connected());
        Ok((x && y, format!("Gr connected {}, G(R) connected {}", yes(x), yes(y))))
    })?;
    Ok(o)
}

/// Degrees worth testing: the whole group, or a window around the support.
fn test_degrees(g: &Grading) -> Vec<Degree> {
    match g.group().elements() {
        Some(all) => all,
        None => {
            let support = g.support();
            let lo = support.first().map_or(0, |d| d.0);
            let hi = support.last().map_or(0, |d| d.0);
            (lo - hi - 1..=hi - lo + hi + 1).map(Degree).collect()
        }
    }
}

fn lemma51(a: &Analysis) -> Result<Outcome> {
    let g = &a.grading;
    let mut o = Outcome::new("none");
    let meets = |i: &IdealSet, s: Degree| i.members().intersection_len(&g.component(s)) > 1;
    let e = g.identity();
    o.iff(
        "e-faithful iff every vertex meets R_e",
        g.is_sigma_faithful(e),
        a.graded_proper.iter().all(|i| meets(i, e)),
        format!("{} vertices", a.graded_proper.len()),
    );
    let nonzero: Vec<&IdealSet> = a.graded.iter().filter(|i| !i.is_zero()).collect();
    let degrees = test_degrees(g);
    o.iff_over(
        "sigma-faithful iff every nonzero graded ideal meets R_sigma",
        degrees.iter().map(|&s| {
            (g.is_sigma_faithful(s), nonzero.iter().all(|i| meets(i, s)), format!("sigma = {}", g.label_degree(s)))
        }),
    );
    let literal_bad: Vec<String> = degrees
        .iter()
        .filter(|&&s| g.is_sigma_faithful(s) != a.graded_proper.iter().all(|i| meets(i, s)))
        .map(|&s| g.label_degree(s))
        .collect();
    if !literal_bad.is_empty() {
        o.note(format!(
            "over proper ideals only the equivalence fails at sigma in {{{}}} (R itself is the missing witness)",
            literal_bad.join(", ")
        ));
    }
    Ok(o)
}

fn t1001(a: &Analysis) -> Result<Outcome> {
    let faithful = a.e_faithful();
    let mut o = Outcome::new(format!("e-faithful: {}", yes(faithful)));
    if !faithful {
        for name in ["classes are cliques", "each class contains R I_e", "quotient adjacency well defined", "phi is an isomorphism"] {
            o.push(name, Verdict::Vacuous, "hypothesis not met".into());
        }
        return Ok(o);
    }
    let view = a.component_view()?;
    let gr = &a.graded_graph;
    let p = structure::sim_partition(&a.grading, view, &a.graded_proper)?;
    let clique = p.non_clique_witness(gr);
    o.claim(
        "classes are cliques",
        clique.is_none(),
        clique.map_or(format!("{} classes", p.classes.len()), |(x, y)| format!("{} and {}", gr.labels()[x], gr.labels()[y])),
    );
    let missing = p.missing_generated();
    o.claim(
        "each class contains R I_e",
        missing.is_none(),
        missing.map_or("all classes".into(), |c| format!("class of {}", view.graph.labels()[p.classes[c].key])),
    );
    match structure::quotient_graph(&p, view, gr) {
        Ok(q) => o.claim("quotient adjacency well defined", true, format!("{} classes, {} edges", q.order(), q.size())),
        Err(e) => o.claim("quotient adjacency well defined", false, e.to_string()),
    }
    match structure::phi_iso_check(&a.grading, view, &a.graded_proper, gr, PhiVariant::Classes) {
        Ok(rep) => {
            o.claim("phi is an isomorphism", true, format!("{} vertices", rep.source_order));
            for (x, y) in rep.correspondence {
                o.note(format!("{x} -> {y}"));
            }
        }
        Err(e) => o.claim("phi is an isomorphism", false, e.to_string()),
    }
    Ok(o)
}

fn conn_equiv(a: &Analysis) -> Result<Outcome> {
    let faithful = a.e_faithful();
    let mut o = Outcome::new(format!("e-faithful: {}", yes(faithful)));
    if !faithful {
        o.push("G(R_e) connected iff Gr connected", Verdict::Vacuous, "hypothesis not met".into());
        return Ok(o);
    }
    let view = a.component_view()?;
    let (x, y) = (view.graph.is_connected(), a.graded_graph.is_connected());
    o.iff("G(R_e) connected iff Gr connected", x, y, format!("G(R_e) {}, Gr {}", yes(x), yes(y)));
    Ok(o)
}

fn field_product_cor(a: &Analysis) -> Result<Outcome> {
    let hyp = a.e_faithful() && a.ring().is_commutative();
    let mut o = Outcome::new(format!(
        "e-faithful: {}, commutative: {}",
        yes(a.e_faithful()),
        yes(a.ring().is_commutative())
    ));
    if !hyp {
        o.push("R_e product of fields iff R product of graded fields", Verdict::Vacuous, "hypothesis not met".into());
        return Ok(o);
    }
    let view = a.component_view()?;
    let re = grading::trivial_grading(view.re.ring(), GradeGroup::Integers);
    let left = field_factorisation(&re, &view.ideals)?.is_some();
    let right = field_factorisation(&a.grading, &a.graded_proper)?.is_some();
    o.iff(
        "R_e product of fields iff R product of graded fields",
        left,
        right,
        format!("R_e splits {}, R splits {}", yes(left), yes(right)),
    );
    Ok(o)
}

fn gamma_eq(a: &Analysis) -> Result<Outcome> {
    let faithful = a.e_faithful();
    let mut o = Outcome::new(format!("e-faithful: {}", yes(faithful)));
    o.implies("gamma(G(R_e)) = gamma(Gr)", faithful, || {
        let t = structure::gamma_omega_transfer(&a.grading, a.component_view()?, &a.graded_proper, &a.graded_graph, &a.limits)?;
        Ok((t.gamma_re == t.gamma_gr, format!("{} and {}", t.gamma_re, t.gamma_gr)))
    })?;
    Ok(o)
}

fn omega_formula(a: &Analysis) -> Result<Outcome> {
    let faithful = a.e_faithful();
    let mut o = Outcome::new(format!("e-faithful: {}", yes(faithful)));
    o.implies("omega(Gr) = max clique weight in G(R_e)", faithful, || {
        let t = structure::gamma_omega_transfer(&a.grading, a.component_view()?, &a.graded_proper, &a.graded_graph, &a.limits)?;
        Ok((
            t.omega_gr == t.omega_formula,
            format!("omega {} and weight {} on [{}]", t.omega_gr, t.omega_formula, t.best_clique.join(", ")),
        ))
    })?;
    Ok(o)
}

fn lemma_l0(a: &Analysis) -> Result<Outcome> {
    let first_strong = a.grading.is_first_strong();
    let mut o = Outcome::new(format!("first strong: {}", yes(first_strong)));
    o.implies("I = R (I cap R_e)", first_strong, || {
        let view = a.component_view()?;
        let bad = a.graded_proper.iter().find(|i| {
            let trace = IdealSet::new(view.re.trace(i.members()));
            view.re.generate(a.ring(), &trace) != **i
        });
        Ok(match bad {
            Some(i) => (false, a.label(i)),
            None => (true, format!("{} vertices", a.graded_proper.len())),
        })
    })?;
    Ok(o)
}

fn direct_phi(a: &Analysis, o: &mut Outcome, name: &str) -> Result<()> {
    let view = a.component_view()?;
    match structure::phi_iso_check(&a.grading, view, &a.graded_proper, &a.graded_graph, PhiVariant::Direct) {
        Ok(rep) => {
            o.claim(name, true, format!("{} vertices", rep.source_order));
            for (x, y) in rep.correspondence {
                o.note(format!("{x} -> {y}"));
            }
        }
        Err(e) => o.claim(name, false, e.to_string()),
    }
    Ok(())
}

fn t56(a: &Analysis) -> Result<Outcome> {
    let first_strong = a.grading.is_first_strong();
    let mut o = Outcome::new(format!("first strong: {}", yes(first_strong)));
    if first_strong {
        direct_phi(a, &mut o, "I_e -> R I_e is an isomorphism")?;
    } else {
        o.push("I_e -> R I_e is an isomorphism", Verdict::Vacuous, "hypothesis not met".into());
    }
    Ok(o)
}

fn group_ring_example(a: &Analysis) -> Result<Outcome> {
    let Construction::GroupRing { base, .. } = a.ring().construction() else {
        unreachable!("kind checked by the caller")
    };
    let mut o = Outcome::new(format!("group ring over {}", base.description()));
    o.claim("strongly graded", a.grading.is_strong(), String::new());
    let re = a.component_view()?.re.ring().size();
    o.claim("R_e has the size of the base ring", re == base.size(), format!("{re} and {}", base.size()));
    direct_phi(a, &mut o, "Gr(R[G]) matches G(R)")?;
    Ok(o)
}

// ---------------------------------------------------------------------------
// Idealizations

/// `I(+)N` as a set of element indices of `R(+)M`.
fn idealization_set(size_m: usize, i: &ElemSet, n: &ElemSet) -> ElemSet {
    ElemSet::from_iter(i.universe() * size_m, i.iter().flat_map(|r| n.iter().map(move |m| r * size_m + m)))
}

fn lemma17(a: &Analysis) -> Result<Outcome> {
    let (base, module) = a.idealization_parts().expect("kind checked");
    let mut o = Outcome::new(format!("R = {}, M of order {}", base.description(), module.size()));
    let base_ideals = ideal::enumerate_left_ideals(base, &a.limits)?;
    let submodules = module.submodules();
    let mut expected = alloc::collections::BTreeSet::new();
    for i in &base_ideals {
        for n in &submodules {
            let im_in_n = i.members().iter().all(|r| (0..module.size()).all(|m| n.contains(module.act(r, m))));
            if im_in_n {
                expected.insert(idealization_set(module.size(), i.members(), n));
            }
        }
    }
    let actual: alloc::collections::BTreeSet<ElemSet> = a.graded.iter().map(|i| i.members().clone()).collect();
    let extra = actual.difference(&expected).next().cloned();
    let missing = expected.difference(&actual).next().cloned();
    let detail = match (&extra, &missing) {
        (Some(x), _) => format!("graded ideal {} is not of the form I(+)N", a.label(&IdealSet::new(x.clone()))),
        (None, Some(x)) => format!("{} should be graded", a.label(&IdealSet::new(x.clone()))),
        (None, None) => format!("{} graded ideals", actual.len()),
    };
    o.claim("graded ideals are exactly I(+)N with IM in N", extra.is_none() && missing.is_none(), detail);
    let sm = module.size();
    let split = |x: &ElemSet| -> (ElemSet, ElemSet) {
        (
            ElemSet::from_iter(base.size(), x.iter().map(|e| e / sm)),
            ElemSet::from_iter(sm, x.iter().map(|e| e % sm)),
        )
    };
    let mut bad = None;
    for (k, x) in a.graded.iter().enumerate() {
        for y in &a.graded[k + 1..] {
            let ((i1, n1), (i2, n2)) = (split(x.members()), split(y.members()));
            let formula = idealization_set(sm, &i1.intersection(&i2), &n1.intersection(&n2));
            if formula != x.members().intersection(y.members()) {
                bad = Some(format!("{} and {}", a.label(x), a.label(y)));
            }
        }
    }
    o.claim("intersections are componentwise", bad.is_none(), bad.unwrap_or_default());
    if module.size() > 1 {
        let r0 = idealization_set(sm, &ElemSet::full(base.size()), &ElemSet::singleton(sm, module.zero()));
        let graded = actual.contains(&r0);
        o.note(format!("R(+)0 is a graded ideal: {}", yes(graded)));
    }
    Ok(o)
}

fn module_not_simple(m: &FiniteModule) -> bool {
    !m.is_simple()
}

fn t777(a: &Analysis) -> Result<Outcome> {
    let (base, module) = a.idealization_parts().expect("kind checked");
    let gr = &a.graded_graph;
    let commutative = base.is_commutative();
    let mut o = Outcome::new(format!("base commutative: {}", yes(commutative)));
    if !commutative {
        o.push("edgeless iff R field and M simple", Verdict::Vacuous, "base not commutative".into());
        return Ok(o);
    }
    let field = is_field(base);
    let simple = module.is_simple();
    let edgeless = gr.size() == 0;
    o.iff(
        "edgeless iff R field and M simple",
        edgeless,
        field && simple,
        format!("edges {}, field {}, M simple {}", gr.size(), yes(field), yes(simple)),
    );
    let girth = gr.girth();
    let girth3 = || Ok((girth == Extended::Finite(3), format!("girth {girth}")));
    o.implies("R and M not simple => girth 3", !field && module_not_simple(module), girth3)?;
    let base_vertices = ideal::nontrivial_proper(&ideal::enumerate_left_ideals(base, &a.limits)?).len();
    o.implies("|G(R)| >= 2 => girth 3", base_vertices >= 2, girth3)?;
    let rm = (0..module.size())
        .flat_map(|m| base.elements().map(move |r| (r, m)))
        .map(|(r, m)| module.act(r, m))
        .collect::<alloc::collections::BTreeSet<_>>();
    let rm_is_m = rm.len() == module.size();
    o.implies("RM != M => girth 3", !rm_is_m, girth3)?;
    o.note("a one-vertex graph counts as connected, so the first part is checked in its edgeless form");
    o.note(format!(
        "with RM != 0 in place of RM != M the hypothesis holds ({}) and girth is {girth}",
        yes(module.size() > 1)
    ));
    Ok(o)
}

fn t777_cor(a: &Analysis) -> Result<Outcome> {
    let (base, _) = a.idealization_parts().expect("kind checked");
    let gr = &a.graded_graph;
    let mut o = Outcome::new(format!("R = {}", base.description()));
    let has_edge = gr.size() > 0;
    let not_field = !is_field(base);
    let girth3 = gr.girth() == Extended::Finite(3);
    let detail = format!("edges {}, field {}, girth {}", gr.size(), yes(!not_field), gr.girth());
    o.iff("has an edge iff R not a field", has_edge, not_field, detail.clone());
    o.iff("R not a field iff girth 3", not_field, girth3, detail);
    o.note("connectedness is read in its edgeless form, as for the idealization check");
    Ok(o)
}

fn t231(a: &Analysis) -> Result<Outcome> {
    let (base, _) = a.idealization_parts().expect("kind checked");
    let base_ideals = ideal::nontrivial_proper(&ideal::enumerate_left_ideals(base, &a.limits)?);
    let g_base = IntersectionGraph::new(&base_ideals);
    let omega_base = g_base.clique_number(&a.limits)?;
    let order = g_base.order();
    let omega = a.graded_invariants()?.clique_number;
    let bound = 1 + 2 * omega_base + order;
    let mut o = Outcome::new(format!("|G(R)| = {order} (finite)"));
    o.claim("omega(Gr) >= 1 + 2 omega(G(R)) + |G(R)|", omega >= bound, format!("{omega} >= 1 + 2*{omega_base} + {order}"));
    let null = g_base.size() == 0;
    o.iff("equality iff G(R) null", omega == bound, null, format!("omega {omega}, bound {bound}, G(R) null {}", yes(null)));
    Ok(o)
}

fn planarity_cor(a: &Analysis) -> Result<Outcome> {
    let (base, _) = a.idealization_parts().expect("kind checked");
    let planar = a.graded_graph.planarity(&a.limits);
    let mut o = Outcome::new(format!("planarity decided: {}", yes(planar != Planarity::Unknown)));
    if planar == Planarity::Unknown {
        o.push("planar iff at most one nontrivial proper ideal", Verdict::Vacuous, "planarity undetermined".into());
        return Ok(o);
    }
    let count = ideal::nontrivial_proper(&ideal::enumerate_left_ideals(base, &a.limits)?).len();
    o.iff(
        "planar iff at most one nontrivial proper ideal",
        planar == Planarity::Planar,
        count <= 1,
        format!("{count} nontrivial proper ideals, order {}", a.graded_graph.order()),
    );
    Ok(o)
}

// ---------------------------------------------------------------------------
// Ordered gradings

fn lemma_ll(a: &Analysis) -> Result<Outcome> {
    let clauses = ordered::lemma_ll_check(&a.grading, &a.all)?;
    let mut o = Outcome::new(format!("{} left ideals", a.all.len()));
    for c in clauses {
        let detail = c.witness.clone().unwrap_or_else(|| format!("{} instances", c.instances));
        o.claim(c.name, c.holds(), detail);
    }
    Ok(o)
}

fn comparison(a: &Analysis) -> Result<ordered::OrderedReport> {
    ordered::ordered_comparison_check(&a.grading, &a.all, &a.graded_graph, &a.full_graph)
}

fn t543(a: &Analysis) -> Result<Outcome> {
    let rep = comparison(a)?;
    let mut o = Outcome::new("finite support is well ordered");
    let detail = format!("Gr connected {}, G(R) connected {}", yes(rep.graded_connected), yes(rep.full_connected));
    o.iff("Gr connected iff G(R) connected", rep.graded_connected, rep.full_connected, detail);
    Ok(o)
}

fn t544(a: &Analysis) -> Result<Outcome> {
    let rep = comparison(a)?;
    let mut o = Outcome::new(format!("local: {}", yes(rep.local)));
    o.implies("girth(Gr) = girth(G(R))", rep.local, || {
        Ok((rep.graded_girth == rep.full_girth, format!("{} and {}", rep.graded_girth, rep.full_girth)))
    })?;
    Ok(o)
}

fn r545(a: &Analysis) -> Result<Outcome> {
    let rep = comparison(a)?;
    let mut o = Outcome::new(format!("girth(Gr) = {}, girth(G(R)) = {}", rep.graded_girth, rep.full_girth));
    let chains: BTreeMap<usize, usize> = ordered::chain_length_distribution(&a.all);
    let dist = chains.iter().map(|(l, c)| format!("{c} of length {l}")).collect::<Vec<_>>().join(", ");
    o.note(format!("maximal chains of left ideals: {dist}"));
    match rep.r545 {
        Some(r) => {
            for c in r.clauses {
                let detail = c.witness.clone().unwrap_or_else(|| format!("M = {}", r.graded_maximal));
                o.claim(c.name, c.holds(), detail);
            }
        }
        None => {
            for name in [
                "M is maximal among all proper left ideals",
                "K~ = M for every maximal left ideal K",
                "every maximal chain of left ideals has four terms",
            ] {
                o.push(name, Verdict::Vacuous, "hypothesis not met".into());
            }
        }
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{self, FiniteGroup};

    fn lim() -> Limits {
        Limits::default()
    }

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(ring::make_cyclic_ring(n, &lim()).unwrap())
    }

    fn trivial(r: &Arc<FiniteRing>) -> Analysis {
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        Analysis::new(grading::trivial_grading(r, GradeGroup::Finite(c2)), lim()).unwrap()
    }

    fn verdict(id: &str, a: &Analysis) -> Verdict {
        run_check(id, a).unwrap().verdict
    }

    #[test]
    fn registry_is_consistent() {
        let ids: Vec<&str> = registry_ids().collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert_eq!(ids.len(), 33);
    }

    #[test]
    fn z12_suite_has_no_failures() {
        let a = trivial(&z(12));
        let reports = run_all(&a);
        for r in &reports {
            assert_ne!(r.verdict, Verdict::Fail, "{r:?}");
        }
        assert_eq!(verdict("t3", &a), Verdict::Pass);
        assert_eq!(verdict("t2", &a), Verdict::Pass);
        assert_eq!(reports.iter().find(|r| r.id == "lemma17").unwrap().verdict, Verdict::Skipped);
    }

    #[test]
    fn disconnected_product() {
        let p = Arc::new(ring::direct_product(&z(2), &z(2), &lim()).unwrap());
        let a = trivial(&p);
        assert_eq!(verdict("c11", &a), Verdict::Pass);
        assert_eq!(verdict("t2", &a), Verdict::Vacuous);
        assert_eq!(verdict("t1", &a), Verdict::Pass);
        let t6 = run_check("t6", &a).unwrap();
        assert_eq!(t6.verdict, Verdict::Pass);
        assert!(t6.notes[0].contains("fails"), "{t6:?}");
    }

    #[test]
    fn unknown_and_wrong_kind() {
        let a = trivial(&z(4));
        assert!(matches!(run_check("nope", &a), Err(Error::UnknownTheorem(_))));
        assert!(matches!(run_check("t231", &a), Err(Error::WrongInstanceKind { .. })));
        assert!(matches!(run_check("lemma_ll", &a), Err(Error::WrongInstanceKind { .. })));
    }

    #[test]
    fn idealization_rows() {
        let z4 = z(4);
        let m = Arc::new(FiniteModule::self_module(&z4).unwrap());
        let r = Arc::new(ring::idealization(&z4, &m, &lim()).unwrap());
        let a = Analysis::new(grading::idealization_grading(&r).unwrap(), lim()).unwrap();
        let t231 = run_check("t231", &a).unwrap();
        assert_eq!(t231.verdict, Verdict::Pass);
        assert!(t231.parts.iter().any(|p| p.name.starts_with("equality") && p.verdict == Verdict::Pass));
        for id in ["lemma17", "t777", "t777_cor", "planarity_cor"] {
            assert_eq!(verdict(id, &a), Verdict::Pass, "{id}");
        }
        assert_eq!(verdict("t1001", &a), Verdict::Vacuous);
    }

    #[test]
    fn ordered_rows() {
        let r = Arc::new(ring::polynomial_quotient(&z(2), &[0, 0, 0, 1], &lim()).unwrap());
        let a = Analysis::new(grading::poly_quotient_integer_grading(&r).unwrap(), lim()).unwrap();
        for id in ["lemma_ll", "t543", "t544"] {
            assert_eq!(verdict(id, &a), Verdict::Pass, "{id}");
        }
        assert_eq!(verdict("r545", &a), Verdict::Vacuous);
    }
}
