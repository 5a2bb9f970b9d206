//! Runs every registered check over a spread of small graded rings and
//! requires that nothing fails.

use std::sync::Arc;

use ideal_graph_core::grading::{self, Degree, GradeGroup, Grading};
use ideal_graph_core::limits::Limits;
use ideal_graph_core::ring::{self, FiniteGroup, FiniteModule, FiniteRing};
use ideal_graph_core::theorems::{run_all, Analysis};
use ideal_graph_core::Verdict;

fn lim() -> Limits {
    Limits::default()
}

fn z(n: usize) -> Arc<FiniteRing> {
    Arc::new(ring::make_cyclic_ring(n, &lim()).unwrap())
}

fn c(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).unwrap())
}

fn poly(base: &Arc<FiniteRing>, modulus: &[usize]) -> Arc<FiniteRing> {
    Arc::new(ring::polynomial_quotient(base, modulus, &lim()).unwrap())
}

fn self_idealization(base: &Arc<FiniteRing>) -> Arc<FiniteRing> {
    let m = Arc::new(FiniteModule::self_module(base).unwrap());
    Arc::new(ring::idealization(base, &m, &lim()).unwrap())
}

fn instances() -> Vec<(String, Grading)> {
    let mut out = Vec::new();
    for n in [2, 3, 4, 6, 8, 9, 12, 16, 30] {
        out.push((format!("Z_{n} trivial"), grading::trivial_grading(&z(n), GradeGroup::Finite(c(2)))));
    }
    let prod = |a, b| Arc::new(ring::direct_product(&z(a), &z(b), &lim()).unwrap());
    for (a, b) in [(2, 2), (2, 4), (4, 4), (2, 3)] {
        out.push((format!("Z_{a} x Z_{b} trivial"), grading::trivial_grading(&prod(a, b), GradeGroup::Integers)));
    }
    for base in [2, 3, 4, 8] {
        let r = self_idealization(&z(base));
        out.push((format!("Z_{base}(+)Z_{base}"), grading::idealization_grading(&r).unwrap()));
    }
    let z4 = z(4);
    let quotient = Arc::new(
        FiniteModule::quotient(&z4, &ideal_graph_core::bitset::ElemSet::from_iter(4, [0, 2])).unwrap(),
    );
    let r = Arc::new(ring::idealization(&z4, &quotient, &lim()).unwrap());
    out.push(("Z_4(+)Z_2".into(), grading::idealization_grading(&r).unwrap()));
    for (base, group) in [(2, 2), (4, 2), (2, 3), (3, 2), (2, 4)] {
        let r = Arc::new(ring::group_ring(&z(base), &c(group), &lim()).unwrap());
        out.push((format!("Z_{base}[C_{group}]"), grading::group_ring_grading(&r).unwrap()));
    }
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let r = Arc::new(ring::group_ring(&z(2), &s3, &lim()).unwrap());
    out.push(("Z_2[S_3]".into(), grading::group_ring_grading(&r).unwrap()));
    for k in 2..=5 {
        let mut m = vec![0; k + 1];
        m[k] = 1;
        let r = poly(&z(2), &m);
        out.push((format!("F_2[x]/(x^{k})"), grading::poly_quotient_integer_grading(&r).unwrap()));
    }
    let r = poly(&z(4), &[0, 0, 1]);
    out.push(("Z_4[x]/(x^2)".into(), grading::poly_quotient_integer_grading(&r).unwrap()));
    let f4 = poly(&z(2), &[1, 1, 1]);
    out.push(("F_4 trivial".into(), grading::trivial_grading(&f4, GradeGroup::Integers)));
    // F_2[x]/(x^2 - 1) with x in degree 1 of C_2.
    let r = poly(&z(2), &[1, 0, 1]);
    let g = grading::grading_from_generators(
        &r,
        GradeGroup::Finite(c(2)),
        &[(Degree(0), vec![r.element("1").unwrap()]), (Degree(1), vec![r.element("x").unwrap()])],
    )
    .unwrap();
    out.push(("F_2[C_2] via x".into(), g));
    out
}

#[test]
fn no_check_fails_on_the_sweep() {
    let mut failures = Vec::new();
    let mut passes = 0;
    for (name, g) in instances() {
        let a = Analysis::new(g, lim()).unwrap();
        for r in run_all(&a) {
            match r.verdict {
                Verdict::Fail => failures.push(format!("{name}: {} {:?}", r.id, r.witness)),
                Verdict::Pass => passes += 1,
                _ => {}
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(passes > 100);
}

