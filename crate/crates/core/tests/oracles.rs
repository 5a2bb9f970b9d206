//! Fast algorithms against naive oracles: ideal enumeration against a scan of
//! every subset, graph invariants against subset and distance-matrix scans.

use std::collections::BTreeSet;
use std::sync::Arc;

use ideal_graph_core::bitset::ElemSet;
use ideal_graph_core::grading::{self, Degree, GradeGroup, Grading};
use ideal_graph_core::graph::{Extended, IntersectionGraph};
use ideal_graph_core::ideal;
use ideal_graph_core::limits::Limits;
use ideal_graph_core::ring::{self, FiniteGroup, FiniteModule, FiniteRing};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn z(n: usize) -> Arc<FiniteRing> {
    Arc::new(ring::make_cyclic_ring(n, &lim()).unwrap())
}

/// Every subset containing 0 that is closed under addition and under left
/// multiplication. Finite and closed under `+` means it is a subgroup.
fn brute_left_ideals(r: &FiniteRing) -> BTreeSet<Vec<usize>> {
    let n = r.size();
    assert!(n <= 16);
    let others: Vec<usize> = r.elements().filter(|&x| x != r.zero()).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << others.len()) {
        let mut set = vec![r.zero()];
        set.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
        let mut member = vec![false; n];
        for &x in &set {
            member[x] = true;
        }
        let closed = set.iter().all(|&a| set.iter().all(|&b| member[r.add(a, b)]))
            && set.iter().all(|&a| r.elements().all(|s| member[r.mul(s, a)]));
        if closed {
            set.sort_unstable();
            out.insert(set);
        }
    }
    out
}

/// Ideals equal to the sum of their homogeneous parts, read off the
/// decomposition of every member.
fn brute_graded(g: &Grading, ideals: &BTreeSet<Vec<usize>>) -> BTreeSet<Vec<usize>> {
    ideals
        .iter()
        .filter(|i| i.iter().all(|&x| g.decompose(x).iter().all(|&(_, c)| i.contains(&c))))
        .cloned()
        .collect()
}

fn as_sets(ideals: &[ideal::IdealSet]) -> BTreeSet<Vec<usize>> {
    ideals.iter().map(|i| i.members().iter().collect()).collect()
}

fn small_instances() -> Vec<(&'static str, Grading)> {
    let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
    let trivial = |r: &Arc<FiniteRing>| grading::trivial_grading(r, GradeGroup::Finite(c2.clone()));
    let poly = |m: &[usize]| Arc::new(ring::polynomial_quotient(&z(2), m, &lim()).unwrap());
    let e = |i: usize| {
        let mut v = vec![0; 3];
        v[i] = 1;
        v
    };
    let table = vec![vec![e(0), e(1), e(2)], vec![e(1), vec![0; 3], vec![0; 3]], vec![e(2), vec![0; 3], vec![0; 3]]];
    let sq = Arc::new(ring::algebra_over_zn(2, 3, &table, Some(vec!["1".into(), "x".into(), "y".into()]), &lim()).unwrap());
    let sq = grading::grading_from_generators(
        &sq,
        GradeGroup::Integers,
        &[(Degree(0), vec![sq.element("1").unwrap()]), (Degree(1), vec![sq.element("x").unwrap()]), (Degree(2), vec![sq.element("y").unwrap()])],
    )
    .unwrap();
    let idealize = |b: &Arc<FiniteRing>| {
        let m = Arc::new(FiniteModule::self_module(b).unwrap());
        Arc::new(ring::idealization(b, &m, &lim()).unwrap())
    };
    let z2z2 = Arc::new(ring::direct_product(&z(2), &z(2), &lim()).unwrap());
    let z2z4 = Arc::new(ring::direct_product(&z(2), &z(4), &lim()).unwrap());
    let gr = |b: usize, g: usize| {
        let r = Arc::new(ring::group_ring(&z(b), &Arc::new(FiniteGroup::cyclic(g).unwrap()), &lim()).unwrap());
        grading::group_ring_grading(&r).unwrap()
    };
    vec![
        ("Z_2", trivial(&z(2))),
        ("Z_4", trivial(&z(4))),
        ("Z_8", trivial(&z(8))),
        ("Z_12", trivial(&z(12))),
        ("Z_16", trivial(&z(16))),
        ("Z_2 x Z_2", trivial(&z2z2)),
        ("Z_2 x Z_4", trivial(&z2z4)),
        ("F_4", trivial(&poly(&[1, 1, 1]))),
        ("F_2[x]/(x^3)", grading::poly_quotient_integer_grading(&poly(&[0, 0, 0, 1])).unwrap()),
        ("F_2[x]/(x^4)", grading::poly_quotient_integer_grading(&poly(&[0, 0, 0, 0, 1])).unwrap()),
        ("F_2{1,x,y}", sq),
        ("Z_2(+)Z_2", grading::idealization_grading(&idealize(&z(2))).unwrap()),
        ("Z_4(+)Z_4", grading::idealization_grading(&idealize(&z(4))).unwrap()),
        ("Z_2[C_2]", gr(2, 2)),
        ("Z_2[C_3]", gr(2, 3)),
        ("Z_4[C_2]", gr(4, 2)),
    ]
}

#[test]
fn ideal_enumeration_matches_subset_scan() {
    for (name, g) in small_instances() {
        let r = g.ring();
        let oracle = brute_left_ideals(r);
        let all = ideal::enumerate_left_ideals(r, &lim()).unwrap();
        assert_eq!(as_sets(&all), oracle, "{name}: all left ideals");
        assert_eq!(all.len(), oracle.len(), "{name}: duplicates");
        let graded = ideal::enumerate_graded_left_ideals(&g, &lim()).unwrap();
        assert_eq!(as_sets(&graded), brute_graded(&g, &oracle), "{name}: graded ideals");
    }
}

#[test]
fn enumeration_order_is_by_size() {
    for (name, g) in small_instances() {
        let all = ideal::enumerate_left_ideals(g.ring(), &lim()).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1] && w[0].len() <= w[1].len()), "{name}");
        assert!(all[0].is_zero() && all.last().unwrap().is_whole(), "{name}");
    }
}

fn divisors(n: usize) -> usize {
    (1..=n).filter(|&d| n.is_multiple_of(d)).count()
}

// ---------------------------------------------------------------------------
// Graph oracles

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn naive_clique(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|i| (0..n).all(|j| i == j || s >> i & 1 == 0 || s >> j & 1 == 0 || adj[i][j])))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn naive_domination(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || (0..n).any(|u| s >> u & 1 == 1 && adj[u][v])))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

const INF: usize = usize::MAX / 4;

fn floyd(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut d: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { 0 } else if adj[i][j] { 1 } else { INF }).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

/// Shortest cycle through each edge: drop the edge and measure the gap.
fn naive_girth(adj: &[Vec<bool>]) -> Extended {
    let n = adj.len();
    let mut best = INF;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                let mut cut = adj.to_vec();
                cut[u][v] = false;
                cut[v][u] = false;
                best = best.min(floyd(&cut)[u][v].saturating_add(1));
            }
        }
    }
    if best >= INF {
        Extended::Infinite
    } else {
        Extended::Finite(best)
    }
}

fn naive_diameter(adj: &[Vec<bool>]) -> Extended {
    let d = floyd(adj);
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    if m >= INF {
        Extended::Infinite
    } else {
        Extended::Finite(m)
    }
}

fn graph_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=10).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), k)).prop_map(move |(n, keep)| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e).collect();
            (n, edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_invariants_match_naive((n, edges) in graph_strategy()) {
        let g = IntersectionGraph::from_edges(n, &edges);
        let adj = adjacency(n, &edges);
        prop_assert_eq!(g.clique_number(&lim()).unwrap(), naive_clique(&adj));
        prop_assert_eq!(g.domination_number(&lim()).unwrap(), naive_domination(&adj));
        prop_assert_eq!(g.girth(), naive_girth(&adj));
        prop_assert_eq!(g.diameter(), naive_diameter(&adj));
        let dom = g.minimum_dominating_set(&lim()).unwrap();
        prop_assert!((0..n).all(|v| dom.contains(&v) || dom.iter().any(|&u| adj[u][v])));
    }

    #[test]
    fn max_weight_clique_matches_naive((n, edges) in graph_strategy(), w in proptest::collection::vec(0usize..5, 10)) {
        let g = IntersectionGraph::from_edges(n, &edges);
        let adj = adjacency(n, &edges);
        let naive = (0u32..1 << n)
            .filter(|&s| (0..n).all(|i| (0..n).all(|j| i == j || s >> i & 1 == 0 || s >> j & 1 == 0 || adj[i][j])))
            .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).map(|i| w[i]).sum::<usize>())
            .max()
            .unwrap_or(0);
        prop_assert_eq!(g.max_weight_clique(&w[..n], &lim()).unwrap().0, naive);
    }

    #[test]
    fn cyclic_ideals_are_divisors(n in 2usize..=60) {
        let all = ideal::enumerate_left_ideals(&z(n), &lim()).unwrap();
        prop_assert_eq!(all.len(), divisors(n));
        // Every pair of nonzero ideals of Z_n meets unless n splits them.
        let g = IntersectionGraph::new(&ideal::nontrivial_proper(&all));
        prop_assert!(matches!(g.girth(), Extended::Finite(3) | Extended::Infinite));
    }

    #[test]
    fn sums_and_intersections_are_ideals(a in 2usize..=6, b in 2usize..=6) {
        let r = Arc::new(ring::direct_product(&z(a), &z(b), &lim()).unwrap());
        let all = ideal::enumerate_left_ideals(&r, &lim()).unwrap();
        let set: BTreeSet<ElemSet> = all.iter().map(|i| i.members().clone()).collect();
        for x in &all {
            for y in &all {
                prop_assert!(set.contains(ideal::ideal_sum(&r, x, y).members()));
                prop_assert!(set.contains(ideal::ideal_intersect(x, y).members()));
            }
        }
    }
}

/// Planarity for at most six vertices: the only Kuratowski subdivisions that
/// fit are K5, K5 with one edge subdivided, and K3,3.
fn naive_planar(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let verts: Vec<usize> = (0..n).collect();
    let complete = |s: &[usize]| s.iter().all(|&a| s.iter().all(|&b| a == b || adj[a][b]));
    for skip in 0..n.max(1) {
        let five: Vec<usize> = verts.iter().copied().filter(|&v| n == 5 || v != skip).collect();
        if five.len() != 5 {
            continue;
        }
        if complete(&five) {
            return false;
        }
        if n == 6 {
            // `skip` subdivides one missing edge of an otherwise complete K5.
            let missing: Vec<(usize, usize)> = five
                .iter()
                .flat_map(|&a| five.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a < b && !adj[a][b])
                .collect();
            if let [(a, b)] = missing[..] {
                if adj[skip][a] && adj[skip][b] {
                    return false;
                }
            }
        }
    }
    if n == 6 {
        for mask in 0u32..1 << 6 {
            if mask.count_ones() != 3 || mask & 1 == 0 {
                continue;
            }
            let (l, r): (Vec<usize>, Vec<usize>) = verts.iter().partition(|&&v| mask >> v & 1 == 1);
            if l.iter().all(|&a| r.iter().all(|&b| adj[a][b])) {
                return false;
            }
        }
    }
    true
}

fn small_graph_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (5usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        // Dense graphs, so both answers show up.
        (Just(n), proptest::collection::vec(proptest::bool::weighted(0.75), k)).prop_map(move |(n, keep)| {
            (n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e).collect())
        })
    })
}

proptest! {
    #[test]
    fn planarity_matches_kuratowski_scan((n, edges) in small_graph_strategy()) {
        use ideal_graph_core::Planarity;
        let g = IntersectionGraph::from_edges(n, &edges);
        let expected = if naive_planar(&adjacency(n, &edges)) { Planarity::Planar } else { Planarity::NonPlanar };
        prop_assert_eq!(g.planarity(&lim()), expected);
    }
}
