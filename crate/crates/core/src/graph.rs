//! Intersection graphs on families of ideals and their invariants.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::ElemSet;
use crate::error::Error;
use crate::ideal::IdealSet;
use crate::limits::Limits;
use crate::planarity::{self, Planarity};
use crate::Result;

/// A natural number or infinity; used for girth and diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn is_finite(self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(n) => Some(n),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(n) => write!(f, "{n}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Extended {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(n) => s.serialize_u64(*n as u64),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Extended {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Extended;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> core::result::Result<Extended, E> {
                Ok(Extended::Finite(v as usize))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> core::result::Result<Extended, E> {
                usize::try_from(v).map(Extended::Finite).map_err(|_| E::custom("negative length"))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> core::result::Result<Extended, E> {
                if v == "inf" {
                    Ok(Extended::Infinite)
                } else {
                    Err(E::custom("expected \"inf\""))
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ShapeFlags {
    pub null: bool,
    pub complete: bool,
    pub regular: bool,
    pub star: bool,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GraphInvariants {
    pub order: usize,
    pub size: usize,
    pub components: usize,
    pub diameter: Extended,
    pub girth: Extended,
    pub clique_number: usize,
    pub domination_number: usize,
    pub degree_sequence: Vec<usize>,
    pub flags: ShapeFlags,
    pub planar: Planarity,
}

/// A simple undirected graph whose vertices are (usually) ideals. Graphs
/// built from adjacency alone have empty vertex sets.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    vertices: Vec<IdealSet>,
    labels: Vec<String>,
    adj: Vec<ElemSet>,
}

impl IntersectionGraph {
    /// Two ideals are adjacent when they meet outside `{0}`.
    pub fn new(family: &[IdealSet]) -> Self {
        let n = family.len();
        let mut adj = vec![ElemSet::empty(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if family[i].meets(&family[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let labels = (0..n).map(|i| alloc::format!("v{i}")).collect();
        IntersectionGraph { vertices: family.to_vec(), labels, adj }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order());
        self.labels = labels;
        self
    }

    /// A bare graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![ElemSet::empty(n); n];
        for &(a, b) in edges {
            assert!(a != b && a < n && b < n, "bad edge ({a},{b})");
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let labels = (0..n).map(|i| alloc::format!("v{i}")).collect();
        IntersectionGraph { vertices: Vec::new(), labels, adj }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[IdealSet] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbours(&self, v: usize) -> &ElemSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    fn bfs(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.adj[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components as sorted vertex lists.
    pub fn component_list(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for v in 0..self.order() {
            if seen[v] {
                continue;
            }
            let comp: Vec<usize> = self
                .bfs(v)
                .iter()
                .enumerate()
                .filter_map(|(i, d)| d.map(|_| i))
                .collect();
            for &c in &comp {
                seen[c] = true;
            }
            out.push(comp);
        }
        out
    }

    /// `(components, connected)`; graphs on at most one vertex are connected.
    pub fn connectivity(&self) -> (usize, bool) {
        let c = self.component_list().len();
        (c, c <= 1)
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity().1
    }

    pub fn distance(&self, a: usize, b: usize) -> Extended {
        self.bfs(a)[b].map_or(Extended::Infinite, Extended::Finite)
    }

    pub fn diameter(&self) -> Extended {
        let mut best = 0;
        for v in 0..self.order() {
            for d in self.bfs(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Extended::Infinite,
                }
            }
        }
        Extended::Finite(best)
    }

    /// Shortest cycle, via a breadth-first search from every vertex.
    pub fn girth(&self) -> Extended {
        let n = self.order();
        let mut best = usize::MAX;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Extended::Infinite
        } else {
            Extended::Finite(best)
        }
    }

    fn check_order(&self, limits: &Limits) -> Result<()> {
        if self.order() > limits.graph_order {
            return Err(Error::GraphTooLarge { order: self.order(), cap: limits.graph_order });
        }
        Ok(())
    }

    /// Every maximal clique, each sorted, by Bron-Kerbosch with pivoting.
    pub fn maximal_cliques(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        self.check_order(limits)?;
        let n = self.order();
        let mut out = Vec::new();
        if n == 0 {
            return Ok(out);
        }
        self.bron_kerbosch(&mut Vec::new(), ElemSet::full(n), ElemSet::empty(n), &mut |c| {
            let mut c = c.to_vec();
            c.sort_unstable();
            out.push(c);
        });
        out.sort();
        Ok(out)
    }

    fn bron_kerbosch(&self, r: &mut Vec<usize>, p: ElemSet, mut x: ElemSet, emit: &mut dyn FnMut(&[usize])) {
        if p.is_empty() && x.is_empty() {
            emit(r);
            return;
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| self.adj[u].intersection_len(&p))
            .expect("p or x non-empty");
        let mut p = p;
        for v in p.difference(&self.adj[pivot]).iter().collect::<Vec<_>>() {
            r.push(v);
            self.bron_kerbosch(r, p.intersection(&self.adj[v]), x.intersection(&self.adj[v]), emit);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }

    /// Exact clique number; 0 for the empty graph.
    pub fn clique_number(&self, limits: &Limits) -> Result<usize> {
        self.check_order(limits)?;
        let n = self.order();
        let mut best = 0;
        if n > 0 {
            self.max_clique(&mut 0, ElemSet::full(n), &mut best);
        }
        Ok(best)
    }

    fn max_clique(&self, depth: &mut usize, mut p: ElemSet, best: &mut usize) {
        if p.is_empty() {
            *best = (*best).max(*depth);
            return;
        }
        while let Some(v) = p.first() {
            if *depth + p.len() <= *best {
                return;
            }
            *depth += 1;
            self.max_clique(depth, p.intersection(&self.adj[v]), best);
            *depth -= 1;
            p.remove(v);
        }
    }

    /// Largest total weight of a clique, together with one optimal clique.
    pub fn max_weight_clique(&self, weights: &[usize], limits: &Limits) -> Result<(usize, Vec<usize>)> {
        assert_eq!(weights.len(), self.order());
        let best = self
            .maximal_cliques(limits)?
            .into_iter()
            .map(|c| (c.iter().map(|&v| weights[v]).sum::<usize>(), c))
            .fold((0, Vec::new()), |acc, cand| if cand.0 > acc.0 { cand } else { acc });
        Ok(best)
    }

    /// Exact domination number; 0 for the empty graph. Components are
    /// handled separately and subsets are tried in increasing size.
    pub fn domination_number(&self, limits: &Limits) -> Result<usize> {
        self.check_order(limits)?;
        let mut total = 0;
        for comp in self.component_list() {
            total += self.component_domination(&comp);
        }
        Ok(total)
    }

    fn closed(&self, v: usize) -> ElemSet {
        let mut c = self.adj[v].clone();
        c.insert(v);
        c
    }

    fn component_domination(&self, comp: &[usize]) -> usize {
        let n = self.order();
        let target = ElemSet::from_iter(n, comp.iter().copied());
        let closed: Vec<ElemSet> = comp.iter().map(|&v| self.closed(v)).collect();
        for k in 1..=comp.len() {
            if dominates_with(&closed, &target, k, 0, &ElemSet::empty(n)) {
                return k;
            }
        }
        unreachable!("the whole component dominates itself")
    }

    /// A dominating set of minimum size, lexicographically first.
    pub fn minimum_dominating_set(&self, limits: &Limits) -> Result<Vec<usize>> {
        self.check_order(limits)?;
        let n = self.order();
        let full = ElemSet::full(n);
        let closed: Vec<ElemSet> = (0..n).map(|v| self.closed(v)).collect();
        for k in 0..=n {
            let mut pick = Vec::new();
            if pick_dominating(&closed, &full, k, 0, &ElemSet::empty(n), &mut pick) {
                return Ok(pick);
            }
        }
        unreachable!()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Centre of a star, if the graph is one. `K_1` and `K_2` count as
    /// stars (with centre 0).
    pub fn star_centre(&self) -> Option<usize> {
        let n = self.order();
        if n == 0 {
            return None;
        }
        if n <= 2 {
            return (self.size() == n - 1).then_some(0);
        }
        if self.size() != n - 1 {
            return None;
        }
        (0..n).find(|&v| self.degree(v) == n - 1)
    }

    pub fn shape(&self) -> ShapeFlags {
        let n = self.order();
        let size = self.size();
        let degs = self.degree_sequence();
        ShapeFlags {
            null: size == 0,
            complete: size == n * n.saturating_sub(1) / 2,
            regular: degs.windows(2).all(|w| w[0] == w[1]),
            star: self.star_centre().is_some(),
            connected: self.is_connected(),
        }
    }

    pub fn planarity(&self, limits: &Limits) -> Planarity {
        planarity::is_planar(&self.adj, limits.planarity_order)
    }

    pub fn invariants(&self, limits: &Limits) -> Result<GraphInvariants> {
        let (components, _) = self.connectivity();
        Ok(GraphInvariants {
            order: self.order(),
            size: self.size(),
            components,
            diameter: self.diameter(),
            girth: self.girth(),
            clique_number: self.clique_number(limits)?,
            domination_number: self.domination_number(limits)?,
            degree_sequence: self.degree_sequence(),
            flags: self.shape(),
            planar: self.planarity(limits),
        })
    }

    /// The subgraph induced on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> IntersectionGraph {
        let mut edges = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    edges.push((i, j));
                }
            }
        }
        let mut g = Self::from_edges(keep.len(), &edges);
        g.labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        if !self.vertices.is_empty() {
            g.vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        }
        g
    }

    /// Byte-stable DOT text.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = alloc::format!("graph {} {{\n", dot_id(name));
        for (i, l) in self.labels.iter().enumerate() {
            out += &alloc::format!("  n{i} [label=\"{}\"];\n", escape(l));
        }
        for (a, b) in self.edges() {
            out += &alloc::format!("  n{a} -- n{b};\n");
        }
        out += "}\n";
        out
    }
}

fn dominates_with(closed: &[ElemSet], target: &ElemSet, k: usize, start: usize, acc: &ElemSet) -> bool {
    if target.is_subset(acc) {
        return true;
    }
    if k == 0 {
        return false;
    }
    (start..closed.len()).any(|i| dominates_with(closed, target, k - 1, i + 1, &acc.union(&closed[i])))
}

fn pick_dominating(closed: &[ElemSet], target: &ElemSet, k: usize, start: usize, acc: &ElemSet, pick: &mut Vec<usize>) -> bool {
    if target.is_subset(acc) {
        return true;
    }
    if k == 0 {
        return false;
    }
    for i in start..closed.len() {
        pick.push(i);
        if pick_dominating(closed, target, k - 1, i + 1, &acc.union(&closed[i]), pick) {
            return true;
        }
        pick.pop();
    }
    false
}

fn dot_id(name: &str) -> String {
    if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        name.into()
    } else {
        alloc::format!("\"{}\"", escape(name))
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn z12() -> IntersectionGraph {
        // (6),(4),(3),(2) in lattice order.
        IntersectionGraph::from_edges(4, &[(0, 2), (0, 3), (1, 3), (2, 3)])
    }

    #[test]
    fn z12_invariants() {
        let g = z12();
        let inv = g.invariants(&lim()).unwrap();
        assert_eq!(inv.size, 4);
        assert!(inv.flags.connected);
        assert_eq!(inv.diameter, Extended::Finite(2));
        assert_eq!(g.distance(1, 2), Extended::Finite(2));
        assert_eq!(inv.girth, Extended::Finite(3));
        assert_eq!(inv.clique_number, 3);
        assert_eq!(inv.domination_number, 1);
        assert_eq!(g.minimum_dominating_set(&lim()).unwrap(), vec![3]);
        assert_eq!(inv.planar, Planarity::Planar);
    }

    #[test]
    fn degenerate_graphs() {
        let e = IntersectionGraph::from_edges(0, &[]);
        assert!(e.is_connected());
        assert_eq!(e.clique_number(&lim()).unwrap(), 0);
        assert_eq!(e.domination_number(&lim()).unwrap(), 0);
        assert_eq!(e.girth(), Extended::Infinite);
        assert_eq!(e.to_dot("G"), "graph G {\n}\n");
        let one = IntersectionGraph::from_edges(1, &[]);
        assert!(one.is_connected() && one.shape().star);
        assert_eq!(one.diameter(), Extended::Finite(0));
        let two = IntersectionGraph::from_edges(2, &[]);
        assert_eq!(two.connectivity(), (2, false));
        assert_eq!(two.diameter(), Extended::Infinite);
        assert_eq!(two.clique_number(&lim()).unwrap(), 1);
        assert_eq!(two.domination_number(&lim()).unwrap(), 2);
        assert!(two.shape().null && !two.shape().star);
    }

    #[test]
    fn complete_graphs() {
        for n in 1..7 {
            let k = IntersectionGraph::complete(n);
            let s = k.shape();
            assert!(s.complete && s.regular && s.connected);
            assert_eq!(k.domination_number(&lim()).unwrap(), 1);
            assert_eq!(k.clique_number(&lim()).unwrap(), n);
        }
        assert_eq!(IntersectionGraph::complete(4).diameter(), Extended::Finite(1));
        assert_eq!(IntersectionGraph::complete(4).planarity(&lim()), Planarity::Planar);
        assert_eq!(IntersectionGraph::complete(5).planarity(&lim()), Planarity::NonPlanar);
    }

    #[test]
    fn stars_and_paths() {
        let star = IntersectionGraph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(star.star_centre(), Some(3));
        assert_eq!(star.girth(), Extended::Infinite);
        let path = IntersectionGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.star_centre(), None);
        assert_eq!(path.diameter(), Extended::Finite(3));
        let c5 = IntersectionGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(c5.girth(), Extended::Finite(5));
        assert_eq!(c5.domination_number(&lim()).unwrap(), 2);
    }

    #[test]
    fn weighted_cliques() {
        let g = z12();
        assert_eq!(g.maximal_cliques(&lim()).unwrap(), vec![vec![0, 2, 3], vec![1, 3]]);
        assert_eq!(g.max_weight_clique(&[1, 10, 1, 1], &lim()).unwrap(), (11, vec![1, 3]));
    }

    #[test]
    fn cap_is_enforced() {
        let g = IntersectionGraph::from_edges(5, &[]);
        let tight = Limits { graph_order: 4, ..lim() };
        assert!(matches!(g.clique_number(&tight), Err(Error::GraphTooLarge { order: 5, cap: 4 })));
        assert!(g.domination_number(&tight).is_err());
    }

    #[test]
    fn dot_is_stable() {
        let g = z12().with_labels(vec!["(6)".into(), "(4)".into(), "(3)".into(), "(2)".into()]);
        let dot = g.to_dot("G");
        assert_eq!(dot, g.to_dot("G"));
        assert!(dot.contains("n0 [label=\"(6)\"];"));
        assert_eq!(dot.matches("--").count(), 4);
    }
}
