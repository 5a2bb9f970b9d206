//! Three-valued planarity. Small graphs are decided by cheap counting
//! arguments; up to a configurable order the rest are decided exactly by
//! the Demoucron-Malgrange-Pertuiset face-embedding procedure run on each
//! biconnected block. Larger graphs come back `Unknown`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Planarity {
    Planar,
    NonPlanar,
    Unknown,
}

pub fn is_planar(adj: &[ElemSet], exact_limit: usize) -> Planarity {
    let n = adj.len();
    let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    if n <= 4 {
        return Planarity::Planar;
    }
    if n == 5 {
        return if m == 10 { Planarity::NonPlanar } else { Planarity::Planar };
    }
    if m > 3 * n - 6 {
        return Planarity::NonPlanar;
    }
    if n > exact_limit {
        return Planarity::Unknown;
    }
    let ok = blocks(adj).into_iter().all(|edges| block_planar(&edges));
    if ok {
        Planarity::Planar
    } else {
        Planarity::NonPlanar
    }
}

/// Edge sets of the biconnected blocks (Hopcroft-Tarjan).
fn blocks(adj: &[ElemSet]) -> Vec<Vec<(usize, usize)>> {
    struct St<'a> {
        adj: &'a [ElemSet],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut St<'_>, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        let neighbours: Vec<usize> = s.adj[u].iter().collect();
        for v in neighbours {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(v) != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = adj.len();
    let mut s = St { adj, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

fn block_planar(edges: &[(usize, usize)]) -> bool {
    let verts: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let n = verts.len();
    // A subdivided K5 or K33 has m - n >= 3, and a connected supergraph
    // cannot lower that.
    if n <= 4 || edges.len() < n + 3 {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }
    // Relabel to 0..n.
    let idx: Vec<usize> = verts.iter().copied().collect();
    let pos = |v: usize| idx.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        let (a, b) = (pos(a), pos(b));
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
        a.dedup();
    }
    dmp(&adj)
}

/// Demoucron-Malgrange-Pertuiset on a biconnected graph.
fn dmp(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let cycle = find_cycle(adj);
    let mut in_h = vec![false; n];
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        h_edges.insert(key(v, w));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];
    let total_edges: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;

    while h_edges.len() < total_edges {
        let fragments = fragments(adj, &in_h, &h_edges);
        let mut chosen: Option<(usize, usize)> = None;
        let mut fallback: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if fallback.is_none() {
                        fallback = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_i) = chosen.or(fallback).expect("fragments remain while edges remain");
        let path = fragment_path(adj, &fragments[fi], &in_h);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_i);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A cycle in a biconnected graph with at least three vertices.
fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(top) = stack.last_mut() {
        let (u, i) = *top;
        if i == adj[u].len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let v = adj[u][i];
        if depth[v] == usize::MAX {
            depth[v] = depth[u] + 1;
            parent[v] = u;
            stack.push((v, 0));
        } else if v != parent[u] && depth[v] < depth[u] {
            let mut cycle = vec![u];
            let mut w = u;
            while w != v {
                w = parent[w];
                cycle.push(w);
            }
            return cycle;
        }
    }
    unreachable!("biconnected blocks with three vertices contain a cycle")
}

struct Fragment {
    /// Vertices outside H (empty for a chord).
    inner: Vec<usize>,
    /// Endpoints for a chord.
    chord: Option<(usize, usize)>,
    attachments: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment { inner: Vec::new(), chord: Some((u, v)), attachments: vec![u, v] });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut inner = vec![s];
        seen[s] = true;
        let mut att = BTreeSet::new();
        let mut i = 0;
        while i < inner.len() {
            let u = inner[i];
            i += 1;
            for &v in &adj[u] {
                if in_h[v] {
                    att.insert(v);
                } else if !seen[v] {
                    seen[v] = true;
                    inner.push(v);
                }
            }
        }
        out.push(Fragment { inner, chord: None, attachments: att.into_iter().collect() });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let inside: BTreeSet<usize> = frag.inner.iter().copied().collect();
    let a = frag.attachments[0];
    let start = *adj[a].iter().find(|v| inside.contains(v)).expect("attachment touches fragment");
    // Breadth-first search inside the fragment until a vertex touching
    // another attachment appears.
    let mut parent = alloc::collections::BTreeMap::new();
    parent.insert(start, start);
    let mut queue = alloc::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = adj[u].iter().find(|&&b| in_h[b] && b != a) {
            let mut path = vec![b, u];
            let mut w = u;
            while w != start {
                w = parent[&w];
                path.push(w);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &v in &adj[u] {
            if inside.contains(&v) && !parent.contains_key(&v) {
                parent.insert(v, u);
                queue.push_back(v);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// Splits a face cycle along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let i = face.iter().position(|&v| v == path[0]).unwrap();
    let j = face.iter().position(|&v| v == *path.last().unwrap()).unwrap();
    let interior = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| {
        let mut w = vec![face[from]];
        let mut p = from;
        while p != to {
            p = (p + 1) % k;
            w.push(face[p]);
        }
        w
    };
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<ElemSet> {
        let mut adj = vec![ElemSet::empty(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    fn k33() -> Vec<(usize, usize)> {
        (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect()
    }

    #[test]
    fn kuratowski_graphs() {
        assert_eq!(is_planar(&graph(4, &complete(4)), 12), Planarity::Planar);
        assert_eq!(is_planar(&graph(5, &complete(5)), 12), Planarity::NonPlanar);
        assert_eq!(is_planar(&graph(6, &k33()), 12), Planarity::NonPlanar);
        let mut k5_minus = complete(5);
        k5_minus.pop();
        assert_eq!(is_planar(&graph(5, &k5_minus), 12), Planarity::Planar);
    }

    #[test]
    fn subdivisions_are_found() {
        // K33 with one edge subdivided through vertex 6.
        let mut e = k33();
        e.retain(|&x| x != (0, 3));
        e.push((0, 6));
        e.push((6, 3));
        assert_eq!(is_planar(&graph(7, &e), 12), Planarity::NonPlanar);
        // Petersen graph.
        let mut p = Vec::new();
        for i in 0..5 {
            p.push((i, (i + 1) % 5));
            p.push((i, i + 5));
            p.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(is_planar(&graph(10, &p), 12), Planarity::NonPlanar);
    }

    #[test]
    fn planar_families() {
        // Octahedron, cube, wheel.
        let oct: Vec<(usize, usize)> = complete(6).into_iter().filter(|&(a, b)| b != a + 3).collect();
        assert_eq!(is_planar(&graph(6, &oct), 12), Planarity::Planar);
        let cube = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)];
        assert_eq!(is_planar(&graph(8, &cube), 12), Planarity::Planar);
        let mut wheel: Vec<(usize, usize)> = (1..9).map(|i| (0, i)).collect();
        wheel.extend((1..9).map(|i| (i, i % 8 + 1)));
        assert_eq!(is_planar(&graph(9, &wheel), 12), Planarity::Planar);
        // Two K4 blocks sharing a cut vertex.
        let mut two = complete(4);
        two.extend([(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]);
        assert_eq!(is_planar(&graph(7, &two), 12), Planarity::Planar);
    }

    #[test]
    fn edge_bound_and_cap() {
        assert_eq!(is_planar(&graph(13, &complete(13)), 12), Planarity::NonPlanar);
        let cycle: Vec<(usize, usize)> = (0..13).map(|i| (i, (i + 1) % 13)).collect();
        assert_eq!(is_planar(&graph(13, &cycle), 12), Planarity::Unknown);
    }
}
