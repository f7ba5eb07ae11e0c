//! Fixed loci of the torus action on spaces of stable maps to the line (or a
//! higher projective target): decorated trees whose vertices carry a fixed
//! point label and a set of marks, and whose edges carry a covering degree.

use std::collections::{BTreeSet, HashSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVertex {
    /// Index of the target fixed point, in `0..=r`.
    pub label: u32,
    /// Marks placed at this vertex, strictly increasing.
    pub marks: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    /// Degree of the covering on this edge, at least 1.
    pub degree: u32,
}

/// A decorated tree indexing one fixed locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedGraph {
    pub verts: Vec<GraphVertex>,
    pub edges: Vec<GraphEdge>,
}

impl FixedGraph {
    pub fn new(verts: Vec<GraphVertex>, edges: Vec<GraphEdge>) -> Self {
        let g = FixedGraph { verts, edges };
        for e in &g.edges {
            assert!(e.a < g.verts.len() && e.b < g.verts.len() && e.a != e.b);
            assert!(e.degree >= 1);
            assert_ne!(
                g.verts[e.a].label, g.verts[e.b].label,
                "edge endpoints map to distinct fixed points"
            );
        }
        for v in &g.verts {
            assert!(v.marks.windows(2).all(|w| w[0] < w[1]));
        }
        g
    }

    pub fn total_degree(&self) -> u32 {
        self.edges.iter().map(|e| e.degree).sum()
    }

    pub fn n_marks(&self) -> usize {
        self.verts.iter().map(|v| v.marks.len()).sum()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
    }

    /// Marks plus incident edges: the number of special points on the
    /// contracted component at `v`.
    pub fn special_count(&self, v: usize) -> usize {
        self.verts[v].marks.len() + self.valence(v)
    }

    /// Indices of edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].a == v || self.edges[i].b == v)
            .collect()
    }

    pub fn edge_other(&self, e: usize, v: usize) -> usize {
        let ed = &self.edges[e];
        if ed.a == v {
            ed.b
        } else {
            debug_assert_eq!(ed.b, v);
            ed.a
        }
    }

    /// Vertex carrying the given mark.
    pub fn mark_vertex(&self, mark: u32) -> usize {
        self.verts
            .iter()
            .position(|v| v.marks.contains(&mark))
            .expect("mark present")
    }

    /// Whether some vertex has four special points (the only positive
    /// dimensional feature at the degrees in range here).
    pub fn has_m04_vertex(&self) -> bool {
        (0..self.verts.len()).any(|v| self.special_count(v) == 4)
    }

    /// Vertices reachable from `start` without crossing edge `blocked`.
    pub fn side_of(&self, start: usize, blocked: usize) -> Vec<usize> {
        let mut seen = vec![false; self.verts.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for e in self.incident_edges(v) {
                if e == blocked {
                    continue;
                }
                let w = self.edge_other(e, v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.verts.len()).filter(|&v| seen[v]).collect()
    }

    fn encode_rooted(&self, v: usize, parent_edge: Option<usize>) -> String {
        let mut kids: Vec<String> = self
            .incident_edges(v)
            .into_iter()
            .filter(|&e| Some(e) != parent_edge)
            .map(|e| {
                format!(
                    "e{}:{}",
                    self.edges[e].degree,
                    self.encode_rooted(self.edge_other(e, v), Some(e))
                )
            })
            .collect();
        kids.sort();
        format!(
            "(l{};m{:?};{})",
            self.verts[v].label,
            self.verts[v].marks,
            kids.join(",")
        )
    }

    /// Isomorphism-invariant encoding: root at the tree center.
    pub fn canonical_key(&self) -> String {
        let n = self.verts.len();
        assert!(n >= 1);
        if n == 1 {
            return self.encode_rooted(0, None);
        }
        let mut removed = vec![false; n];
        let mut remaining = n;
        while remaining > 2 {
            let leaves: Vec<usize> = (0..n)
                .filter(|&v| {
                    !removed[v]
                        && self
                            .incident_edges(v)
                            .iter()
                            .filter(|&&e| {
                                let w = self.edge_other(e, v);
                                !removed[w]
                            })
                            .count()
                            <= 1
                })
                .collect();
            for v in leaves {
                removed[v] = true;
                remaining -= 1;
            }
        }
        let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        if centers.len() == 1 {
            self.encode_rooted(centers[0], None)
        } else {
            let (c1, c2) = (centers[0], centers[1]);
            let e = self
                .incident_edges(c1)
                .into_iter()
                .find(|&e| self.edge_other(e, c1) == c2)
                .expect("the two centers are adjacent");
            let s1 = self.encode_rooted(c1, Some(e));
            let s2 = self.encode_rooted(c2, Some(e));
            let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
            format!("B{}[{}][{}]", self.edges[e].degree, lo, hi)
        }
    }

    /// Order of the decorated-tree automorphism group.
    pub fn graph_aut(&self) -> u64 {
        let n = self.verts.len();
        let edge_set: BTreeSet<(usize, usize, u32)> = self
            .edges
            .iter()
            .map(|e| (e.a.min(e.b), e.a.max(e.b), e.degree))
            .collect();
        let mut count = 0u64;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let ok = (0..n).all(|v| self.verts[p[v]] == self.verts[v])
                && self
                    .edges
                    .iter()
                    .all(|e| edge_set.contains(&(p[e.a].min(p[e.b]), p[e.a].max(p[e.b]), e.degree)));
            if ok {
                count += 1;
            }
        });
        count
    }

    /// The localization denominator order: automorphisms of the tree times
    /// the product of the edge degrees (deck transformations of the covers).
    pub fn aut_order(&self) -> u64 {
        self.edges.iter().map(|e| e.degree as u64).product::<u64>() * self.graph_aut()
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// All decorated trees with `n` marks, total degree `d >= 1`, labels in
/// `0..=r`, up to isomorphism, sorted by canonical key.
pub fn enumerate_fixed_graphs(n: u32, d: u32, r: u32) -> Vec<FixedGraph> {
    assert!(d >= 1);
    let mut out: Vec<FixedGraph> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for v in 2..=(d + 1) as usize {
        assert!(v <= 8, "vertex count out of supported range");
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| ((a + 1)..v).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            if mask.count_ones() as usize != v - 1 {
                continue;
            }
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if !spanning(v, &chosen) {
                continue;
            }
            for degs in compositions(d, v - 1) {
                for labels in label_maps(v, r, &chosen) {
                    for marks in mark_maps(n, v) {
                        let verts: Vec<GraphVertex> = (0..v)
                            .map(|i| GraphVertex {
                                label: labels[i],
                                marks: (1..=n).filter(|&m| marks[(m - 1) as usize] == i).collect(),
                            })
                            .collect();
                        let edges: Vec<GraphEdge> = chosen
                            .iter()
                            .zip(&degs)
                            .map(|(&(a, b), &degree)| GraphEdge { a, b, degree })
                            .collect();
                        let g = FixedGraph::new(verts, edges);
                        if seen.insert(g.canonical_key()) {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|g| g.canonical_key());
    out
}

fn spanning(v: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    let mut comps = v;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=(total + 1 - parts as u32) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn label_maps(v: usize, r: u32, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; v];
    fn rec(
        i: usize,
        v: usize,
        r: u32,
        edges: &[(usize, usize)],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == v {
            out.push(cur.clone());
            return;
        }
        'next: for l in 0..=r {
            for &(a, b) in edges {
                if (a == i && b < i && cur[b] == l) || (b == i && a < i && cur[a] == l) {
                    continue 'next;
                }
            }
            cur[i] = l;
            rec(i + 1, v, r, edges, cur, out);
        }
    }
    rec(0, v, r, edges, &mut cur, &mut out);
    out
}

fn mark_maps(n: u32, v: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..v).map(move |t| {
                    let mut m2 = m.clone();
                    m2.push(t);
                    m2
                })
            })
            .collect();
    }
    out
}

fn g(verts: &[(u32, &[u32])], edges: &[(usize, usize, u32)]) -> FixedGraph {
    FixedGraph::new(
        verts
            .iter()
            .map(|&(label, marks)| GraphVertex {
                label,
                marks: marks.to_vec(),
            })
            .collect(),
        edges
            .iter()
            .map(|&(a, b, degree)| GraphEdge { a, b, degree })
            .collect(),
    )
}

/// The fourteen fixed-locus graphs for two marks, degree two, target the
/// line, in catalog order.
pub fn catalog_m02d2() -> Vec<FixedGraph> {
    vec![
        g(&[(0, &[1]), (1, &[2])], &[(0, 1, 2)]),
        g(&[(0, &[2]), (1, &[1])], &[(0, 1, 2)]),
        g(&[(0, &[1, 2]), (1, &[])], &[(0, 1, 2)]),
        g(&[(0, &[]), (1, &[1, 2])], &[(0, 1, 2)]),
        g(&[(1, &[1, 2]), (0, &[]), (1, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(0, &[1, 2]), (1, &[]), (0, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(1, &[1]), (0, &[2]), (1, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(0, &[1]), (1, &[2]), (0, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(1, &[2]), (0, &[1]), (1, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(0, &[2]), (1, &[1]), (0, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(1, &[]), (0, &[1, 2]), (1, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(0, &[]), (1, &[1, 2]), (0, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(1, &[1]), (0, &[]), (1, &[2])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(0, &[1]), (1, &[]), (0, &[2])], &[(0, 1, 1), (1, 2, 1)]),
    ]
}

/// The six fixed-locus graphs for one mark, degree two, target the line.
pub fn catalog_m01d2() -> Vec<FixedGraph> {
    vec![
        g(&[(0, &[1]), (1, &[])], &[(0, 1, 2)]),
        g(&[(1, &[1]), (0, &[])], &[(0, 1, 2)]),
        g(&[(1, &[1]), (0, &[]), (1, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(0, &[1]), (1, &[]), (0, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(1, &[]), (0, &[1]), (1, &[])], &[(0, 1, 1), (1, 2, 1)]),
        g(&[(0, &[]), (1, &[1]), (0, &[])], &[(0, 1, 1), (1, 2, 1)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_fixed_graphs(2, 2, 1).len(), 14);
        assert_eq!(enumerate_fixed_graphs(1, 2, 1).len(), 6);
        assert_eq!(enumerate_fixed_graphs(0, 1, 1).len(), 1);
    }

    #[test]
    fn catalogs_match_enumeration() {
        let by_key = |gs: &[FixedGraph]| -> BTreeSet<String> {
            gs.iter().map(|g| g.canonical_key()).collect()
        };
        let cat2 = catalog_m02d2();
        let cat1 = catalog_m01d2();
        assert_eq!(cat2.len(), 14);
        assert_eq!(cat1.len(), 6);
        // Catalog entries are pairwise distinct and exhaust the enumeration.
        assert_eq!(by_key(&cat2).len(), 14);
        assert_eq!(by_key(&cat1).len(), 6);
        assert_eq!(by_key(&cat2), by_key(&enumerate_fixed_graphs(2, 2, 1)));
        assert_eq!(by_key(&cat1), by_key(&enumerate_fixed_graphs(1, 2, 1)));
    }

    #[test]
    fn vertex_count_split() {
        // Two marks: four graphs on a single degree-two edge, ten chains.
        let cat = catalog_m02d2();
        assert_eq!(cat.iter().filter(|g| g.verts.len() == 2).count(), 4);
        assert_eq!(cat.iter().filter(|g| g.verts.len() == 3).count(), 10);
        // One mark: two plus four.
        let cat = catalog_m01d2();
        assert_eq!(cat.iter().filter(|g| g.verts.len() == 2).count(), 2);
        assert_eq!(cat.iter().filter(|g| g.verts.len() == 3).count(), 4);
    }

    #[test]
    fn automorphism_orders() {
        let expected2: [u64; 14] = [2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 2, 2, 1, 1];
        for (g, want) in catalog_m02d2().iter().zip(expected2) {
            assert_eq!(g.aut_order(), want, "{}", g.canonical_key());
        }
        let expected1: [u64; 6] = [2, 2, 1, 1, 2, 2];
        for (g, want) in catalog_m01d2().iter().zip(expected1) {
            assert_eq!(g.aut_order(), want, "{}", g.canonical_key());
        }
    }

    #[test]
    fn canonical_key_is_invariant_under_relabeling() {
        for graph in catalog_m02d2().iter().chain(catalog_m01d2().iter()) {
            let n = graph.verts.len();
            // Reverse the vertex order as a nontrivial relabeling.
            let perm: Vec<usize> = (0..n).rev().collect();
            let relabeled = FixedGraph::new(
                perm.iter().map(|&i| graph.verts[i].clone()).collect(),
                graph
                    .edges
                    .iter()
                    .map(|e| GraphEdge {
                        a: perm.iter().position(|&i| i == e.a).unwrap(),
                        b: perm.iter().position(|&i| i == e.b).unwrap(),
                        degree: e.degree,
                    })
                    .collect(),
            );
            assert_eq!(graph.canonical_key(), relabeled.canonical_key());
        }
    }

    #[test]
    fn special_point_census() {
        let cat = catalog_m02d2();
        for (i, g) in cat.iter().enumerate() {
            for v in 0..g.verts.len() {
                assert!(g.special_count(v) <= 4);
            }
            // Exactly the two graphs with both marks on a trivalent chain
            // middle acquire a moving node.
            assert_eq!(g.has_m04_vertex(), i == 10 || i == 11);
        }
        for g in catalog_m01d2() {
            assert!(!g.has_m04_vertex());
        }
    }

    #[test]
    fn side_splits() {
        // Chain 1{1} - 0 - 1{2}: cutting the first edge at the middle vertex
        // separates vertex 0 from the rest.
        let g = &catalog_m02d2()[12];
        assert_eq!(g.side_of(0, 0), vec![0]);
        assert_eq!(g.side_of(1, 0), vec![1, 2]);
        assert_eq!(g.total_degree(), 2);
        assert_eq!(g.mark_vertex(1), 0);
        assert_eq!(g.mark_vertex(2), 2);
    }
}
