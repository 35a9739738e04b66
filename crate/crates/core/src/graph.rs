//! Immutable simple undirected graphs and edge contraction.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored per vertex as a [`VertexSet`]; the sorted edge list
/// (each edge as `(u, v)` with `u < v`) is kept alongside for iteration and
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![VertexSet::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adjacency[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[v].insert(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Self {
            adjacency,
            edges: list,
        })
    }

    /// Like [`Graph::new`] but silently drops loops and repeated edges.
    pub fn simplified(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<_> = edges
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::new(n, list)
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple")
    }

    /// Star with `leaves` leaves `0..leaves` and the center as the last vertex.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (0..leaves).map(|i| (i, leaves))).expect("simple")
    }

    pub fn grid(rows: usize, cols: usize) -> Self {
        let id = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        Self::new(rows * cols, edges).expect("simple")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].contains(v)
    }

    /// Open neighborhood `N(S) = (⋃_{v ∈ S} N(v)) \ S`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out.union_with(&self.adjacency[v]);
        }
        out.difference_with(s);
        out
    }

    /// Whether some edge joins `a` and `b`.
    pub fn sets_adjacent(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().any(|v| self.adjacency[v].intersects(b))
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = VertexSet::singleton(start);
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in &frontier {
                next.union_with(&self.adjacency[v]);
            }
            next = next.intersection(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Whether `G[s]` is connected. The empty set is not connected.
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.reach(v, s).len() == s.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected_set(&self.vertices())
    }

    /// Connected components of `G[s]`, ordered by smallest member.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// `G[s]` relabelled to `0..|s|` in ascending order of original id, with
    /// the map from new ids back to original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let back: Vec<usize> = s.to_vec();
        let mut forward = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in back.iter().enumerate() {
            forward[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| s.contains(*u) && s.contains(*v))
            .map(|&(u, v)| (forward[u], forward[v]));
        let g = Graph::new(back.len(), edges).expect("induced subgraph is simple");
        (g, back)
    }

    /// Adds `extra` isolated vertices followed by the given edges.
    pub fn with_extra(&self, extra: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Graph::new(
            self.vertex_count() + extra,
            self.edges.iter().copied().chain(edges),
        )
    }

    /// Breadth-first distances from `source`; unreachable vertices get `None`.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have distances");
            for u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Whether the graph itself is the path `P_n` (a single vertex counts).
    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        n >= 1
            && self.edge_count() == n - 1
            && self.is_connected()
            && (0..n).all(|v| self.degree(v) <= 2)
    }

    /// Whether the graph itself is the cycle `C_n` with `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.is_connected() && (0..n).all(|v| self.degree(v) == 2)
    }

    /// Contracts a single edge; see [`Graph::contract_edges`] for the labelling.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.contract_edges(&[(u, v)])
    }

    /// Contracts every edge of `f` at once.
    ///
    /// Each connected component of `(V, F)` collapses to one vertex. The new
    /// ids are assigned in ascending order of each component's smallest
    /// original id, so surviving vertices keep their relative order. Returns
    /// the contracted graph and the map from original to new ids.
    pub fn contract_edges(&self, f: &[(usize, usize)]) -> Result<(Graph, Vec<usize>)> {
        let n = self.vertex_count();
        let mut merged = vec![VertexSet::new(); n];
        for &(u, v) in f {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidEdge(u, v));
            }
            merged[u].insert(v);
            merged[v].insert(u);
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(x) = stack.pop() {
                for y in &merged[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (label[a], label[b]));
        let g = Graph::simplified(next, edges)?;
        Ok((g, label))
    }

    /// Contracts each part of a vertex partition to one vertex, part `i`
    /// becoming vertex `i`. Parts are assumed disjoint, covering, non-empty.
    pub fn quotient(&self, parts: &[VertexSet]) -> Graph {
        let mut owner = vec![usize::MAX; self.vertex_count()];
        for (i, p) in parts.iter().enumerate() {
            for v in p {
                owner[v] = i;
            }
        }
        let edges = self.edges.iter().map(|&(a, b)| (owner[a], owner[b]));
        Graph::simplified(parts.len(), edges).expect("partition covers the graph")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn contract_path_end() {
        let (g, map) = Graph::path(3).contract_edge(0, 1).unwrap();
        assert_eq!(g, Graph::path(2));
        assert_eq!(map, vec![0, 0, 1]);
    }

    #[test]
    fn contract_triangle_collapses_parallel_edge() {
        let (g, _) = Graph::cycle(3).contract_edge(1, 2).unwrap();
        assert_eq!(g, Graph::path(2));
    }

    #[test]
    fn contract_k4_edges_gives_k3() {
        let k4 = Graph::complete(4);
        for &(u, v) in k4.edges() {
            let (g, _) = k4.contract_edge(u, v).unwrap();
            assert_eq!(g, Graph::complete(3));
        }
    }

    #[test]
    fn contract_missing_edge_fails() {
        assert_eq!(
            Graph::path(3).contract_edge(0, 2).unwrap_err(),
            Error::InvalidEdge(0, 2)
        );
        assert!(Graph::path(3).contract_edges(&[(0, 1), (2, 0)]).is_err());
    }

    #[test]
    fn contract_edge_sets() {
        let (g, _) = Graph::path(5).contract_edges(&[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g, Graph::path(3));

        let (g, _) = Graph::cycle(6).contract_edges(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g, Graph::cycle(3));

        let c = Graph::cycle(5);
        let (g, map) = c.contract_edges(&[]).unwrap();
        assert_eq!(g, c);
        assert_eq!(map, (0..5).collect::<Vec<_>>());
    }

    /// Component-collapse oracle for C6 with a perfect matching contracted:
    /// parts {0,1},{2,3},{4,5} pairwise adjacent → triangle.
    #[test]
    fn c6_matching_quotient_agrees() {
        let c6 = Graph::cycle(6);
        let q = c6.quotient(&[set(&[0, 1]), set(&[2, 3]), set(&[4, 5])]);
        let (g, _) = c6.contract_edges(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g, q);
    }

    #[test]
    fn components_are_ordered_by_minimum() {
        let p4 = Graph::path(4);
        assert_eq!(p4.components(&set(&[0, 1, 3])), vec![set(&[0, 1]), set(&[3])]);
        assert!(p4.components(&VertexSet::new()).is_empty());
        let c6 = Graph::cycle(6);
        assert_eq!(
            c6.components(&set(&[4, 0, 2])),
            vec![set(&[0]), set(&[2]), set(&[4])]
        );
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = Graph::cycle(5);
        let (g, back) = c5.induced_subgraph(&set(&[1, 2, 4]));
        assert_eq!(back, vec![1, 2, 4]);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        loop {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            if g.is_connected() {
                return g;
            }
        }
    }

    fn spanning_forest_size(n: usize, f: &[(usize, usize)]) -> usize {
        let g = Graph::simplified(n, f.iter().copied()).unwrap();
        n - g.components(&g.vertices()).len()
    }

    #[test]
    fn contraction_is_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..=10);
            let g = random_connected(&mut rng, n);
            let mut f: Vec<_> = g
                .edges()
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.35))
                .collect();
            let (all_at_once, _) = g.contract_edges(&f).unwrap();

            f.shuffle(&mut rng);
            let mut cur = g.clone();
            // Track where each original vertex currently lives.
            let mut at: Vec<usize> = (0..n).collect();
            for &(u, v) in &f {
                let (a, b) = (at[u], at[v]);
                if a == b {
                    continue;
                }
                let (next, map) = cur.contract_edge(a, b).unwrap();
                for x in at.iter_mut() {
                    *x = map[*x];
                }
                cur = next;
            }
            assert_eq!(cur, all_at_once);
            assert_eq!(cur.vertex_count(), n - spanning_forest_size(n, &f));
            assert!(cur.is_connected());
        }
    }

    #[test]
    fn forest_contraction_removes_one_vertex_per_edge() {
        let g = Graph::grid(3, 3);
        let f = [(0, 1), (1, 2), (3, 6)];
        let (h, _) = g.contract_edges(&f).unwrap();
        assert_eq!(h.vertex_count(), 9 - f.len());
    }

    #[test]
    fn shape_predicates() {
        assert!(Graph::path(1).is_path());
        assert!(Graph::path(4).is_path());
        assert!(!Graph::cycle(4).is_path());
        assert!(Graph::cycle(4).is_cycle());
        assert!(!Graph::complete(4).is_cycle());
        assert!(Graph::complete(3).is_cycle());
    }
}
