//! Immutable simple undirected graphs with bit-vector adjacency.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::vertex_set::{full_mask, members, VertexSet, MAX_ORDER};

/// A simple undirected graph on the vertices `0..n`.
///
/// Every vertex carries a string label; internal ids are dense and 0-based.
/// Adjacency is stored as one open-neighborhood word per vertex.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    open: Vec<u64>,
    size: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.open == other.open
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Parallel edges are merged; labels
    /// default to the decimal vertex ids.
    pub fn new(n: usize, edges: &[(usize, usize)], labels: Option<Vec<String>>) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut open = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            open[u] |= 1 << v;
            open[v] |= 1 << u;
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::LabelCount {
                    expected: n,
                    got: l.len(),
                })
            }
            Some(l) => l,
            None => (0..n).map(|v| v.to_string()).collect(),
        };
        Graph::from_parts(labels, open)
    }

    /// Unlabeled convenience constructor.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::new(n, edges, None)
    }

    pub(crate) fn from_parts(labels: Vec<String>, open: Vec<u64>) -> Result<Graph> {
        let mut index = HashMap::with_capacity(labels.len());
        for (v, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), v).is_some() {
                return Err(Error::LabelConflict(l.clone()));
            }
        }
        let size = open.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2;
        Ok(Graph {
            labels,
            index,
            open,
            size,
        })
    }

    /// Graph with the same adjacency and new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.order() {
            return Err(Error::LabelCount {
                expected: self.order(),
                got: labels.len(),
            });
        }
        Graph::from_parts(labels, self.open.clone())
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("complete graph within word size")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path within word size")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("cycle within word size")
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).expect("empty graph within word size")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.open.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex_or_err(&self, label: &str) -> Result<usize> {
        self.vertex(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn set_labels(&self, s: &VertexSet) -> Vec<String> {
        let mut out: Vec<String> = s.iter().map(|v| self.labels[v].clone()).collect();
        out.sort();
        out
    }

    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.vertex_or_err(l.as_ref())?)?;
        }
        Ok(s)
    }

    #[inline]
    pub fn all_mask(&self) -> u64 {
        full_mask(self.order())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.order())
    }

    #[inline]
    pub fn open_mask(&self, v: usize) -> u64 {
        self.open[v]
    }

    #[inline]
    pub fn closed_mask(&self, v: usize) -> u64 {
        self.open[v] | 1 << v
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits_unchecked(self.order(), self.open[v]))
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits_unchecked(
            self.order(),
            self.closed_mask(v),
        ))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.open[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.open[v].count_ones() as usize
    }

    /// Δ(G); zero for the empty vertex set.
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.open.iter().any(|&w| w == 0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.order() {
            for v in members(self.open[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// The set of vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in members(frontier) {
                next |= self.open[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.all_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(VertexSet::from_bits_unchecked(self.order(), c));
            left &= !c;
        }
        out
    }

    /// True iff a single search from vertex 0 reaches every vertex. The
    /// graph without vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(0) == self.all_mask()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in members(self.open[u]) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Wiener index: the sum of shortest-path distances over unordered pairs.
    pub fn wiener_index(&self) -> Result<u64> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let mut total = 0u64;
        for u in 0..self.order() {
            for d in self.distances_from(u).into_iter().skip(u + 1) {
                total += d.expect("connected") as u64;
            }
        }
        Ok(total)
    }

    /// Relabels vertex `v` as `perm[v]`; labels travel with their vertices.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        let mut hit = 0u64;
        for &p in perm {
            if p >= n || hit >> p & 1 == 1 {
                return Err(Error::NotAPermutation(n));
            }
            hit |= 1 << p;
        }
        let mut open = vec![0u64; n];
        let mut labels = vec![String::new(); n];
        for u in 0..n {
            labels[perm[u]] = self.labels[u].clone();
            for v in members(self.open[u]) {
                open[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_parts(labels, open)
    }

    /// True iff `self` has the same order as `host` and every edge of `self`
    /// is an edge of `host`.
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.order() == host.order()
            && self
                .open
                .iter()
                .zip(&host.open)
                .all(|(h, g)| h & !g == 0)
    }

    /// Adjacency comparison that ignores labels.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.open == other.open
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut open = self.open.clone();
        open[u] &= !(1 << v);
        open[v] &= !(1 << u);
        Graph::from_parts(self.labels.clone(), open).expect("labels unchanged")
    }

    /// Spanning forest grown by BFS from the smallest vertex of each
    /// component.
    pub fn bfs_spanning_forest(&self) -> Graph {
        let n = self.order();
        let mut open = vec![0u64; n];
        let mut seen = 0u64;
        for root in 0..n {
            if seen >> root & 1 == 1 {
                continue;
            }
            seen |= 1 << root;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in members(self.open[u] & !seen) {
                    seen |= 1 << w;
                    open[u] |= 1 << w;
                    open[w] |= 1 << u;
                    queue.push_back(w);
                }
            }
        }
        Graph::from_parts(self.labels.clone(), open).expect("labels unchanged")
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for root in 0..self.order() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for w in members(self.open[u]) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| self.open[u] & self.open[v] == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Graph {
        let pairs = [
            (1, 2), (1, 9), (1, 8), (2, 9), (2, 8), (2, 3), (3, 8),
            (3, 4), (3, 7), (4, 7), (4, 5), (5, 6), (6, 7), (8, 9),
        ];
        let edges: Vec<_> = pairs.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        let labels = (1..=9).map(|i| format!("a{i}")).collect();
        Graph::new(9, &edges, Some(labels)).unwrap()
    }

    fn labels_of(g: &Graph, s: VertexSet) -> Vec<String> {
        g.set_labels(&s)
    }

    #[test]
    fn constructor_edge_cases() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap();
        assert_eq!(k3.size(), 3);
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::InvalidEdge(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        let dup = Graph::new(2, &[], Some(vec!["x".into(), "x".into()]));
        assert_eq!(dup, Err(Error::LabelConflict("x".into())));
        assert!(Graph::from_edges(65, &[]).is_err());
        assert_eq!(k1.label(0), "0");
    }

    #[test]
    fn closed_neighborhoods_of_fixture() {
        let g = f9();
        let expect = [
            ("a1", vec!["a1", "a2", "a8", "a9"]),
            ("a2", vec!["a1", "a2", "a3", "a8", "a9"]),
            ("a3", vec!["a2", "a3", "a4", "a7", "a8"]),
            ("a4", vec!["a3", "a4", "a5", "a7"]),
            ("a5", vec!["a4", "a5", "a6"]),
            ("a6", vec!["a5", "a6", "a7"]),
            ("a7", vec!["a3", "a4", "a6", "a7"]),
            ("a8", vec!["a1", "a2", "a3", "a8", "a9"]),
            ("a9", vec!["a1", "a2", "a8", "a9"]),
        ];
        for (v, nb) in expect {
            let s = g.closed_neighborhood(g.vertex(v).unwrap()).unwrap();
            assert_eq!(labels_of(&g, s), nb, "N[{v}]");
        }
        assert_eq!(g.size(), 14);
        assert_eq!(g.max_degree(), 4);
        assert!(g.is_connected());
    }

    #[test]
    fn small_neighborhoods() {
        let k1 = Graph::complete(1);
        assert_eq!(k1.closed_neighborhood(0).unwrap().to_vec(), vec![0]);
        let c4 = Graph::cycle(4);
        assert_eq!(c4.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1, 3]);
        assert!(c4.closed_neighborhood(4).is_err());
    }

    #[test]
    fn degrees_and_connectivity() {
        assert_eq!(Graph::complete(6).max_degree(), 5);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.max_degree(), 4);
        assert!(Graph::complete(1).is_connected());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.components().len(), 2);
    }

    #[test]
    fn wiener_index_values() {
        assert_eq!(Graph::complete(3).wiener_index(), Ok(3));
        assert_eq!(Graph::path(3).wiener_index(), Ok(4));
        assert_eq!(f9().wiener_index(), Ok(74));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.wiener_index(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn permutation_behaviour() {
        let c4 = Graph::cycle(4);
        assert!(c4.permute(&[0, 1, 2, 3]).unwrap().same_adjacency(&c4));
        assert!(c4.permute(&[1, 2, 3, 0]).unwrap().same_adjacency(&c4));
        assert_eq!(c4.permute(&[0, 0, 1, 2]), Err(Error::NotAPermutation(4)));
        assert_eq!(c4.permute(&[0, 1]), Err(Error::NotAPermutation(4)));
        let p = Graph::path(4).permute(&[3, 0, 2, 1]).unwrap();
        assert_eq!(p.label(3), "0");
        assert!(p.has_edge(3, 0));
    }

    #[test]
    fn spanning_subgraphs() {
        let p4 = Graph::path(4);
        let c4 = Graph::cycle(4);
        assert!(p4.is_spanning_subgraph_of(&c4));
        assert!(!c4.is_spanning_subgraph_of(&p4));
        let g = f9();
        let tree = g.bfs_spanning_forest();
        assert_eq!(tree.size(), 8);
        assert!(tree.is_connected());
        assert!(tree.is_spanning_subgraph_of(&g));
    }
}
