//! Staged branch-and-bound for γ and for the domination degree.

use super::{dominated, irredundant_mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{members, VertexSet};

struct CoverSearch<'g> {
    g: &'g Graph,
    full: u64,
    /// Reject partial sets that stop being irredundant.
    irredundant: bool,
}

impl CoverSearch<'_> {
    /// Looks for a dominating set `s ∪ X` with `|X| <= budget`.
    fn extend(&self, s: u64, covered: u64, budget: usize) -> Option<u64> {
        if covered == self.full {
            return Some(s);
        }
        if budget == 0 {
            return None;
        }
        let uncovered = self.full & !covered;
        if !self.can_cover(s, uncovered, budget) {
            return None;
        }
        // branch on the uncovered vertex with the fewest possible dominators
        let pivot = members(uncovered)
            .min_by_key(|&u| self.g.closed_mask(u).count_ones())
            .expect("uncovered is nonempty");
        for x in members(self.g.closed_mask(pivot)) {
            let t = s | 1 << x;
            if self.irredundant && !irredundant_mask(self.g, t) {
                continue;
            }
            if let Some(found) = self.extend(t, covered | self.g.closed_mask(x), budget - 1) {
                return Some(found);
            }
        }
        None
    }

    /// The `budget` largest coverage gains must reach every uncovered vertex.
    fn can_cover(&self, s: u64, uncovered: u64, budget: usize) -> bool {
        let need = uncovered.count_ones() as usize;
        let mut gains: Vec<usize> = members(self.full & !s)
            .map(|x| (self.g.closed_mask(x) & uncovered).count_ones() as usize)
            .filter(|&c| c > 0)
            .collect();
        if gains.len() > budget {
            gains.select_nth_unstable_by(budget - 1, |a, b| b.cmp(a));
            gains.truncate(budget);
        }
        gains.iter().sum::<usize>() >= need
    }
}

/// A minimum dominating set, found by trying cardinalities from the
/// `⌈n/(1+Δ)⌉` lower bound upward.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let n = g.order();
    if n == 0 {
        return g.empty_set();
    }
    let search = CoverSearch {
        g,
        full: g.all_mask(),
        irredundant: false,
    };
    let lower = n.div_ceil(1 + g.max_degree());
    for k in lower..=n {
        if let Some(s) = search.extend(0, 0, k) {
            return VertexSet::from_bits_unchecked(n, s);
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// γ(G).
pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

pub(crate) fn degree_witness_from(g: &Graph, v: usize, lower: usize) -> Result<VertexSet> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    let search = CoverSearch {
        g,
        full: g.all_mask(),
        irredundant: true,
    };
    let start = 1u64 << v;
    let covered = dominated(g, start);
    for k in lower.max(1)..=n {
        if let Some(s) = search.extend(start, covered, k - 1) {
            return Ok(VertexSet::from_bits_unchecked(n, s));
        }
    }
    Err(Error::InternalInvariantViolation(format!(
        "no minimal dominating set contains vertex {v}"
    )))
}

/// One minimum-cardinality minimal dominating set containing `v`.
pub fn degree_witness(g: &Graph, v: usize) -> Result<VertexSet> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    degree_witness_from(g, v, domination_number(g))
}

/// The domination degree of `v`.
pub fn domination_degree(g: &Graph, v: usize) -> Result<usize> {
    degree_witness(g, v).map(|s| s.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_minimal_dominating;
    use crate::domination::tests::f9;

    fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for (i, p) in pairs.iter().enumerate() {
            for (j, q) in pairs.iter().enumerate().skip(i + 1) {
                if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn gamma_values() {
        assert_eq!(domination_number(&petersen()), 3);
        assert_eq!(domination_number(&Graph::complete(7)), 1);
        assert_eq!(domination_number(&Graph::cycle(9)), 3);
        assert_eq!(domination_number(&Graph::empty(4)), 4);
    }

    #[test]
    fn degree_values() {
        let p = petersen();
        for v in 0..10 {
            assert_eq!(domination_degree(&p, v), Ok(3));
        }
        assert_eq!(domination_degree(&Graph::complete(5), 3), Ok(1));
        let g = f9();
        let a2 = g.vertex("a2").unwrap();
        assert_eq!(domination_degree(&g, a2), Ok(3));
        assert!(matches!(
            domination_degree(&g, 9),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn witness_is_minimal_and_contains_vertex() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let w = degree_witness(&star, 2).unwrap();
        assert_eq!(w.to_vec(), vec![1, 2, 3, 4]);
        assert!(is_minimal_dominating(&star, &w));
    }

    #[test]
    fn isolated_vertices_are_in_every_dominating_set() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(domination_number(&g), 3);
        assert_eq!(domination_degree(&g, 2), Ok(3));
        assert_eq!(domination_degree(&g, 0), Ok(3));
    }
}
