//! Exact domination invariants: predicates, γ, Γ, ir, IR, per-vertex
//! domination degree and the domination index.
//!
//! The domination degree of a vertex `v` is the smallest cardinality of a
//! *minimal* dominating set that contains `v`. Every graph has one: any
//! maximal independent set through `v` is minimal dominating.

mod construct;
mod enumerate;
pub mod scan;
mod search;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{members, VertexSet};

pub use construct::{mds_containing_greedy, minimalize_containing};
pub use enumerate::{
    enumerate_minimal_dominating_sets, irredundance_numbers, irredundance_summary,
    upper_domination_number, IrredundanceSummary, MinimalDominatingSets,
};
pub use search::{degree_witness, domination_degree, domination_number, minimum_dominating_set};

/// Orders from which per-vertex degree searches fan out over threads.
const PARALLEL_FROM: usize = 10;

/// Vertices dominated by `s`.
#[inline]
pub(crate) fn dominated(g: &Graph, s: u64) -> u64 {
    members(s).fold(0, |acc, a| acc | g.closed_mask(a))
}

/// Vertices covered exactly once by the closed neighborhoods of `s`.
#[inline]
pub(crate) fn covered_once(g: &Graph, s: u64) -> u64 {
    let mut once = 0u64;
    let mut twice = 0u64;
    for a in members(s) {
        let c = g.closed_mask(a);
        twice |= once & c;
        once |= c;
    }
    once & !twice
}

#[inline]
pub(crate) fn irredundant_mask(g: &Graph, s: u64) -> bool {
    let exclusive = covered_once(g, s);
    members(s).all(|a| g.closed_mask(a) & exclusive != 0)
}

#[inline]
pub(crate) fn dominating_mask(g: &Graph, s: u64) -> bool {
    dominated(g, s) == g.all_mask()
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    dominating_mask(g, s.bits())
}

/// P_N[a, S]: the part of N[a] that no other member of `s` dominates.
pub fn private_neighborhood(g: &Graph, a: usize, s: &VertexSet) -> Result<VertexSet> {
    if a >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: a,
            order: g.order(),
        });
    }
    if !s.contains(a) {
        return Err(Error::VertexNotInSet(a));
    }
    let others = dominated(g, s.bits() & !(1 << a));
    Ok(VertexSet::from_bits_unchecked(
        g.order(),
        g.closed_mask(a) & !others,
    ))
}

/// Every member of `s` has a nonempty private neighborhood.
pub fn is_irredundant(g: &Graph, s: &VertexSet) -> bool {
    irredundant_mask(g, s.bits())
}

/// A dominating set is minimal iff each member has a private neighbor.
pub fn is_minimal_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_dominating(g, s) && is_irredundant(g, s)
}

/// Per-vertex domination degrees together with γ, computed without the
/// irredundance enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    pub gamma: usize,
    pub degrees: Vec<usize>,
    pub witnesses: Vec<VertexSet>,
}

impl DegreeTable {
    pub fn index(&self) -> usize {
        self.degrees.iter().sum()
    }
}

pub fn domination_degrees(g: &Graph) -> Result<DegreeTable> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let gamma = domination_number(g);
    let one = |v: usize| search::degree_witness_from(g, v, gamma);
    let witnesses: Vec<VertexSet> = if g.order() >= PARALLEL_FROM {
        (0..g.order())
            .into_par_iter()
            .map(one)
            .collect::<Result<_>>()?
    } else {
        (0..g.order()).map(one).collect::<Result<_>>()?
    };
    Ok(DegreeTable {
        gamma,
        degrees: witnesses.iter().map(VertexSet::len).collect(),
        witnesses,
    })
}

/// Every domination quantity of a graph in one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationProfile {
    pub degrees: Vec<usize>,
    /// For each vertex, one minimum-cardinality minimal dominating set
    /// containing it.
    pub witnesses: Vec<VertexSet>,
    pub gamma: usize,
    pub upper_gamma: usize,
    pub ir: usize,
    pub upper_ir: usize,
    pub min_dd: usize,
    pub max_dd: usize,
    pub index: usize,
    pub is_drg: bool,
}

impl DominationProfile {
    pub fn order(&self) -> usize {
        self.degrees.len()
    }
}

pub fn domination_profile(g: &Graph) -> Result<DominationProfile> {
    let table = domination_degrees(g)?;
    let irr = irredundance_summary(g);
    let min_dd = *table.degrees.iter().min().expect("nonempty");
    let max_dd = *table.degrees.iter().max().expect("nonempty");
    Ok(DominationProfile {
        index: table.index(),
        gamma: table.gamma,
        upper_gamma: irr.upper_gamma,
        ir: irr.ir,
        upper_ir: irr.upper_ir,
        min_dd,
        max_dd,
        is_drg: min_dd == max_dd,
        degrees: table.degrees,
        witnesses: table.witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn f9() -> Graph {
        let pairs = [
            (1, 2), (1, 9), (1, 8), (2, 9), (2, 8), (2, 3), (3, 8),
            (3, 4), (3, 7), (4, 7), (4, 5), (5, 6), (6, 7), (8, 9),
        ];
        let edges: Vec<_> = pairs.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        let labels = (1..=9).map(|i| format!("a{i}")).collect();
        Graph::new(9, &edges, Some(labels)).unwrap()
    }

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set_from_labels(labels).unwrap()
    }

    #[test]
    fn dominating_predicate() {
        let g = f9();
        assert!(is_dominating(&g, &set(&g, &["a2", "a3", "a5"])));
        assert!(is_dominating(&g, &g.all_vertices()));
        let c4 = Graph::cycle(4);
        assert!(!is_dominating(&c4, &VertexSet::from_vertices(4, [0]).unwrap()));
    }

    #[test]
    fn private_neighborhood_examples() {
        let g = f9();
        let s = set(&g, &["a2", "a3", "a5"]);
        let pn = private_neighborhood(&g, g.vertex("a5").unwrap(), &s).unwrap();
        assert_eq!(g.set_labels(&pn), vec!["a5", "a6"]);

        let k5 = Graph::complete(5);
        let s = VertexSet::from_vertices(5, [2]).unwrap();
        assert_eq!(private_neighborhood(&k5, 2, &s).unwrap(), k5.all_vertices());

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = VertexSet::from_vertices(4, [0, 1]).unwrap();
        assert_eq!(private_neighborhood(&star, 0, &s).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(
            private_neighborhood(&star, 2, &s),
            Err(Error::VertexNotInSet(2))
        );
    }

    #[test]
    fn minimality_and_irredundance() {
        let g = f9();
        let s = set(&g, &["a2", "a3", "a5"]);
        assert!(is_minimal_dominating(&g, &s));
        assert!(is_irredundant(&g, &s));
        let k3 = Graph::complete(3);
        let pair = VertexSet::from_vertices(3, [0, 1]).unwrap();
        assert!(!is_minimal_dominating(&k3, &pair));
        assert!(!is_irredundant(&k3, &pair));
        assert!(!is_minimal_dominating(&k3, &k3.empty_set()));
        assert!(is_irredundant(&k3, &k3.empty_set()));
    }

    #[test]
    fn profile_of_k1() {
        let p = domination_profile(&Graph::complete(1)).unwrap();
        assert_eq!(p.degrees, vec![1]);
        assert_eq!(p.index, 1);
        assert_eq!(
            (p.gamma, p.upper_gamma, p.ir, p.upper_ir),
            (1, 1, 1, 1)
        );
        assert!(p.is_drg);
    }

    #[test]
    fn profile_of_c6_and_fixture() {
        let p = domination_profile(&Graph::cycle(6)).unwrap();
        assert_eq!(p.degrees, vec![2; 6]);
        assert_eq!(p.index, 12);

        let g = f9();
        let p = domination_profile(&g).unwrap();
        assert_eq!(p.degrees, vec![3; 9]);
        assert_eq!(p.index, 27);
        assert_eq!((p.gamma, p.upper_gamma, p.ir, p.upper_ir), (3, 3, 3, 3));
        for (v, w) in p.witnesses.iter().enumerate() {
            assert!(w.contains(v));
            assert!(is_minimal_dominating(&g, w));
        }
    }

    #[test]
    fn empty_graph_has_no_profile() {
        assert_eq!(domination_profile(&Graph::empty(0)), Err(Error::EmptyGraph));
    }
}
