//! Procedures that produce *some* minimal dominating set through a vertex,
//! without the minimum-cardinality guarantee.

use super::{covered_once, dominated, dominating_mask, irredundant_mask, search};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{members, VertexSet};

/// Highest-id member other than `keep` whose removal leaves `s` dominating.
fn redundant_member(g: &Graph, s: u64, keep: usize) -> Option<usize> {
    let exclusive = covered_once(g, s);
    let mut candidates = s & !(1 << keep);
    while candidates != 0 {
        let b = 63 - candidates.leading_zeros() as usize;
        if g.closed_mask(b) & exclusive == 0 {
            return Some(b);
        }
        candidates &= !(1 << b);
    }
    None
}

/// Turns the dominating set `d` into a minimal dominating set that still
/// contains `v`.
///
/// Redundant members other than `v` are dropped, highest id first. When only
/// `v` is redundant, its lowest-id dominating neighbor `b` is swapped out:
/// `b` leaves the set and every vertex that only `b` dominated is added
/// instead. Those vertices lie outside N[v], so each swap removes one
/// neighbor of `v` from the set for good; once none remain, `v` is its own
/// private neighbor. The result may therefore contain vertices outside `d`.
pub fn minimalize_containing(g: &Graph, d: &VertexSet, v: usize) -> Result<VertexSet> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    if !d.contains(v) {
        return Err(Error::VertexNotInSet(v));
    }
    if !dominating_mask(g, d.bits()) {
        return Err(Error::NotDominating);
    }
    let mut s = d.bits();
    for _ in 0..=n {
        while let Some(b) = redundant_member(g, s, v) {
            s &= !(1 << b);
        }
        if g.closed_mask(v) & covered_once(g, s) != 0 {
            break;
        }
        let Some(b) = members(s & g.open_mask(v)).next() else {
            break;
        };
        let lost = g.closed_mask(b) & covered_once(g, s);
        s &= !(1 << b);
        for u in members(lost) {
            if dominated(g, s) >> u & 1 == 0 {
                s |= 1 << u;
            }
        }
    }
    if s >> v & 1 == 1 && dominating_mask(g, s) && irredundant_mask(g, s) {
        Ok(VertexSet::from_bits_unchecked(n, s))
    } else {
        search::degree_witness(g, v)
    }
}

/// Backtracking search that grows a set from `{v}`.
///
/// Candidates are tried in ascending id and each later candidate has a
/// larger id than the previous one. A candidate is admitted only if every
/// member of the enlarged set keeps a nonempty private neighborhood; the
/// search stops at the first dominating set. The result is minimal
/// dominating but not necessarily of minimum size.
pub fn mds_containing_greedy(g: &Graph, v: usize) -> Result<VertexSet> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    fn grow(g: &Graph, v: usize, s: u64, covered: u64, next: usize) -> Option<u64> {
        if covered == g.all_mask() {
            return Some(s);
        }
        for x in next..g.order() {
            if x == v {
                continue;
            }
            let t = s | 1 << x;
            if !irredundant_mask(g, t) {
                continue;
            }
            if let Some(found) = grow(g, v, t, covered | g.closed_mask(x), x + 1) {
                return Some(found);
            }
        }
        None
    }
    let start = 1u64 << v;
    grow(g, v, start, g.closed_mask(v), 0)
        .map(|s| VertexSet::from_bits_unchecked(n, s))
        .ok_or_else(|| {
            Error::InternalInvariantViolation(format!(
                "no minimal dominating set contains vertex {v}"
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_minimal_dominating;
    use crate::domination::tests::f9;

    #[test]
    fn greedy_on_fixture() {
        let g = f9();
        let s = mds_containing_greedy(&g, g.vertex("a2").unwrap()).unwrap();
        assert_eq!(g.set_labels(&s), vec!["a2", "a3", "a5"]);
    }

    #[test]
    fn greedy_small_cases() {
        let k5 = Graph::complete(5);
        assert_eq!(mds_containing_greedy(&k5, 3).unwrap().to_vec(), vec![3]);
        // 1 is the first admissible candidate and {0, 1} already dominates C4
        let c4 = Graph::cycle(4);
        assert_eq!(mds_containing_greedy(&c4, 0).unwrap().to_vec(), vec![0, 1]);
        assert!(mds_containing_greedy(&c4, 4).is_err());
    }

    #[test]
    fn minimalize_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(
            minimalize_containing(&k3, &k3.all_vertices(), 0).unwrap().to_vec(),
            vec![0]
        );
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            minimalize_containing(&star, &star.all_vertices(), 1).unwrap().to_vec(),
            vec![1, 2, 3]
        );
        let g = f9();
        let a2 = g.vertex("a2").unwrap();
        let s = minimalize_containing(&g, &g.all_vertices(), a2).unwrap();
        assert!(s.contains(a2));
        assert!(is_minimal_dominating(&g, &s));
    }

    #[test]
    fn minimalize_errors() {
        let c4 = Graph::cycle(4);
        let d = VertexSet::from_vertices(4, [0]).unwrap();
        assert_eq!(minimalize_containing(&c4, &d, 0), Err(Error::NotDominating));
        let d = VertexSet::from_vertices(4, [0, 2]).unwrap();
        assert_eq!(minimalize_containing(&c4, &d, 1), Err(Error::VertexNotInSet(1)));
    }
}
