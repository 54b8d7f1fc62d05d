//! Enumeration of irredundant sets. Irredundance is hereditary, so extending
//! sets in ascending vertex order and pruning at the first redundant member
//! visits every irredundant set exactly once. Minimal dominating sets are
//! exactly the dominating irredundant sets.

use super::irredundant_mask;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn walk<F: FnMut(u64, bool)>(g: &Graph, visit: &mut F) {
    fn rec<F: FnMut(u64, bool)>(g: &Graph, s: u64, covered: u64, next: usize, visit: &mut F) {
        let dominating = covered == g.all_mask();
        visit(s, dominating);
        if dominating {
            // no vertex added to a dominating set can own a private neighbor
            return;
        }
        for x in next..g.order() {
            if g.closed_mask(x) & !covered == 0 {
                // x would have an empty private neighborhood
                continue;
            }
            let t = s | 1 << x;
            if irredundant_mask(g, t) {
                rec(g, t, covered | g.closed_mask(x), x + 1, visit);
            }
        }
    }
    rec(g, 0, 0, 0, visit);
}

/// Γ, ir and IR from a single pass over the irredundant sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrredundanceSummary {
    pub upper_gamma: usize,
    pub ir: usize,
    pub upper_ir: usize,
}

pub fn irredundance_summary(g: &Graph) -> IrredundanceSummary {
    let n = g.order();
    let mut upper_gamma = 0;
    let mut upper_ir = 0;
    let mut ir = usize::MAX;
    walk(g, &mut |s, dominating| {
        let size = s.count_ones() as usize;
        upper_ir = upper_ir.max(size);
        if dominating {
            upper_gamma = upper_gamma.max(size);
        }
        if size < ir {
            let maximal = dominating
                || (0..n).all(|x| s >> x & 1 == 1 || !irredundant_mask(g, s | 1 << x));
            if maximal {
                ir = size;
            }
        }
    });
    IrredundanceSummary {
        upper_gamma,
        ir: if n == 0 { 0 } else { ir },
        upper_ir,
    }
}

/// Γ(G): the largest minimal dominating set.
pub fn upper_domination_number(g: &Graph) -> usize {
    let mut best = 0;
    walk(g, &mut |s, dominating| {
        if dominating {
            best = best.max(s.count_ones() as usize);
        }
    });
    best
}

/// `(ir, IR)`: the smallest maximal irredundant set and the largest
/// irredundant set.
pub fn irredundance_numbers(g: &Graph) -> (usize, usize) {
    let s = irredundance_summary(g);
    (s.ir, s.upper_ir)
}

/// Minimal dominating sets in increasing cardinality, ties broken by the
/// lexicographic order of their sorted members.
#[derive(Clone, Debug)]
pub struct MinimalDominatingSets {
    inner: std::vec::IntoIter<VertexSet>,
}

impl Iterator for MinimalDominatingSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for MinimalDominatingSets {}

pub fn enumerate_minimal_dominating_sets(g: &Graph, cap: usize) -> Result<MinimalDominatingSets> {
    let n = g.order();
    if n > cap {
        return Err(Error::ExactCapExceeded { order: n, cap });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut found = Vec::new();
    walk(g, &mut |s, dominating| {
        if dominating {
            found.push(VertexSet::from_bits_unchecked(n, s));
        }
    });
    found.sort();
    Ok(MinimalDominatingSets {
        inner: found.into_iter(),
    })
}
