//! Reference computations by full subset scan. Minimality is tested from the
//! definition (no single removal leaves a dominating set) rather than through
//! private neighborhoods, so these routines share no search code with the
//! staged engine they cross-check.

use super::dominating_mask;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the scans accept by default.
pub const SCAN_CAP: usize = 20;

fn minimal_by_definition(g: &Graph, s: u64) -> bool {
    dominating_mask(g, s)
        && (0..g.order()).all(|b| s >> b & 1 == 0 || !dominating_mask(g, s & !(1 << b)))
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    // 2^30 subsets is the practical ceiling regardless of the requested cap
    let cap = cap.min(30);
    if g.order() > cap {
        Err(Error::ExactCapExceeded {
            order: g.order(),
            cap,
        })
    } else if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Minimal dominating sets as raw masks, in increasing mask order.
pub fn minimal_dominating_masks(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    check_cap(g, cap)?;
    Ok((0..1u64 << g.order())
        .filter(|&s| minimal_by_definition(g, s))
        .collect())
}

/// Domination degree of every vertex by exhaustive scan.
pub fn domination_degrees(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let mut best = vec![usize::MAX; g.order()];
    for s in minimal_dominating_masks(g, cap)? {
        let size = s.count_ones() as usize;
        for (v, b) in best.iter_mut().enumerate() {
            if s >> v & 1 == 1 && size < *b {
                *b = size;
            }
        }
    }
    if best.contains(&usize::MAX) {
        return Err(Error::InternalInvariantViolation(
            "a vertex lies in no minimal dominating set".into(),
        ));
    }
    Ok(best)
}
