//! Checks closed-form claims about domination degree and index against the
//! exact engine, over exhaustive small graphs, seeded random graphs, the
//! generated families and graph operations.
//!
//! Claims come in two classes. A failure of a [`ClaimClass::Proved`] claim
//! points at a bug; a failure of a [`ClaimClass::Contested`] claim is a
//! recorded disagreement with a formula whose published derivation is
//! incomplete or self-contradictory.

mod suites;

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::emit_edgelist;
use crate::vertex_set::VertexSet;

pub use suites::{desk_scale_families, operation_pool, resolve_path_variants, PathResolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Definitional,
    Inequalities,
    Families,
    PathsResolution,
    Operations,
    Monotonicity,
    ProductsOrdering,
    NamedGraphs,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Definitional,
        Suite::Inequalities,
        Suite::Families,
        Suite::PathsResolution,
        Suite::Operations,
        Suite::Monotonicity,
        Suite::ProductsOrdering,
        Suite::NamedGraphs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Definitional => "definitional",
            Suite::Inequalities => "inequalities",
            Suite::Families => "families",
            Suite::PathsResolution => "paths-resolution",
            Suite::Operations => "operations",
            Suite::Monotonicity => "monotonicity",
            Suite::ProductsOrdering => "products-ordering",
            Suite::NamedGraphs => "named-graphs",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Size caps and the seed shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Instances above this order are skipped.
    pub max_exact: usize,
    /// Largest order for exhaustive labeled enumeration (at most 7).
    pub enum_order: usize,
    pub seed: u64,
    /// Number of seeded random graphs mixed into the definitional suite.
    pub random_graphs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_exact: 24,
            enum_order: 6,
            seed: 0,
            random_graphs: 200,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimClass {
    Proved,
    Contested,
}

/// One failed check, with enough data to re-run it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub claim: String,
    pub class: ClaimClass,
    pub instance: String,
    /// Canonical edge list of the instance.
    pub edges: String,
    pub expected: Value,
    pub computed: Value,
    pub witnesses: Vec<Vec<String>>,
}

impl Discrepancy {
    pub fn new(claim: &str, class: ClaimClass, instance: &str, g: &Graph) -> Discrepancy {
        Discrepancy {
            claim: claim.to_string(),
            class,
            instance: instance.to_string(),
            edges: emit_edgelist(g),
            expected: Value::Null,
            computed: Value::Null,
            witnesses: Vec::new(),
        }
    }

    pub fn expected(mut self, v: impl Serialize) -> Self {
        self.expected = serde_json::to_value(v).expect("serializable");
        self
    }

    pub fn computed(mut self, v: impl Serialize) -> Self {
        self.computed = serde_json::to_value(v).expect("serializable");
        self
    }

    pub fn witness(mut self, g: &Graph, s: &VertexSet) -> Self {
        self.witnesses.push(g.set_labels(s));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub instances: usize,
    pub passes: usize,
    pub discrepancies: Vec<Discrepancy>,
    /// Wall time; left out of the serialized form so reports are
    /// reproducible byte for byte.
    #[serde(skip)]
    pub runtime_secs: f64,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn proved_violations(&self) -> usize {
        self.count(ClaimClass::Proved)
    }

    pub fn contested_discrepancies(&self) -> usize {
        self.count(ClaimClass::Contested)
    }

    fn count(&self, class: ClaimClass) -> usize {
        self.discrepancies.iter().filter(|d| d.class == class).count()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} instances, {} passed, {} proved violations, {} contested discrepancies",
            self.suite,
            self.instances,
            self.passes,
            self.proved_violations(),
            self.contested_discrepancies()
        )
    }
}

/// Outcome of a single check.
pub(crate) type Outcome = std::result::Result<(), Box<Discrepancy>>;

pub(crate) fn outcome(ok: bool, fail: impl FnOnce() -> Discrepancy) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Box::new(fail()))
    }
}

pub(crate) struct Recorder {
    report: CheckReport,
    start: Instant,
}

impl Recorder {
    pub(crate) fn new(suite: Suite) -> Recorder {
        Recorder {
            report: CheckReport {
                suite: suite.name().to_string(),
                instances: 0,
                passes: 0,
                discrepancies: Vec::new(),
                runtime_secs: 0.0,
                notes: Vec::new(),
            },
            start: Instant::now(),
        }
    }

    pub(crate) fn record(&mut self, o: Outcome) {
        self.report.instances += 1;
        match o {
            Ok(()) => self.report.passes += 1,
            Err(d) => self.report.discrepancies.push(*d),
        }
    }

    pub(crate) fn record_all(&mut self, outcomes: impl IntoIterator<Item = Outcome>) {
        for o in outcomes {
            self.record(o);
        }
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.report.notes.push(s.into());
    }

    pub(crate) fn finish(mut self) -> CheckReport {
        self.report.runtime_secs = self.start.elapsed().as_secs_f64();
        self.report
    }
}

/// Erdős–Rényi `G(n, p)`: each pair `u < v`, in lexicographic order, is an
/// edge with probability `p`. The same seed always gives the same graph.
///
/// # Panics
/// If `p` is outside `[0, 1]` or `n` exceeds the word size.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = edge_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("order within word size")
}

/// Pairs `u < v` in lexicographic order; bit `i` of a labeled-graph mask
/// refers to the `i`-th pair.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// The labeled graph on `0..n` whose edges are the pairs selected by `mask`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = edge_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("order within word size")
}

pub const ENUMERATION_CAP: usize = 7;

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices in mask order,
/// optionally only the connected ones.
pub fn enumerate_labeled_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded {
            order: n,
            cap: ENUMERATION_CAP,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs)
        .map(move |mask| labeled_graph(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

pub fn run_suite(suite: Suite, limits: &Limits) -> Result<CheckReport> {
    if limits.enum_order > ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded {
            order: limits.enum_order,
            cap: ENUMERATION_CAP,
        });
    }
    match suite {
        Suite::Definitional => suites::definitional(limits),
        Suite::Inequalities => suites::inequalities(limits),
        Suite::Families => suites::families(limits),
        Suite::PathsResolution => suites::paths_resolution(limits),
        Suite::Operations => suites::operations(limits),
        Suite::Monotonicity => suites::monotonicity(limits),
        Suite::ProductsOrdering => suites::products_ordering(limits),
        Suite::NamedGraphs => suites::named_graphs(limits),
    }
}

#[derive(Serialize)]
struct LedgerLine<'a> {
    suite: &'a str,
    #[serde(flatten)]
    discrepancy: &'a Discrepancy,
}

/// Writes one JSON object per discrepancy, one per line.
pub fn write_ledger<W: Write>(reports: &[CheckReport], mut out: W) -> io::Result<()> {
    for r in reports {
        for d in &r.discrepancies {
            let line = LedgerLine {
                suite: &r.suite,
                discrepancy: d,
            };
            serde_json::to_writer(&mut out, &line)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}
