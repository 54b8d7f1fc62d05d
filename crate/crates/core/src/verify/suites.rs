use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;

use super::{
    edge_pairs, labeled_graph, outcome, random_graph, CheckReport, ClaimClass, Discrepancy,
    Limits, Outcome, Recorder, Suite,
};
use crate::domination::{
    degree_witness, domination_degrees, domination_profile, enumerate_minimal_dominating_sets,
    is_dominating, is_minimal_dominating, minimalize_containing, DegreeTable,
};
use crate::error::Result;
use crate::families::{formula_variants, generate, predicted_index, FamilySpec, Predicted};
use crate::graph::Graph;
use crate::ops::{corona, disjoint_union, join, predicted_op_degree, product, OpName, ProductKind};

use ClaimClass::{Contested, Proved};

fn by_label(g: &Graph, values: impl IntoIterator<Item = (usize, usize)>) -> BTreeMap<String, usize> {
    values
        .into_iter()
        .map(|(v, x)| (g.label(v).to_string(), x))
        .collect()
}

fn all_by_label(g: &Graph, values: &[usize]) -> BTreeMap<String, usize> {
    by_label(g, values.iter().copied().enumerate())
}

/// Exhaustive labeled graphs of order `1..=enum_order` followed by the
/// seeded random graphs, each passed to `check` with a re-runnable name.
fn over_graphs<F>(limits: &Limits, with_random: bool, check: F) -> Result<Vec<Outcome>>
where
    F: Fn(&Graph, &str) -> Result<Vec<Outcome>> + Sync,
{
    let mut out = Vec::new();
    for n in 1..=limits.enum_order {
        let pairs = edge_pairs(n).len();
        let part: Vec<Vec<Outcome>> = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| check(&labeled_graph(n, mask), &format!("labeled n={n} mask={mask:#x}")))
            .collect::<Result<_>>()?;
        out.extend(part.into_iter().flatten());
    }
    if with_random {
        let part: Vec<Vec<Outcome>> = (0..limits.random_graphs)
            .into_par_iter()
            .map(|i| {
                let (n, p, seed) = random_instance(limits.seed, i);
                let name = format!("random n={n} p={p} seed={seed}");
                check(&random_graph(n, p, seed), &name)
            })
            .collect::<Result<_>>()?;
        out.extend(part.into_iter().flatten());
    }
    Ok(out)
}

/// Parameters of the `i`-th random instance: order 1..=12, edge
/// probability cycling through 0.2, 0.4, 0.6.
pub(crate) fn random_instance(base_seed: u64, i: usize) -> (usize, f64, u64) {
    let n = 1 + i % 12;
    let p = [0.2, 0.4, 0.6][(i / 12) % 3];
    (n, p, base_seed.wrapping_add(i as u64))
}

pub(super) fn definitional(limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::Definitional);
    let outcomes = over_graphs(limits, true, |g, name| definitional_checks(g, name, limits))?;
    rec.record_all(outcomes);
    rec.note(format!(
        "labeled graphs up to order {} and {} random graphs",
        limits.enum_order, limits.random_graphs
    ));
    Ok(rec.finish())
}

fn definitional_checks(g: &Graph, name: &str, limits: &Limits) -> Result<Vec<Outcome>> {
    let n = g.order();
    let p = domination_profile(g)?;
    let mut out = Vec::new();

    let bad: Vec<usize> = (0..n)
        .filter(|&v| {
            let w = &p.witnesses[v];
            !(w.contains(v) && w.len() == p.degrees[v] && is_minimal_dominating(g, w))
        })
        .collect();
    out.push(outcome(bad.is_empty(), || {
        let mut d = Discrepancy::new("degree-witness-is-minimal-dominating", Proved, name, g)
            .computed(by_label(g, bad.iter().map(|&v| (v, p.degrees[v]))));
        for &v in &bad {
            d = d.witness(g, &p.witnesses[v]);
        }
        d
    }));

    let bad: Vec<usize> = (0..n)
        .filter(|&v| p.degrees[v] < p.gamma || p.degrees[v] > p.upper_gamma)
        .collect();
    out.push(outcome(bad.is_empty(), || {
        let mut d = Discrepancy::new("degree-between-gamma-and-upper-gamma", Proved, name, g)
            .expected(json!({"gamma": p.gamma, "upper_gamma": p.upper_gamma}))
            .computed(all_by_label(g, &p.degrees));
        for &v in &bad {
            d = d.witness(g, &p.witnesses[v]);
        }
        d
    }));

    let full = g.all_vertices();
    let mut bad = Vec::new();
    for v in 0..n {
        let s = minimalize_containing(g, &full, v)?;
        if !s.contains(v) || !is_minimal_dominating(g, &s) {
            bad.push(s);
        }
    }
    out.push(outcome(bad.is_empty(), || {
        bad.iter().fold(
            Discrepancy::new("minimal-set-through-every-vertex", Proved, name, g),
            |d, s| d.witness(g, s),
        )
    }));

    if !g.has_isolated_vertices() {
        let bad: Vec<_> = enumerate_minimal_dominating_sets(g, limits.max_exact)?
            .filter(|d| !is_dominating(g, &d.complement()))
            .collect();
        out.push(outcome(bad.is_empty(), || {
            bad.iter().fold(
                Discrepancy::new("complement-of-minimal-dominating-set-dominates", Proved, name, g),
                |d, s| d.witness(g, s),
            )
        }));
    }

    let delta = g.max_degree();
    let lower = n.div_ceil(1 + delta);
    out.push(outcome(lower <= p.gamma, || {
        Discrepancy::new("gamma-at-least-order-over-max-degree-plus-one", Proved, name, g)
            .expected(json!({"at_least": lower}))
            .computed(p.gamma)
            .witness(g, &crate::domination::minimum_dominating_set(g))
    }));
    out.push(outcome(p.gamma <= n - delta, || {
        Discrepancy::new("gamma-at-most-order-minus-max-degree", Proved, name, g)
            .expected(json!({"at_most": n - delta}))
            .computed(p.gamma)
            .witness(g, &crate::domination::minimum_dominating_set(g))
    }));
    Ok(out)
}

pub(super) fn inequalities(limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::Inequalities);
    let outcomes = over_graphs(limits, true, |g, name| inequality_checks(g, name))?;
    rec.record_all(outcomes);
    rec.note("the chain is checked on every graph, the Wiener bounds on connected graphs of order at least 2");
    Ok(rec.finish())
}

fn inequality_checks(g: &Graph, name: &str) -> Result<Vec<Outcome>> {
    let n = g.order();
    let p = domination_profile(g)?;
    let mut out = Vec::new();
    let scalars = json!({
        "n": n, "ir": p.ir, "gamma": p.gamma, "di": p.index,
        "upper_gamma": p.upper_gamma, "upper_ir": p.upper_ir,
    });
    out.push(outcome(
        n * p.gamma <= p.index && p.index <= n * p.upper_gamma,
        || {
            Discrepancy::new("index-average-between-gamma-and-upper-gamma", Proved, name, g)
                .computed(&scalars)
        },
    ));
    out.push(outcome(
        p.ir <= p.gamma
            && n * p.gamma <= p.index
            && p.index <= n * p.upper_gamma
            && p.upper_gamma <= p.upper_ir,
        || Discrepancy::new("irredundance-domination-chain", Proved, name, g).computed(&scalars),
    ));
    if n > 1 && g.is_connected() {
        let wi = g.wiener_index()? as usize;
        let bad: Vec<usize> = (0..n).filter(|&v| p.degrees[v] > wi).collect();
        out.push(outcome(bad.is_empty(), || {
            bad.iter().fold(
                Discrepancy::new("degree-at-most-wiener-index", Proved, name, g)
                    .expected(json!({"wiener_index": wi}))
                    .computed(all_by_label(g, &p.degrees)),
                |d, &v| d.witness(g, &p.witnesses[v]),
            )
        }));
        out.push(outcome(p.index <= n * wi, || {
            Discrepancy::new("index-at-most-order-times-wiener-index", Proved, name, g)
                .expected(json!({"at_most": n * wi}))
                .computed(p.index)
        }));
        let m = g.size();
        out.push(outcome(p.max_dd <= m, || {
            Discrepancy::new("degree-at-most-edge-count", Contested, name, g)
                .expected(json!({"edges": m}))
                .computed(all_by_label(g, &p.degrees))
        }));
    }
    Ok(out)
}

/// The family members every harness run covers.
pub fn desk_scale_families() -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = (1..=8).map(FamilySpec::Complete).collect();
    for parts in [vec![2, 2], vec![2, 3], vec![3, 3, 3], vec![1, 3], vec![1, 2, 2]] {
        specs.push(FamilySpec::CompleteMultipartite(parts));
    }
    specs.extend((2..=8).map(FamilySpec::Star));
    specs.extend((2..=15).map(FamilySpec::Path));
    specs.extend((3..=12).map(FamilySpec::Cycle));
    specs.extend((3..=10).map(FamilySpec::Wheel));
    specs.extend((1..=5).map(FamilySpec::Book));
    for (r, s) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
        specs.push(FamilySpec::Windmill { r, s });
    }
    for b in [vec![1, 1], vec![2, 2], vec![2, 3], vec![1, 2, 3]] {
        specs.push(FamilySpec::Kragujevac(b));
    }
    specs
}

pub(super) fn families(limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::Families);
    let results: Vec<(Vec<Outcome>, Vec<String>)> = desk_scale_families()
        .par_iter()
        .map(|spec| family_checks(spec, limits))
        .collect::<Result<_>>()?;
    for (outcomes, notes) in results {
        rec.record_all(outcomes);
        for n in notes {
            rec.note(n);
        }
    }
    Ok(rec.finish())
}

fn family_checks(spec: &FamilySpec, limits: &Limits) -> Result<(Vec<Outcome>, Vec<String>)> {
    let mut out = Vec::new();
    let mut notes = Vec::new();
    if spec.order() > limits.max_exact {
        notes.push(format!("{spec}: skipped, order {} above the exact cap", spec.order()));
        return Ok((out, notes));
    }
    let name = spec.to_string();
    let fg = generate(spec)?;
    let g = &fg.graph;
    let table = domination_degrees(g)?;
    let index = table.index();
    let preds = fg.predictions();

    let resolved: Vec<(usize, usize)> = preds
        .iter()
        .enumerate()
        .filter_map(|(v, r)| r.predicted.value().map(|x| (v, x)))
        .collect();
    if resolved.len() < preds.len() {
        notes.push(format!(
            "{spec}: {} vertices without a trusted formula, computed degrees {:?}",
            preds.len() - resolved.len(),
            table.degrees
        ));
    }
    if !resolved.is_empty() {
        let bad: Vec<usize> = resolved
            .iter()
            .filter(|&&(v, x)| table.degrees[v] != x)
            .map(|&(v, _)| v)
            .collect();
        out.push(outcome(bad.is_empty(), || {
            bad.iter().fold(
                Discrepancy::new("family-degree-formula", Proved, &name, g)
                    .expected(by_label(g, resolved.iter().copied()))
                    .computed(all_by_label(g, &table.degrees)),
                |d, &v| d.witness(g, &table.witnesses[v]),
            )
        }));
    }
    match predicted_index(spec)? {
        Predicted::Value(x) => out.push(outcome(x == index, || {
            Discrepancy::new("family-index-formula", Proved, &name, g)
                .expected(x)
                .computed(index)
        })),
        Predicted::Unresolved => notes.push(format!("{spec}: index decided by computation, {index}")),
    }
    for variant in formula_variants(spec)? {
        let ok = variant.degrees.as_ref().is_none_or(|d| *d == table.degrees)
            && variant.index.is_none_or(|x| x == index);
        out.push(outcome(ok, || {
            Discrepancy::new("family-formula-variant", Contested, &name, g)
                .expected(json!({
                    "variant": variant.name,
                    "formula": variant.formula,
                    "degrees": variant.degrees,
                    "index": variant.index,
                }))
                .computed(json!({"degrees": table.degrees, "index": index}))
        }));
    }
    if matches!(spec, FamilySpec::Cycle(_) | FamilySpec::Kragujevac(_)) {
        let regular = table.degrees.iter().all(|&d| d == table.degrees[0]);
        out.push(outcome(regular, || {
            Discrepancy::new("family-is-domination-regular", Proved, &name, g)
                .computed(all_by_label(g, &table.degrees))
        }));
    }
    let is_tree = matches!(spec, FamilySpec::Star(_) | FamilySpec::Kragujevac(_))
        || matches!(spec, FamilySpec::Path(n) if *n >= 2);
    if is_tree {
        let n = g.order();
        let (lo, hi) = (n.div_ceil(3), n - 1);
        let bad: Vec<usize> = (0..n)
            .filter(|&v| g.degree(v) == 1 && !(lo..=hi).contains(&table.degrees[v]))
            .collect();
        out.push(outcome(bad.is_empty(), || {
            bad.iter().fold(
                Discrepancy::new("tree-leaf-degree-bounds", Proved, &name, g)
                    .expected(json!({"at_least": lo, "at_most": hi}))
                    .computed(by_label(g, bad.iter().map(|&v| (v, table.degrees[v])))),
                |d, &v| d.witness(g, &table.witnesses[v]),
            )
        }));
    }
    Ok((out, notes))
}

/// Which competing path formulas agree with computation at one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathResolution {
    pub n: usize,
    pub residue: usize,
    pub degrees: Vec<usize>,
    pub index: usize,
    /// Names of the degree formulas that match; a single closed form is
    /// called `"closed form"`.
    pub degree_variants: Vec<String>,
    pub index_variants: Vec<String>,
    /// All candidate names, matching or not.
    pub degree_candidates: Vec<String>,
    pub index_candidates: Vec<String>,
}

impl PathResolution {
    pub fn is_resolved(&self) -> bool {
        self.degree_variants.len() == 1 && self.index_variants.len() == 1
    }

    pub fn table_line(&self) -> String {
        format!(
            "n={} (mod 3 = {}): degrees {:?} -> [{}]; index {} -> [{}]",
            self.n,
            self.residue,
            self.degrees,
            self.degree_variants.join(", "),
            self.index,
            self.index_variants.join(", ")
        )
    }
}

const CLOSED_FORM: &str = "closed form";

/// Compares every candidate path formula with exact computation.
pub fn resolve_path_variants(orders: std::ops::RangeInclusive<usize>) -> Result<Vec<PathResolution>> {
    orders
        .map(|n| {
            let spec = FamilySpec::Path(n);
            let fg = generate(&spec)?;
            let table = domination_degrees(&fg.graph)?;
            let index = table.index();
            let mut degree_candidates = Vec::new();
            let mut index_candidates = Vec::new();
            let preds: Option<Vec<usize>> =
                fg.predictions().iter().map(|r| r.predicted.value()).collect();
            if let Some(d) = preds {
                degree_candidates.push((CLOSED_FORM.to_string(), d == table.degrees));
            }
            if let Predicted::Value(x) = predicted_index(&spec)? {
                index_candidates.push((CLOSED_FORM.to_string(), x == index));
            }
            for v in formula_variants(&spec)? {
                if let Some(d) = v.degrees {
                    degree_candidates.push((v.name.to_string(), d == table.degrees));
                }
                if let Some(x) = v.index {
                    index_candidates.push((v.name.to_string(), x == index));
                }
            }
            let matching = |c: &[(String, bool)]| {
                c.iter().filter(|(_, ok)| *ok).map(|(s, _)| s.clone()).collect()
            };
            let names = |c: &[(String, bool)]| c.iter().map(|(s, _)| s.clone()).collect();
            Ok(PathResolution {
                n,
                residue: n % 3,
                degree_variants: matching(&degree_candidates),
                index_variants: matching(&index_candidates),
                degree_candidates: names(&degree_candidates),
                index_candidates: names(&index_candidates),
                degrees: table.degrees,
                index,
            })
        })
        .collect()
}

pub(super) fn paths_resolution(limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::PathsResolution);
    let top = 15.min(limits.max_exact);
    let rows = resolve_path_variants(3..=top)?;
    for row in &rows {
        let g = Graph::path(row.n);
        let name = FamilySpec::Path(row.n).to_string();
        let class = if row.residue == 2 { Contested } else { Proved };
        rec.record(outcome(row.is_resolved(), || {
            Discrepancy::new("path-variant-resolution", class, &name, &g)
                .expected(json!({
                    "degree_candidates": row.degree_candidates,
                    "index_candidates": row.index_candidates,
                }))
                .computed(json!({
                    "degrees": row.degrees,
                    "index": row.index,
                    "matching_degree_variants": row.degree_variants,
                    "matching_index_variants": row.index_variants,
                }))
        }));
        rec.note(row.table_line());
    }
    for residue in 0..3 {
        let winners: Vec<_> = rows
            .iter()
            .filter(|r| r.residue == residue)
            .map(|r| (&r.degree_variants, &r.index_variants))
            .collect();
        if winners.is_empty() {
            continue;
        }
        let stable = winners.iter().all(|w| *w == winners[0]);
        let class = if residue == 2 { Contested } else { Proved };
        let g = Graph::path(rows.iter().find(|r| r.residue == residue).map_or(1, |r| r.n));
        rec.record(outcome(stable, || {
            Discrepancy::new(
                "path-variant-resolution-stable",
                class,
                &format!("paths of order {residue} mod 3"),
                &g,
            )
            .computed(json!(winners))
        }));
    }
    Ok(rec.finish())
}

/// Small factor graphs for the operation checks.
pub fn operation_pool() -> Vec<(&'static str, Graph)> {
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("star");
    vec![
        ("K1", Graph::complete(1)),
        ("K2", Graph::complete(2)),
        ("K3", Graph::complete(3)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("K1,3", star),
    ]
}

struct OpTask {
    claim: &'static str,
    class: ClaimClass,
    name: String,
    graph: Graph,
    predicted: Vec<usize>,
}

pub(super) fn operations(limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::Operations);
    let pool = operation_pool();
    let tables: Vec<DegreeTable> = pool
        .iter()
        .map(|(_, g)| domination_degrees(g))
        .collect::<Result<_>>()?;
    let predict = |op: OpName, f: &[&DegreeTable], n: usize| -> Result<Vec<usize>> {
        (0..n).map(|v| predicted_op_degree(op, f, v)).collect()
    };
    let mut tasks = Vec::new();
    for (i, (gn, g)) in pool.iter().enumerate() {
        for (j, (hn, h)) in pool.iter().enumerate() {
            let factors = [&tables[i], &tables[j]];
            let (u, _) = disjoint_union(&[g.clone(), h.clone()])?;
            tasks.push(OpTask {
                claim: "union-degree-formula",
                class: Proved,
                name: format!("union {gn} {hn}"),
                predicted: predict(OpName::Union, &factors, u.order())?,
                graph: u,
            });
            let jn = join(g, h)?;
            tasks.push(OpTask {
                claim: "join-degree-formula",
                class: Contested,
                name: format!("join {gn} {hn}"),
                predicted: predict(OpName::Join, &factors, jn.order())?,
                graph: jn,
            });
            if g.order() * (1 + h.order()) <= limits.max_exact {
                let c = corona(g, h)?;
                tasks.push(OpTask {
                    claim: "corona-degree-formula",
                    class: Proved,
                    name: format!("corona {gn} {hn}"),
                    predicted: predict(OpName::Corona, &factors, c.order())?,
                    graph: c,
                });
            }
        }
        for m in [2, 3] {
            let km = Graph::complete(m);
            let tk = domination_degrees(&km)?;
            let c = product(g, &km, ProductKind::Composition)?;
            let op = OpName::Product(ProductKind::Composition);
            tasks.push(OpTask {
                claim: "composition-with-complete-degree-formula",
                class: Proved,
                name: format!("composition {gn} K{m}"),
                predicted: predict(op, &[&tables[i], &tk], c.order())?,
                graph: c,
            });
        }
    }
    let outcomes: Vec<Outcome> = tasks
        .par_iter()
        .map(|t| {
            let table = domination_degrees(&t.graph)?;
            let bad: Vec<usize> = (0..t.graph.order())
                .filter(|&v| table.degrees[v] != t.predicted[v])
                .collect();
            Ok(outcome(bad.is_empty(), || {
                let g = &t.graph;
                bad.iter().fold(
                    Discrepancy::new(t.claim, t.class, &t.name, g)
                        .expected(by_label(g, bad.iter().map(|&v| (v, t.predicted[v]))))
                        .computed(by_label(g, bad.iter().map(|&v| (v, table.degrees[v])))),
                    |d, &v| d.witness(g, &table.witnesses[v]),
                )
            }))
        })
        .collect::<Result<_>>()?;
    rec.record_all(outcomes);
    rec.note("factor pool: K1, K2, K3, P3, P4, C4, C5, K1,3; composition with K2 and K3");
    Ok(rec.finish())
}

/// Domination degrees packed one byte per vertex.
fn pack(degrees: &[usize]) -> u64 {
    degrees
        .iter()
        .enumerate()
        .fold(0, |acc, (v, &d)| acc | (d as u64) << (8 * v))
}

fn unpack(n: usize, packed: u64) -> Vec<usize> {
    (0..n).map(|v| (packed >> (8 * v) & 0xff) as usize).collect()
}

pub(super) fn monotonicity(limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::Monotonicity);
    let mut vertex_failures = 0usize;
    let mut index_failures = 0usize;
    let mut tree_failures = 0usize;
    for n in 2..=limits.enum_order {
        let pairs = edge_pairs(n);
        let bit_of = |u: usize, v: usize| {
            let (u, v) = (u.min(v), u.max(v));
            pairs.iter().position(|&e| e == (u, v)).expect("edge pair")
        };
        let packed: Vec<u64> = (0..1u64 << pairs.len())
            .into_par_iter()
            .map(|mask| domination_degrees(&labeled_graph(n, mask)).map(|t| pack(&t.degrees)))
            .collect::<Result<_>>()?;
        let index = |mask: u64| unpack(n, packed[mask as usize]).iter().sum::<usize>();
        let outcomes: Vec<Vec<Outcome>> = (0..1u64 << pairs.len())
            .into_par_iter()
            .map(|mask| {
                let g = labeled_graph(n, mask);
                if !g.is_connected() {
                    return Ok(Vec::new());
                }
                let name = format!("labeled n={n} mask={mask:#x}");
                let dg = unpack(n, packed[mask as usize]);
                let mut out = Vec::new();
                for (b, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 0 {
                        continue;
                    }
                    let sub = mask & !(1 << b);
                    let dh = unpack(n, packed[sub as usize]);
                    let bad: Vec<usize> = (0..n).filter(|&x| dg[x] > dh[x]).collect();
                    let inst = format!("{name} without edge {u}-{v}");
                    out.push(outcome(bad.is_empty(), || {
                        let h = g.without_edge(u, v);
                        let mut d = Discrepancy::new("degree-monotone-under-edge-deletion", Contested, &inst, &g)
                            .expected(json!({"at_most_subgraph_degrees": all_by_label(&h, &dh)}))
                            .computed(all_by_label(&g, &dg));
                        for &x in &bad {
                            d = d.witness(&g, &degree_witness(&g, x).expect("vertex in range"));
                        }
                        d
                    }));
                    let (ig, ih) = (dg.iter().sum::<usize>(), index(sub));
                    out.push(outcome(ig <= ih, || {
                        Discrepancy::new("index-monotone-under-edge-deletion", Contested, &inst, &g)
                            .expected(json!({"at_most": ih}))
                            .computed(ig)
                    }));
                }
                let tree = g.bfs_spanning_forest();
                let tree_mask = tree
                    .edges()
                    .into_iter()
                    .fold(0u64, |m, (u, v)| m | 1 << bit_of(u, v));
                let (ig, it) = (dg.iter().sum::<usize>(), index(tree_mask));
                out.push(outcome(ig <= it, || {
                    Discrepancy::new(
                        "index-at-most-spanning-tree-index",
                        Contested,
                        &format!("{name} tree mask={tree_mask:#x}"),
                        &g,
                    )
                    .expected(json!({"at_most": it}))
                    .computed(ig)
                }));
                Ok(out)
            })
            .collect::<Result<_>>()?;
        for o in outcomes.into_iter().flatten() {
            if let Err(d) = &o {
                match d.claim.as_str() {
                    "degree-monotone-under-edge-deletion" => vertex_failures += 1,
                    "index-monotone-under-edge-deletion" => index_failures += 1,
                    _ => tree_failures += 1,
                }
            }
            rec.record(o);
        }
    }
    let verdict = |claim: &str, failures: usize| {
        if failures == 0 {
            format!("{claim}: no counterexample up to order {}", limits.enum_order)
        } else {
            format!("{claim}: refuted, {failures} counterexamples")
        }
    };
    rec.note(verdict("degree-monotone-under-edge-deletion", vertex_failures));
    rec.note(verdict("index-monotone-under-edge-deletion", index_failures));
    rec.note(verdict("index-at-most-spanning-tree-index", tree_failures));
    Ok(rec.finish())
}

pub(super) fn products_ordering(limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::ProductsOrdering);
    let pool = operation_pool();
    let mut pairs = Vec::new();
    for (gn, g) in &pool {
        for (hn, h) in &pool {
            let order = g.order() * h.order();
            if order <= 16 && order <= limits.max_exact {
                pairs.push((*gn, g, *hn, h));
            }
        }
    }
    let outcomes: Vec<Outcome> = pairs
        .par_iter()
        .map(|&(gn, g, hn, h)| {
            let di = |kind| -> Result<usize> {
                Ok(domination_degrees(&product(g, h, kind)?)?.index())
            };
            let comp = di(ProductKind::Composition)?;
            let strong = di(ProductKind::Strong)?;
            let direct = di(ProductKind::Direct)?;
            let cart = di(ProductKind::Cartesian)?;
            let ok = comp <= strong && strong <= direct.min(cart);
            Ok(outcome(ok, || {
                let s = product(g, h, ProductKind::Strong).expect("built above");
                Discrepancy::new(
                    "product-index-ordering",
                    Contested,
                    &format!("products of {gn} and {hn} (edges: strong product)"),
                    &s,
                )
                .expected("composition <= strong <= min(direct, cartesian)")
                .computed(json!({
                    "composition": comp, "strong": strong,
                    "direct": direct, "cartesian": cart,
                }))
            }))
        })
        .collect::<Result<_>>()?;
    rec.record_all(outcomes);
    rec.note("ordered factor pairs from the operation pool with at most 16 product vertices");
    Ok(rec.finish())
}

pub(super) fn named_graphs(_limits: &Limits) -> Result<CheckReport> {
    let mut rec = Recorder::new(Suite::NamedGraphs);
    for (spec, class) in [
        (FamilySpec::Petersen, Proved),
        (FamilySpec::Herschel, Contested),
        (FamilySpec::Grotzsch, Contested),
    ] {
        let name = spec.to_string();
        let g = generate(&spec)?.graph;
        let p = domination_profile(&g)?;
        let bad: Vec<usize> = (0..g.order()).filter(|&v| p.degrees[v] != 3).collect();
        rec.record(outcome(bad.is_empty(), || {
            bad.iter().fold(
                Discrepancy::new("named-graph-degrees", class, &name, &g)
                    .expected(3)
                    .computed(all_by_label(&g, &p.degrees)),
                |d, &v| d.witness(&g, &p.witnesses[v]),
            )
        }));
        let expected = predicted_index(&spec)?.value().expect("named graphs have a value");
        rec.record(outcome(p.index == expected, || {
            Discrepancy::new("named-graph-index", class, &name, &g)
                .expected(expected)
                .computed(p.index)
        }));
        rec.note(format!(
            "{name}: degrees {:?}, index {}, gamma {}",
            p.degrees, p.index, p.gamma
        ));
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::run_suite;

    fn small() -> Limits {
        Limits {
            enum_order: 4,
            random_graphs: 12,
            ..Limits::default()
        }
    }

    #[test]
    fn pack_round_trip() {
        assert_eq!(unpack(3, pack(&[2, 1, 2])), vec![2, 1, 2]);
    }

    #[test]
    fn exhaustive_suites_pass_on_small_orders() {
        for suite in [Suite::Definitional, Suite::Inequalities] {
            let r = run_suite(suite, &small()).unwrap();
            assert_eq!(r.instances, r.passes + r.discrepancies.len());
            assert_eq!(r.proved_violations(), 0, "{}", r.summary());
        }
    }

    #[test]
    fn named_graph_findings() {
        let r = run_suite(Suite::NamedGraphs, &small()).unwrap();
        assert_eq!(r.proved_violations(), 0);
        // the Grötzsch graph has vertices of degree 4
        assert!(r
            .discrepancies
            .iter()
            .any(|d| d.instance == "grotzsch" && d.class == Contested));
    }

    #[test]
    fn path_table() {
        let rows = resolve_path_variants(3..=8).unwrap();
        assert!(rows.iter().all(PathResolution::is_resolved));
        let p5 = &rows[2];
        assert_eq!(p5.degree_variants, vec!["path degree, high at multiples of 3"]);
        assert_eq!(p5.index_variants, vec!["path index, k(k+2) form"]);
    }
}
