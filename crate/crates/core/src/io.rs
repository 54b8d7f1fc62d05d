//! Edge-list parsing, canonical edge-list and DOT output, JSON reports.
//!
//! Edge-list grammar, one item per line: `u v` declares an edge, a lone `u`
//! declares a vertex, and anything after `#` is a comment. Labels are
//! whitespace-free tokens; vertex ids follow first appearance.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::domination::{is_minimal_dominating, DominationProfile};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A repeated edge, reported and merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicateEdge {
    pub line: usize,
    pub u: String,
    pub v: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicates: Vec<DuplicateEdge>,
}

pub fn parse_edgelist(text: &str) -> Result<ParsedGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut id = |label: &str, labels: &mut Vec<String>| -> usize {
        *index.entry(label.to_string()).or_insert_with(|| {
            labels.push(label.to_string());
            labels.len() - 1
        })
    };
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut duplicates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [u] => {
                id(u, &mut labels);
            }
            [u, v] => {
                if u == v {
                    return Err(Error::SelfLoop {
                        line,
                        label: u.to_string(),
                    });
                }
                let (a, b) = (id(u, &mut labels), id(v, &mut labels));
                if seen.insert((a.min(b), a.max(b))) {
                    edges.push((a, b));
                } else {
                    duplicates.push(DuplicateEdge {
                        line,
                        u: u.to_string(),
                        v: v.to_string(),
                    });
                }
            }
            _ => {
                return Err(Error::MalformedLine {
                    line,
                    text: raw.to_string(),
                })
            }
        }
    }
    let graph = Graph::new(labels.len(), &edges, Some(labels))?;
    Ok(ParsedGraph { graph, duplicates })
}

fn sorted_edges(g: &Graph) -> Vec<(&str, &str)> {
    let mut edges: Vec<(&str, &str)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (g.label(u), g.label(v));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort_unstable();
    edges
}

fn isolated_labels(g: &Graph) -> Vec<&str> {
    let mut isolated: Vec<&str> = (0..g.order())
        .filter(|&v| g.degree(v) == 0)
        .map(|v| g.label(v))
        .collect();
    isolated.sort_unstable();
    isolated
}

/// Canonical edge list: isolated vertices sorted by label, then edges
/// sorted by (smaller label, larger label).
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for l in isolated_labels(g) {
        out.push_str(l);
        out.push('\n');
    }
    for (a, b) in sorted_edges(g) {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

fn quoted(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT; members of `highlight` are drawn filled.
pub fn emit_dot(g: &Graph, highlight: Option<&VertexSet>) -> String {
    let mut out = String::from("graph G {\n");
    let mut nodes: Vec<usize> = (0..g.order()).collect();
    nodes.sort_by_key(|&v| g.label(v));
    for v in nodes {
        let filled = highlight.is_some_and(|h| h.contains(v));
        let attrs = if filled {
            " [style=filled, fillcolor=lightblue]"
        } else {
            ""
        };
        let _ = writeln!(out, "  {}{attrs};", quoted(g.label(v)));
    }
    for (a, b) in sorted_edges(g) {
        let _ = writeln!(out, "  {} -- {};", quoted(a), quoted(b));
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub label: String,
    pub dd: usize,
    pub witness: Vec<String>,
}

/// Serializable form of a [`DominationProfile`], keyed by labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub vertices: Vec<VertexRecord>,
    pub gamma: usize,
    pub upper_gamma: usize,
    pub ir: usize,
    pub upper_ir: usize,
    pub di: usize,
    pub min_dd: usize,
    pub max_dd: usize,
    pub is_drg: bool,
}

impl ProfileReport {
    pub fn new(g: &Graph, p: &DominationProfile) -> ProfileReport {
        let vertices: Vec<VertexRecord> = (0..g.order())
            .map(|v| VertexRecord {
                label: g.label(v).to_string(),
                dd: p.degrees[v],
                witness: g.set_labels(&p.witnesses[v]),
            })
            .collect();
        ProfileReport {
            n: g.order(),
            m: g.size(),
            connected: g.is_connected(),
            // summed from the records so the two can never disagree
            di: vertices.iter().map(|r| r.dd).sum(),
            vertices,
            gamma: p.gamma,
            upper_gamma: p.upper_gamma,
            ir: p.ir,
            upper_ir: p.upper_ir,
            min_dd: p.min_dd,
            max_dd: p.max_dd,
            is_drg: p.is_drg,
        }
    }

    /// Checks a (possibly re-loaded) report against its graph: the index is
    /// the degree sum and every witness is a minimal dominating set of the
    /// advertised size containing its vertex.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::InternalInvariantViolation(msg));
        if self.n != g.order() || self.vertices.len() != g.order() {
            return fail("report order differs from graph".into());
        }
        if self.di != self.vertices.iter().map(|r| r.dd).sum::<usize>() {
            return fail("di is not the sum of the vertex degrees".into());
        }
        for r in &self.vertices {
            let w = g.set_from_labels(&r.witness)?;
            if !w.contains(g.vertex_or_err(&r.label)?) || w.len() != r.dd || !is_minimal_dominating(g, &w) {
                return fail(format!("bad witness for {}", r.label));
            }
        }
        Ok(())
    }
}

pub fn emit_report_json(report: &ProfileReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::domination_profile;

    const F9: &str = include_str!("../tests/data/f9.edges");

    #[test]
    fn parse_basics() {
        let p = parse_edgelist("a b\nb c").unwrap();
        assert!(p.graph.same_adjacency(&Graph::path(3)));
        let k1 = parse_edgelist("x\n").unwrap().graph;
        assert_eq!((k1.order(), k1.label(0)), (1, "x"));
        let p = parse_edgelist("# header\na b # trailing\nb a\n\nc\n").unwrap();
        assert_eq!(p.graph.order(), 3);
        assert_eq!(p.graph.size(), 1);
        assert_eq!(p.duplicates.len(), 1);
        assert_eq!(p.duplicates[0].line, 3);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_edgelist("a b\na b c\n"),
            Err(Error::MalformedLine {
                line: 2,
                text: "a b c".into()
            })
        );
        assert_eq!(
            parse_edgelist("a a"),
            Err(Error::SelfLoop {
                line: 1,
                label: "a".into()
            })
        );
    }

    #[test]
    fn fixture_neighborhoods() {
        let g = parse_edgelist(F9).unwrap().graph;
        let a2 = g.vertex("a2").unwrap();
        let n = g.closed_neighborhood(a2).unwrap();
        assert_eq!(g.set_labels(&n), vec!["a1", "a2", "a3", "a8", "a9"]);
    }

    #[test]
    fn canonical_edgelist() {
        let k2 = Graph::new(2, &[(0, 1)], Some(vec!["b".into(), "a".into()])).unwrap();
        assert_eq!(emit_edgelist(&k2), "a b\n");
        assert_eq!(emit_edgelist(&Graph::complete(1)), "0\n");
        let g = parse_edgelist(F9).unwrap().graph;
        let again = parse_edgelist(&emit_edgelist(&g)).unwrap().graph;
        assert_eq!(emit_edgelist(&again), emit_edgelist(&g));
        let perm: Vec<usize> = (0..9)
            .map(|v| again.vertex(g.label(v)).unwrap())
            .collect();
        assert!(g.permute(&perm).unwrap() == again);
    }

    #[test]
    fn dot_output() {
        let k2 = Graph::complete(2);
        let dot = emit_dot(&k2, None);
        assert_eq!(dot.matches("--").count(), 1);
        assert!(!dot.contains("filled"));
        let g = parse_edgelist(F9).unwrap().graph;
        let h = g.set_from_labels(&["a2", "a3", "a5"]).unwrap();
        assert_eq!(emit_dot(&g, Some(&h)).matches("fillcolor").count(), 3);
        assert!(!emit_dot(&g, Some(&g.empty_set())).contains("fill"));
    }

    #[test]
    fn reports() {
        let k1 = Graph::complete(1);
        let r = ProfileReport::new(&k1, &domination_profile(&k1).unwrap());
        assert_eq!((r.di, r.gamma), (1, 1));
        let c6 = Graph::cycle(6);
        let r = ProfileReport::new(&c6, &domination_profile(&c6).unwrap());
        assert!(r.vertices.iter().all(|v| v.dd == 2));
        let json = emit_report_json(&r);
        assert!(json.find("\"n\"").unwrap() < json.find("\"vertices\"").unwrap());
        let back: ProfileReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        back.check(&c6).unwrap();
        let mut bad = back;
        bad.di += 1;
        assert!(bad.check(&c6).is_err());
    }
}
