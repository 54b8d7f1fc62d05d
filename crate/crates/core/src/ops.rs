//! Disjoint union, join, the four standard products and the corona, plus the
//! closed-form domination degrees known for union, join, composition with a
//! complete graph and corona.
//!
//! Product vertices are laid out row-major: `(a, b)` gets id `a * n_H + b`
//! and label `"(aLabel,bLabel)"`. Union and join prefix each label with the
//! index of its factor (`"0:x"`, `"1:x"`). The corona keeps the first
//! factor's vertices at ids `0..n_G` under their own labels, followed by copy
//! `i` of the second factor at `n_G + i * n_H ..`, labeled
//! `"(gLabel,hLabel)"`.

use std::fmt;
use std::str::FromStr;

use crate::domination::{DegreeTable, DominationProfile};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{members, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    /// Lexicographic product; not symmetric in its factors.
    Composition,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Composition,
    ];
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::ExactCapExceeded {
            order,
            cap: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

fn prefixed(i: usize, g: &Graph) -> impl Iterator<Item = String> + '_ {
    g.labels().iter().map(move |l| format!("{i}:{l}"))
}

/// Vertex-disjoint union; the second value maps each vertex to the index
/// of the part it came from.
pub fn disjoint_union(parts: &[Graph]) -> Result<(Graph, Vec<usize>)> {
    let order: usize = parts.iter().map(Graph::order).sum();
    check_order(order)?;
    let mut open = Vec::with_capacity(order);
    let mut labels = Vec::with_capacity(order);
    let mut component = Vec::with_capacity(order);
    let mut offset = 0;
    for (i, g) in parts.iter().enumerate() {
        open.extend((0..g.order()).map(|v| g.open_mask(v) << offset));
        labels.extend(prefixed(i, g));
        component.extend(std::iter::repeat_n(i, g.order()));
        offset += g.order();
    }
    Ok((Graph::from_parts(labels, open)?, component))
}

/// G + H: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    check_order(ng + nh)?;
    let left = g.all_mask();
    let right = h.all_mask() << ng;
    let mut open: Vec<u64> = (0..ng).map(|v| g.open_mask(v) | right).collect();
    open.extend((0..nh).map(|v| h.open_mask(v) << ng | left));
    let labels = prefixed(0, g).chain(prefixed(1, h)).collect();
    Graph::from_parts(labels, open)
}

pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    check_order(ng * nh)?;
    let id = |a: usize, b: usize| a * nh + b;
    let mut open = vec![0u64; ng * nh];
    let mut labels = Vec::with_capacity(ng * nh);
    for a in 0..ng {
        for b in 0..nh {
            let mut adj = 0u64;
            let same_row = members(h.open_mask(b)).fold(0, |m, b2| m | 1 << id(a, b2));
            let same_col = members(g.open_mask(a)).fold(0, |m, a2| m | 1 << id(a2, b));
            let diagonal = members(g.open_mask(a)).fold(0, |m, a2| {
                members(h.open_mask(b)).fold(m, |m, b2| m | 1 << id(a2, b2))
            });
            match kind {
                ProductKind::Cartesian => adj |= same_row | same_col,
                ProductKind::Direct => adj |= diagonal,
                ProductKind::Strong => adj |= same_row | same_col | diagonal,
                ProductKind::Composition => {
                    adj |= same_row;
                    for a2 in members(g.open_mask(a)) {
                        adj |= h.all_mask() << (a2 * nh);
                    }
                }
            }
            open[id(a, b)] = adj;
            labels.push(format!("({},{})", g.label(a), h.label(b)));
        }
    }
    Graph::from_parts(labels, open)
}

/// G ⊙ H: one copy of H per vertex of G, the i-th vertex of G joined to all
/// of copy i.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let order = ng * (1 + nh);
    check_order(order)?;
    let copy_base = |i: usize| ng + i * nh;
    let mut open = vec![0u64; order];
    let mut labels: Vec<String> = g.labels().to_vec();
    for a in 0..ng {
        open[a] = g.open_mask(a) | h.all_mask() << copy_base(a);
    }
    for i in 0..ng {
        for b in 0..nh {
            open[copy_base(i) + b] = h.open_mask(b) << copy_base(i) | 1 << i;
            labels.push(format!("({},{})", g.label(i), h.label(b)));
        }
    }
    Graph::from_parts(labels, open)
}

/// Operation names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpName {
    Union,
    Join,
    Product(ProductKind),
    Corona,
}

impl OpName {
    pub const ALL: [OpName; 7] = [
        OpName::Union,
        OpName::Join,
        OpName::Product(ProductKind::Cartesian),
        OpName::Product(ProductKind::Direct),
        OpName::Product(ProductKind::Strong),
        OpName::Product(ProductKind::Composition),
        OpName::Corona,
    ];

    /// Applies the operation. Union accepts any number of operands, the
    /// others exactly two.
    pub fn apply(self, operands: &[Graph]) -> Result<Graph> {
        if let OpName::Union = self {
            if operands.is_empty() {
                return Err(Error::UnsupportedOperation("union of no graphs".into()));
            }
            return disjoint_union(operands).map(|(g, _)| g);
        }
        let [g, h] = operands else {
            return Err(Error::UnsupportedOperation(format!(
                "{self} takes exactly two graphs, got {}",
                operands.len()
            )));
        };
        match self {
            OpName::Join => join(g, h),
            OpName::Product(kind) => product(g, h, kind),
            OpName::Corona => corona(g, h),
            OpName::Union => unreachable!(),
        }
    }
}

impl fmt::Display for OpName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpName::Union => "union",
            OpName::Join => "join",
            OpName::Product(ProductKind::Cartesian) => "cartesian",
            OpName::Product(ProductKind::Direct) => "direct",
            OpName::Product(ProductKind::Strong) => "strong",
            OpName::Product(ProductKind::Composition) => "composition",
            OpName::Corona => "corona",
        })
    }
}

impl FromStr for OpName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OpName::ALL
            .into_iter()
            .find(|op| op.to_string() == s)
            .ok_or_else(|| Error::UnsupportedOperation(format!("unknown operation {s:?}")))
    }
}

/// Per-factor data needed by the operation formulas.
pub trait FactorData {
    fn degrees(&self) -> &[usize];
    fn gamma(&self) -> usize;
}

impl FactorData for DominationProfile {
    fn degrees(&self) -> &[usize] {
        &self.degrees
    }
    fn gamma(&self) -> usize {
        self.gamma
    }
}

impl FactorData for DegreeTable {
    fn degrees(&self) -> &[usize] {
        &self.degrees
    }
    fn gamma(&self) -> usize {
        self.gamma
    }
}

/// Closed-form domination degree of `vertex` in the composite built by `op`
/// from factors with the given data, using the layouts described in the
/// module docs.
///
/// * union: the vertex's degree in its own part plus γ of every other part;
/// * join: 1 if the vertex dominates its own factor, 2 otherwise;
/// * composition `G ∘ K_m`: the degree of the first coordinate in `G`;
/// * corona `G ⊙ H`: `n_G` on the hubs, `d_H(b) + n_G - 1` on copy vertices.
///
/// The remaining products have no closed form.
pub fn predicted_op_degree<F: FactorData>(op: OpName, factors: &[&F], vertex: usize) -> Result<usize> {
    let out_of_range = |order: usize| Error::VertexOutOfRange { vertex, order };
    match op {
        OpName::Union => {
            let order: usize = factors.iter().map(|f| f.degrees().len()).sum();
            let mut offset = 0;
            for (i, f) in factors.iter().enumerate() {
                let n = f.degrees().len();
                if vertex < offset + n {
                    let others: usize = factors
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, f)| f.gamma())
                        .sum();
                    return Ok(f.degrees()[vertex - offset] + others);
                }
                offset += n;
            }
            Err(out_of_range(order))
        }
        OpName::Join => {
            let [g, h] = two(op, factors)?;
            let ng = g.degrees().len();
            let own = if vertex < ng {
                g.degrees()[vertex]
            } else {
                *h.degrees()
                    .get(vertex - ng)
                    .ok_or_else(|| out_of_range(ng + h.degrees().len()))?
            };
            Ok(if own == 1 { 1 } else { 2 })
        }
        OpName::Product(ProductKind::Composition) => {
            let [g, h] = two(op, factors)?;
            if h.degrees().iter().any(|&d| d != 1) {
                return Err(Error::UnsupportedOperation(
                    "composition with a non-complete second factor".into(),
                ));
            }
            let nh = h.degrees().len();
            g.degrees()
                .get(vertex / nh.max(1))
                .copied()
                .ok_or_else(|| out_of_range(g.degrees().len() * nh))
        }
        OpName::Corona => {
            let [g, h] = two(op, factors)?;
            let (ng, nh) = (g.degrees().len(), h.degrees().len());
            if vertex < ng {
                Ok(ng)
            } else if vertex < ng * (1 + nh) {
                Ok(h.degrees()[(vertex - ng) % nh] + ng - 1)
            } else {
                Err(out_of_range(ng * (1 + nh)))
            }
        }
        OpName::Product(kind) => Err(Error::UnsupportedOperation(format!("{kind:?} product"))),
    }
}

fn two<'a, F>(op: OpName, factors: &[&'a F]) -> Result<[&'a F; 2]> {
    match factors {
        [g, h] => Ok([*g, *h]),
        _ => Err(Error::UnsupportedOperation(format!(
            "{op} takes exactly two factors"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{domination_degrees, domination_profile};

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn union_shapes() {
        let (g, comp) = disjoint_union(&[Graph::complete(1), Graph::complete(1)]).unwrap();
        assert_eq!((g.order(), g.size()), (2, 0));
        assert_eq!(comp, vec![0, 1]);
        let (g, _) = disjoint_union(&[Graph::complete(3), Graph::cycle(4)]).unwrap();
        assert_eq!((g.order(), g.size()), (7, 7));
        assert!(!g.is_connected());
        assert_eq!(g.label(3), "1:0");
    }

    #[test]
    fn union_degree_formula() {
        let (g, _) = disjoint_union(&[Graph::cycle(6), Graph::complete(2)]).unwrap();
        let table = domination_degrees(&g).unwrap();
        assert_eq!(table.degrees[0], 3);
        let c6 = domination_degrees(&Graph::cycle(6)).unwrap();
        let k2 = domination_degrees(&Graph::complete(2)).unwrap();
        assert_eq!(predicted_op_degree(OpName::Union, &[&c6, &k2], 0), Ok(3));
    }

    #[test]
    fn join_shapes() {
        let w5 = join(&Graph::complete(1), &Graph::cycle(5)).unwrap();
        let mut edges: Vec<_> = (1..=5).map(|v| (0, v)).collect();
        edges.extend((1..=5).map(|v| (v, v % 5 + 1)));
        assert!(w5.same_adjacency(&Graph::from_edges(6, &edges).unwrap()));
        let k4 = join(&Graph::path(2), &Graph::path(2)).unwrap();
        assert!(k4.same_adjacency(&Graph::complete(4)));
        let g = join(&Graph::path(3), &Graph::cycle(4)).unwrap();
        assert_eq!(g.size(), 2 + 4 + 12);
    }

    #[test]
    fn products() {
        let book = product(&star(3), &Graph::path(2), ProductKind::Cartesian).unwrap();
        assert_eq!((book.order(), book.size()), (8, 10));
        assert_eq!(book.label(1), "(0,1)");
        let k2 = Graph::complete(2);
        let d = product(&k2, &k2, ProductKind::Direct).unwrap();
        assert_eq!(d.edges(), vec![(0, 3), (1, 2)]);
        let (g, h) = (Graph::path(3), Graph::cycle(4));
        let c = product(&g, &h, ProductKind::Cartesian).unwrap();
        let di = product(&g, &h, ProductKind::Direct).unwrap();
        let s = product(&g, &h, ProductKind::Strong).unwrap();
        let comp = product(&g, &h, ProductKind::Composition).unwrap();
        assert_eq!(s.size(), c.size() + di.size());
        assert!(c.is_spanning_subgraph_of(&s));
        assert!(di.is_spanning_subgraph_of(&s));
        assert!(s.is_spanning_subgraph_of(&comp));
        assert!(product(&Graph::path(9), &Graph::path(8), ProductKind::Strong).is_err());
    }

    #[test]
    fn composition_is_ordered() {
        let (g, h) = (Graph::path(2), Graph::empty(2));
        let gh = product(&g, &h, ProductKind::Composition).unwrap();
        let hg = product(&h, &g, ProductKind::Composition).unwrap();
        assert_eq!((gh.size(), hg.size()), (4, 2));
    }

    #[test]
    fn corona_shapes() {
        let k1 = Graph::complete(1);
        assert!(corona(&k1, &k1).unwrap().same_adjacency(&Graph::complete(2)));
        let g = corona(&Graph::cycle(3), &k1).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(g.degree(4), 1);
    }

    #[test]
    fn formula_examples() {
        let p3 = domination_profile(&Graph::path(3)).unwrap();
        let k2 = domination_profile(&Graph::complete(2)).unwrap();
        // (center, b) of P3 ∘ K2 has id 1 * 2 + 1
        let op = OpName::Product(ProductKind::Composition);
        assert_eq!(predicted_op_degree(op, &[&p3, &k2], 3), Ok(1));
        let c4 = domination_profile(&Graph::cycle(4)).unwrap();
        assert_eq!(predicted_op_degree(OpName::Corona, &[&c4, &k2], 4), Ok(4));
        assert_eq!(predicted_op_degree(OpName::Corona, &[&c4, &k2], 0), Ok(4));
        assert!(predicted_op_degree(op, &[&k2, &p3], 0).is_err());
        let cart = OpName::Product(ProductKind::Cartesian);
        assert!(matches!(
            predicted_op_degree(cart, &[&p3, &k2], 0),
            Err(Error::UnsupportedOperation(_))
        ));
    }

    #[test]
    fn op_names_round_trip() {
        for op in OpName::ALL {
            assert_eq!(op.to_string().parse::<OpName>(), Ok(op));
        }
        assert!("tensor".parse::<OpName>().is_err());
    }
}
