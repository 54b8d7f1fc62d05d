//! Generators for the classical graph families together with their
//! closed-form domination degrees and indices.
//!
//! Vertex layouts: star, wheel and windmill put the center at 0. A book is
//! the Cartesian product of a star with `P2`, so its two spine vertices are
//! 0 and 1. A Kragujevac tree has the center at 0, then for each branch its
//! root followed by (middle, leaf) pairs. Path roles carry the 1-based
//! position.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops::{join, product, ProductKind};
use crate::vertex_set::MAX_ORDER;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_{1,n}`: a center and `n` leaves.
    Star(usize),
    Path(usize),
    Cycle(usize),
    /// `K_1 + C_n`.
    Wheel(usize),
    /// `S_{n+1} × P_2`.
    Book(usize),
    /// `s` copies of `K_r` sharing one vertex.
    Windmill { r: usize, s: usize },
    /// Branch sizes `s_1..s_t`.
    Kragujevac(Vec<usize>),
    Petersen,
    Herschel,
    Grotzsch,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamilyParams(msg.into())
}

impl FamilySpec {
    /// Checks the parameter ranges. Books with one page and multipartite
    /// graphs with singleton parts are generated, but have no closed form.
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Complete(n) | FamilySpec::Star(n) | FamilySpec::Path(n) | FamilySpec::Book(n)
                if *n == 0 =>
            {
                Err(invalid(format!("{self}: n must be positive")))
            }
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if *n < 3 => {
                Err(invalid(format!("{self}: n must be at least 3")))
            }
            FamilySpec::CompleteMultipartite(parts) if parts.len() < 2 || parts.contains(&0) => Err(
                invalid("multipartite needs at least two parts, all nonempty"),
            ),
            FamilySpec::Windmill { r, s } if *r < 2 || *s < 2 => {
                Err(invalid(format!("{self}: r and s must be at least 2")))
            }
            FamilySpec::Kragujevac(branches) if branches.len() < 2 || branches.contains(&0) => Err(
                invalid("kragujevac needs at least two branches, all nonempty"),
            ),
            _ => Ok(()),
        }
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Complete(n) | FamilySpec::Path(n) | FamilySpec::Cycle(n) => *n,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Star(n) | FamilySpec::Wheel(n) => n + 1,
            FamilySpec::Book(n) => 2 * (n + 1),
            FamilySpec::Windmill { r, s } => 1 + s * (r - 1),
            FamilySpec::Kragujevac(b) => 1 + b.iter().map(|s| 2 * s + 1).sum::<usize>(),
            FamilySpec::Petersen => 10,
            FamilySpec::Herschel | FamilySpec::Grotzsch => 11,
        }
    }
}

fn list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("not a nonnegative integer: {x:?}")))
        })
        .collect()
}

fn comma(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `name` or `name:params`, e.g. `cycle:9`,
    /// `multipartite:2,3,4`, `windmill:r=3,s=4`, `kragujevac:2,2,3`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (name, params) = match text.split_once(':') {
            Some((n, p)) => (n.trim().to_ascii_lowercase(), Some(p)),
            None => (text.to_ascii_lowercase(), None),
        };
        let need = || params.ok_or_else(|| invalid(format!("{name} needs parameters")));
        let one = || -> Result<usize> {
            match list(need()?)?.as_slice() {
                [n] => Ok(*n),
                _ => Err(invalid(format!("{name} takes one parameter"))),
            }
        };
        let spec = match name.as_str() {
            "complete" => FamilySpec::Complete(one()?),
            "multipartite" | "complete-multipartite" => {
                FamilySpec::CompleteMultipartite(list(need()?)?)
            }
            "star" => FamilySpec::Star(one()?),
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "wheel" => FamilySpec::Wheel(one()?),
            "book" => FamilySpec::Book(one()?),
            "windmill" => {
                let p = need()?;
                let (r, s) = if p.contains('=') {
                    let mut r = None;
                    let mut s = None;
                    for kv in p.split(',') {
                        let (k, v) = kv
                            .split_once('=')
                            .ok_or_else(|| invalid(format!("bad windmill parameter {kv:?}")))?;
                        let v = list(v)?[0];
                        match k.trim() {
                            "r" => r = Some(v),
                            "s" => s = Some(v),
                            other => return Err(invalid(format!("unknown windmill key {other:?}"))),
                        }
                    }
                    (r, s)
                } else {
                    match list(p)?.as_slice() {
                        [r, s] => (Some(*r), Some(*s)),
                        _ => (None, None),
                    }
                };
                match (r, s) {
                    (Some(r), Some(s)) => FamilySpec::Windmill { r, s },
                    _ => return Err(invalid("windmill needs r and s")),
                }
            }
            "kragujevac" => FamilySpec::Kragujevac(list(need()?)?),
            "petersen" => FamilySpec::Petersen,
            "herschel" => FamilySpec::Herschel,
            "grotzsch" | "grötzsch" => FamilySpec::Grotzsch,
            _ => return Err(invalid(format!("unknown family {name:?}"))),
        };
        if params.is_some()
            && matches!(
                spec,
                FamilySpec::Petersen | FamilySpec::Herschel | FamilySpec::Grotzsch
            )
        {
            return Err(invalid(format!("{name} takes no parameters")));
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMultipartite(p) => write!(f, "multipartite:{}", comma(p)),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Book(n) => write!(f, "book:{n}"),
            FamilySpec::Windmill { r, s } => write!(f, "windmill:r={r},s={s}"),
            FamilySpec::Kragujevac(b) => write!(f, "kragujevac:{}", comma(b)),
            FamilySpec::Petersen => f.write_str("petersen"),
            FamilySpec::Herschel => f.write_str("herschel"),
            FamilySpec::Grotzsch => f.write_str("grotzsch"),
        }
    }
}

/// Structural role of a vertex in a generated family graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Center,
    Rim,
    Leaf,
    /// 1-based position along a path.
    Position(usize),
    /// Kragujevac branch vertex; level 0 is the root, 1 a middle vertex,
    /// 2 a leaf.
    Branch { branch: usize, level: usize },
    Generic,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Center => f.write_str("center"),
            Role::Rim => f.write_str("rim"),
            Role::Leaf => f.write_str("leaf"),
            Role::Position(i) => write!(f, "position {i}"),
            Role::Branch { branch, level } => {
                let what = ["root", "middle", "leaf"][*level];
                write!(f, "branch {branch} {what}")
            }
            Role::Generic => f.write_str("generic"),
        }
    }
}

/// A closed-form value, or `Unresolved` where no single formula is
/// trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicted {
    Value(usize),
    Unresolved,
}

impl Predicted {
    pub fn value(self) -> Option<usize> {
        match self {
            Predicted::Value(v) => Some(v),
            Predicted::Unresolved => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RolePrediction {
    pub role: Role,
    pub predicted: Predicted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl FamilyGraph {
    /// Role and predicted domination degree of every vertex.
    pub fn predictions(&self) -> Vec<RolePrediction> {
        self.roles
            .iter()
            .map(|&role| RolePrediction {
                role,
                predicted: predict_role(&self.spec, role),
            })
            .collect()
    }
}

const HERSCHEL_EDGES: [(usize, usize); 18] = [
    (0, 1),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 7),
    (3, 8),
    (3, 9),
    (4, 5),
    (4, 9),
    (5, 10),
    (6, 7),
    (6, 10),
    (7, 8),
    (8, 10),
    (9, 10),
];

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InternalInvariantViolation(format!(
            "{what} failed validation"
        )))
    }
}

fn decimal(g: Graph) -> Graph {
    let labels = (0..g.order()).map(|v| v.to_string()).collect();
    g.relabeled(labels).expect("decimal labels are distinct")
}

fn star_graph(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

pub fn generate(spec: &FamilySpec) -> Result<FamilyGraph> {
    spec.validate()?;
    let n = spec.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    let generic = || vec![Role::Generic; n];
    let (graph, roles) = match spec {
        FamilySpec::Complete(k) => (Graph::complete(*k), generic()),
        FamilySpec::CompleteMultipartite(parts) => {
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, p));
            }
            let mut edges = Vec::new();
            for u in 0..part_of.len() {
                for v in u + 1..part_of.len() {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            (Graph::from_edges(n, &edges)?, generic())
        }
        FamilySpec::Star(k) => {
            let mut roles = vec![Role::Leaf; n];
            roles[0] = Role::Center;
            (star_graph(*k)?, roles)
        }
        FamilySpec::Path(k) => {
            let edges: Vec<_> = (1..*k).map(|v| (v - 1, v)).collect();
            (
                Graph::from_edges(*k, &edges)?,
                (1..=*k).map(Role::Position).collect(),
            )
        }
        FamilySpec::Cycle(k) => {
            let mut edges: Vec<_> = (1..*k).map(|v| (v - 1, v)).collect();
            edges.push((k - 1, 0));
            (Graph::from_edges(*k, &edges)?, generic())
        }
        FamilySpec::Wheel(k) => {
            let g = decimal(join(&Graph::complete(1), &Graph::cycle(*k))?);
            let mut roles = vec![Role::Rim; n];
            roles[0] = Role::Center;
            (g, roles)
        }
        FamilySpec::Book(k) => {
            let g = decimal(product(&star_graph(*k)?, &Graph::path(2), ProductKind::Cartesian)?);
            let mut roles = generic();
            roles[0] = Role::Center;
            roles[1] = Role::Center;
            (g, roles)
        }
        FamilySpec::Windmill { r, s } => {
            let mut edges = Vec::new();
            for copy in 0..*s {
                let blade: Vec<usize> = std::iter::once(0)
                    .chain((0..r - 1).map(|j| 1 + copy * (r - 1) + j))
                    .collect();
                for (i, &u) in blade.iter().enumerate() {
                    edges.extend(blade[i + 1..].iter().map(|&v| (u, v)));
                }
            }
            let mut roles = generic();
            roles[0] = Role::Center;
            (Graph::from_edges(n, &edges)?, roles)
        }
        FamilySpec::Kragujevac(branches) => {
            let mut edges = Vec::new();
            let mut roles = vec![Role::Center];
            let mut next = 1;
            for (b, &s) in branches.iter().enumerate() {
                let root = next;
                edges.push((0, root));
                roles.push(Role::Branch { branch: b, level: 0 });
                next += 1;
                for _ in 0..s {
                    edges.push((root, next));
                    edges.push((next, next + 1));
                    roles.push(Role::Branch { branch: b, level: 1 });
                    roles.push(Role::Branch { branch: b, level: 2 });
                    next += 2;
                }
            }
            (Graph::from_edges(n, &edges)?, roles)
        }
        FamilySpec::Petersen => {
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
            let g = Graph::from_edges(10, &edges)?;
            check(g.size() == 15 && (0..10).all(|v| g.degree(v) == 3), "petersen")?;
            (g, generic())
        }
        FamilySpec::Herschel => {
            let g = Graph::from_edges(11, &HERSCHEL_EDGES)?;
            let mut degrees: Vec<usize> = (0..11).map(|v| g.degree(v)).collect();
            degrees.sort_unstable();
            let expected: Vec<usize> = [3; 8].into_iter().chain([4; 3]).collect();
            check(
                g.size() == 18 && g.is_bipartite() && degrees == expected,
                "herschel edge list",
            )?;
            (g, generic())
        }
        FamilySpec::Grotzsch => {
            // Mycielskian of C5: cycle 0..5, shadows 5..10, apex 10
            let mut edges = Vec::new();
            for i in 0..5 {
                let j = (i + 1) % 5;
                edges.extend([(i, j), (i, 5 + j), (j, 5 + i)]);
                edges.push((5 + i, 10));
            }
            let g = Graph::from_edges(11, &edges)?;
            check(g.size() == 20 && g.is_triangle_free(), "grotzsch construction")?;
            (g, generic())
        }
    };
    Ok(FamilyGraph {
        spec: spec.clone(),
        graph,
        roles,
    })
}

fn predict_role(spec: &FamilySpec, role: Role) -> Predicted {
    use Predicted::{Unresolved, Value};
    match (spec, role) {
        (FamilySpec::Complete(_), _) => Value(1),
        (FamilySpec::CompleteMultipartite(parts), _) => {
            if parts.iter().all(|&p| p >= 2) {
                Value(2)
            } else {
                Unresolved
            }
        }
        (FamilySpec::Star(_), Role::Center) => Value(1),
        (FamilySpec::Star(n), _) => Value(*n),
        (FamilySpec::Cycle(n), _) => Value(n.div_ceil(3)),
        (FamilySpec::Wheel(_), Role::Center) => Value(1),
        (FamilySpec::Wheel(n), _) => Value(n.div_ceil(3)),
        (FamilySpec::Book(1), _) => Unresolved,
        (FamilySpec::Book(_), Role::Center) => Value(2),
        (FamilySpec::Book(n), _) => Value(*n),
        (FamilySpec::Windmill { .. }, Role::Center) => Value(1),
        (FamilySpec::Windmill { s, .. }, _) => Value(*s),
        (FamilySpec::Kragujevac(b), _) => Value(1 + b.iter().sum::<usize>()),
        (FamilySpec::Petersen | FamilySpec::Herschel | FamilySpec::Grotzsch, _) => Value(3),
        (FamilySpec::Path(n), Role::Position(i)) => {
            let c = n.div_ceil(3);
            match n % 3 {
                1 => Value(c),
                0 if i % 3 == 2 => Value(c),
                0 => Value(c + 1),
                _ => Unresolved,
            }
        }
        (FamilySpec::Path(_), _) => Unresolved,
    }
}

/// Predicted domination degree of vertex `v` in `generate(spec)`.
pub fn predicted_degree(spec: &FamilySpec, v: usize) -> Result<Predicted> {
    spec.validate()?;
    let order = spec.order();
    if v >= order {
        return Err(Error::VertexOutOfRange { vertex: v, order });
    }
    let fg = generate(spec)?;
    Ok(predict_role(spec, fg.roles[v]))
}

/// Predicted domination index of `generate(spec)`.
///
/// The windmill index is the degree sum `1 + (r-1)s^2` over the `s(r-1)`
/// non-center vertices of the construction.
pub fn predicted_index(spec: &FamilySpec) -> Result<Predicted> {
    use Predicted::{Unresolved, Value};
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Complete(n) => Value(*n),
        FamilySpec::CompleteMultipartite(parts) if parts.iter().all(|&p| p >= 2) => {
            Value(2 * parts.iter().sum::<usize>())
        }
        FamilySpec::CompleteMultipartite(_) => Unresolved,
        FamilySpec::Star(n) => Value(1 + n * n),
        FamilySpec::Cycle(n) => Value(n * n.div_ceil(3)),
        FamilySpec::Wheel(n) => Value(1 + n * n.div_ceil(3)),
        FamilySpec::Book(1) => Unresolved,
        FamilySpec::Book(n) => Value(2 * (n * n + 2)),
        FamilySpec::Windmill { r, s } => Value(1 + (r - 1) * s * s),
        FamilySpec::Kragujevac(b) => Value(spec.order() * (1 + b.iter().sum::<usize>())),
        FamilySpec::Petersen => Value(30),
        FamilySpec::Herschel | FamilySpec::Grotzsch => Value(33),
        FamilySpec::Path(n) => {
            let k = n / 3;
            match n % 3 {
                0 => Value(k * (3 * k + 2)),
                1 => Value((3 * k + 1) * (k + 1)),
                _ => Unresolved,
            }
        }
    })
}

/// A competing closed form that circulates for a family whose formula is
/// disputed. The harness evaluates each against exhaustive computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variant {
    pub name: &'static str,
    pub formula: &'static str,
    pub degrees: Option<Vec<usize>>,
    pub index: Option<usize>,
}

/// Competing formulas for `spec`; empty for undisputed families.
pub fn formula_variants(spec: &FamilySpec) -> Result<Vec<Variant>> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path(n) if n % 3 == 2 => {
            let (c, k) = (n.div_ceil(3), n / 3);
            let by_position = |hi_on_multiples: bool| {
                (1..=*n)
                    .map(|i| if (i % 3 == 0) == hi_on_multiples { c + 1 } else { c })
                    .collect()
            };
            vec![
                Variant {
                    name: "path degree, high at multiples of 3",
                    formula: "ceil(n/3) at positions 3j+1, 3j+2; ceil(n/3)+1 at 3j",
                    degrees: Some(by_position(true)),
                    index: None,
                },
                Variant {
                    name: "path degree, low at multiples of 3",
                    formula: "ceil(n/3)+1 at positions 3j+1, 3j+2; ceil(n/3) at 3j",
                    degrees: Some(by_position(false)),
                    index: None,
                },
                Variant {
                    name: "path index, k(k+1) form",
                    formula: "k(k+1)+2(k+1)^2",
                    degrees: None,
                    index: Some(k * (k + 1) + 2 * (k + 1) * (k + 1)),
                },
                Variant {
                    name: "path index, k(k+2) form",
                    formula: "k(k+2)+2(k+1)^2",
                    degrees: None,
                    index: Some(k * (k + 2) + 2 * (k + 1) * (k + 1)),
                },
            ]
        }
        FamilySpec::Wheel(n) => vec![Variant {
            name: "wheel rim equals n",
            formula: "n on the rim",
            degrees: Some(std::iter::once(1).chain(std::iter::repeat_n(*n, *n)).collect()),
            index: None,
        }],
        FamilySpec::Windmill { r, s } => vec![Variant {
            name: "windmill index 1+rs^2",
            formula: "1+rs^2",
            degrees: None,
            index: Some(1 + r * s * s),
        }],
        _ => Vec::new(),
    })
}
