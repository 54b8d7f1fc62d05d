//! Naive reference implementation working on plain adjacency lists and
//! `Vec<bool>` subsets. Shares nothing with the library beyond reading the
//! edge list of a `Graph`.
#![allow(dead_code)]

use domindex::Graph;

pub struct Naive {
    pub n: usize,
    closed: Vec<Vec<usize>>,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Naive {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let closed = (0..n)
            .map(|v| (0..n).filter(|&u| u == v || adj[v][u]).collect())
            .collect();
        Naive { n, closed, adj }
    }

    fn dominates(&self, s: &[usize]) -> bool {
        let mut seen = vec![false; self.n];
        for &a in s {
            for &u in &self.closed[a] {
                seen[u] = true;
            }
        }
        seen.iter().all(|&b| b)
    }

    /// Dominating, and no single member can be dropped.
    pub fn minimal(&self, s: &[usize]) -> bool {
        self.dominates(s)
            && (0..s.len()).all(|i| {
                let rest: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                !self.dominates(&rest)
            })
    }

    /// Every member has a vertex in its closed neighborhood that no other
    /// member's closed neighborhood contains.
    pub fn irredundant(&self, s: &[usize]) -> bool {
        s.iter().all(|&a| {
            self.closed[a]
                .iter()
                .any(|&u| s.iter().all(|&b| b == a || !self.closed[b].contains(&u)))
        })
    }

    fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0u64..1 << self.n).map(move |m| (0..self.n).filter(|&v| m >> v & 1 == 1).collect())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut best = vec![usize::MAX; self.n];
        for s in self.subsets().filter(|s| self.minimal(s)) {
            for &v in &s {
                best[v] = best[v].min(s.len());
            }
        }
        best
    }

    pub fn gamma(&self) -> usize {
        self.subsets().filter(|s| self.dominates(s)).map(|s| s.len()).min().unwrap()
    }

    pub fn upper_gamma(&self) -> usize {
        self.subsets().filter(|s| self.minimal(s)).map(|s| s.len()).max().unwrap()
    }

    /// `(ir, IR)`.
    pub fn irredundance(&self) -> (usize, usize) {
        let irr: Vec<Vec<usize>> = self.subsets().filter(|s| self.irredundant(s)).collect();
        let upper = irr.iter().map(Vec::len).max().unwrap();
        let lower = irr
            .iter()
            .filter(|s| {
                (0..self.n).all(|x| {
                    if s.contains(&x) {
                        return true;
                    }
                    let mut t = (*s).clone();
                    t.push(x);
                    !self.irredundant(&t)
                })
            })
            .map(Vec::len)
            .min()
            .unwrap();
        (lower, upper)
    }

    /// Floyd–Warshall; `None` if disconnected.
    pub fn wiener(&self) -> Option<usize> {
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; self.n]; self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if u == v {
                    d[u][v] = 0;
                } else if self.adj[u][v] {
                    d[u][v] = 1;
                }
            }
        }
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        let mut total = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if d[i][j] >= inf {
                    return None;
                }
                total += d[i][j];
            }
        }
        Some(total)
    }
}
