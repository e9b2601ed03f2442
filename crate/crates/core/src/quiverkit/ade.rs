use super::Quiver;
use crate::error::{Error, Result};
use crate::reptype::RepType;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// An undirected multigraph; loops are edges `(v, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Underlying graph of the full subquiver on `vertices`.
    pub fn underlying(q: &Quiver, vertices: &[usize]) -> Self {
        let pos: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edges = q.arrows().iter().filter_map(|a| Some((*pos.get(&a.src)?, *pos.get(&a.dst)?))).collect();
        Multigraph { vertices: vertices.len(), edges }
    }

    pub fn path(n: usize) -> Self {
        Multigraph { vertices: n, edges: (1..n).map(|k| (k - 1, k)).collect() }
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Multigraph::path(n);
        if n >= 2 {
            g.edges.push((n - 1, 0));
        }
        g
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AdeFamily {
    A,
    D,
    E,
}

/// Result of recognising a connected multigraph.
///
/// `Dynkin(f, n)` has `n` vertices; `Extended(f, n)` has `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AdeType {
    Dynkin(AdeFamily, usize),
    Extended(AdeFamily, usize),
    Neither,
}

impl AdeType {
    pub fn rep_type(self) -> RepType {
        match self {
            AdeType::Dynkin(..) => RepType::Finite,
            AdeType::Extended(..) => RepType::Tame,
            AdeType::Neither => RepType::Wild,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = |fam: &AdeFamily| match fam {
            AdeFamily::A => "A",
            AdeFamily::D => "D",
            AdeFamily::E => "E",
        };
        match self {
            AdeType::Dynkin(fam, n) => write!(f, "{}{n}", letter(fam)),
            AdeType::Extended(fam, n) => write!(f, "{}\u{303}{n}", letter(fam)),
            AdeType::Neither => write!(f, "neither"),
        }
    }
}

/// Arm lengths (vertices after the centre) of a tree seen from `centre`.
fn arms(g: &Multigraph, centre: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for start in g.neighbours(centre) {
        let (mut prev, mut cur, mut len) = (centre, start, 1);
        loop {
            let next: Vec<usize> = g.neighbours(cur).into_iter().filter(|&w| w != prev).collect();
            if next.len() != 1 {
                break;
            }
            prev = cur;
            cur = next[0];
            len += 1;
        }
        out.push(len);
    }
    out.sort();
    out
}

/// Recognises Dynkin and extended Dynkin diagrams. A double edge between
/// two vertices is `Ã1`; loops and triple edges give `Neither`.
pub fn classify_ade(g: &Multigraph) -> AdeType {
    use AdeFamily::*;
    use AdeType::*;
    let n = g.vertices;
    if n == 0 || !g.is_connected() || g.edges.iter().any(|&(u, v)| u == v) {
        return Neither;
    }
    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(u, v) in &g.edges {
        *mult.entry((u.min(v), u.max(v))).or_insert(0) += 1;
    }
    if mult.values().any(|&m| m > 1) {
        return if n == 2 && g.edges.len() == 2 { Extended(A, 1) } else { Neither };
    }
    let deg = g.degrees();
    let e = g.edges.len();
    if e == n {
        return if deg.iter().all(|&d| d == 2) { Extended(A, n - 1) } else { Neither };
    }
    if e != n - 1 {
        return Neither;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => Dynkin(A, n),
        [c] => match (deg[*c], arms(g, *c).as_slice()) {
            (4, [1, 1, 1, 1]) => Extended(D, 4),
            (3, [1, 1, _]) => Dynkin(D, n),
            (3, [1, 2, 2]) => Dynkin(E, 6),
            (3, [1, 2, 3]) => Dynkin(E, 7),
            (3, [1, 2, 4]) => Dynkin(E, 8),
            (3, [2, 2, 2]) => Extended(E, 6),
            (3, [1, 3, 3]) => Extended(E, 7),
            (3, [1, 2, 5]) => Extended(E, 8),
            _ => Neither,
        },
        [a, b] => {
            // D̃: both branch points carry two leaves
            let leaves = |c: usize| g.neighbours(c).into_iter().filter(|&w| deg[w] == 1).count();
            if deg[*a] == 3 && deg[*b] == 3 && leaves(*a) >= 2 && leaves(*b) >= 2 {
                Extended(D, n - 1)
            } else {
                Neither
            }
        }
        _ => Neither,
    }
}

/// Representation type of the path algebra of an acyclic quiver.
pub fn hereditary_type(q: &Quiver) -> Result<RepType> {
    if !q.is_acyclic() {
        return Err(Error::invalid("hereditary type needs a quiver without oriented cycles"));
    }
    Ok(q.components()
        .iter()
        .map(|c| classify_ade(&Multigraph::underlying(q, c)).rep_type())
        .max()
        .unwrap_or(RepType::Finite))
}
