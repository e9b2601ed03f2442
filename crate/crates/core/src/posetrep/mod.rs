//! Finite posets given by Hasse diagrams, full-subposet search and
//! Nazarova's wildness criterion.

mod search;

pub use search::{
    contains_full_subposet, full_subposet_images, nazarova_patterns, nazarova_wild, width, NazarovaReport,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

/// A finite poset stored as its Hasse diagram together with the strict order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
    less: Vec<Vec<bool>>,
    index: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct PosetFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

fn closure(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<Vec<bool>>> {
    let mut less = vec![vec![false; n]; n];
    for &(a, b) in pairs {
        less[a][b] = true;
    }
    // Warshall closure.
    #[allow(clippy::needless_range_loop)]
    for k in 0..n {
        for i in 0..n {
            if less[i][k] {
                for j in 0..n {
                    if less[k][j] {
                        less[i][j] = true;
                    }
                }
            }
        }
    }
    if (0..n).any(|i| less[i][i]) {
        return Err(Error::invalid("order relation has a cycle"));
    }
    Ok(less)
}

fn hasse(less: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = less.len();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                covers.push((a, b));
            }
        }
    }
    covers
}

impl Poset {
    fn build(elements: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (k, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), k).is_some() {
                return Err(Error::invalid(format!("duplicate element {e}")));
            }
        }
        let less = closure(elements.len(), pairs)?;
        let covers = hasse(&less);
        Ok(Poset { elements, covers, less, index })
    }

    /// Poset from its Hasse diagram; redundant or cyclic covers are rejected.
    pub fn new(elements: Vec<String>, covers: &[(&str, &str)]) -> Result<Self> {
        let pos = |s: &str| {
            elements.iter().position(|e| e == s).ok_or_else(|| Error::invalid(format!("unknown element {s}")))
        };
        let pairs = covers.iter().map(|&(a, b)| Ok((pos(a)?, pos(b)?))).collect::<Result<Vec<_>>>()?;
        let p = Poset::build(elements.clone(), &pairs)?;
        let given: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();
        if given.len() != p.covers.len() {
            let redundant = given.iter().find(|c| !p.covers.contains(c)).expect("extra cover");
            return Err(Error::invalid(format!(
                "cover {} < {} follows by transitivity",
                elements[redundant.0], elements[redundant.1]
            )));
        }
        Ok(p)
    }

    /// Poset generated by arbitrary relations `a < b` (given by index).
    pub fn from_relations(elements: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        if relations.iter().any(|&(a, b)| a >= elements.len() || b >= elements.len()) {
            return Err(Error::invalid("relation refers to a missing element"));
        }
        Poset::build(elements, relations)
    }

    pub fn chain(k: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Poset::build((1..=k).map(|i| i.to_string()).collect(), &pairs).expect("chain is acyclic")
    }

    pub fn antichain(k: usize) -> Self {
        Poset::chains(&vec![1; k])
    }

    /// Disjoint union of chains of the given lengths, labelled `c{i}.{j}`.
    pub fn chains(lengths: &[usize]) -> Self {
        Poset::disjoint_union(&lengths.iter().map(|&k| Poset::chain(k)).collect::<Vec<_>>())
    }

    /// Elements of the `i`-th part are relabelled `c{i}.{label}`.
    pub fn disjoint_union(parts: &[Poset]) -> Self {
        let mut elements = Vec::new();
        let mut pairs = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            let base = elements.len();
            elements.extend(p.elements.iter().map(|e| format!("c{}.{e}", i + 1)));
            pairs.extend(p.covers.iter().map(|&(a, b)| (base + a, base + b)));
        }
        Poset::build(elements, &pairs).expect("union of posets")
    }

    /// The four-element poset `t1 < b1`, `t1 < b2`, `t2 < b2`.
    pub fn n_shape() -> Self {
        Poset::new(["t1", "t2", "b1", "b2"].map(String::from).to_vec(), &[("t1", "b1"), ("t1", "b2"), ("t2", "b2")])
            .expect("N is a poset")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()).ok_or_else(|| Error::invalid(format!("unknown element {}", l.as_ref()))))
            .collect()
    }

    pub fn labels_of(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&k| self.elements[k].clone()).collect()
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.less[b][a]
    }

    /// Number of other elements comparable with `a`.
    pub fn comparability_degree(&self, a: usize) -> usize {
        (0..self.len()).filter(|&b| b != a && self.comparable(a, b)).count()
    }

    /// Induced subposet on `subset` (in the given order).
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let elements = self.labels_of(subset);
        let mut pairs = Vec::new();
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                if self.less[a][b] {
                    pairs.push((i, j));
                }
            }
        }
        Poset::build(elements, &pairs).expect("restriction of an order")
    }

    /// `C_W`: elements comparable with no member of `w`, ascending.
    pub fn incomparable_complement(&self, w: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&s| w.iter().all(|&x| !self.comparable(s, x))).collect()
    }

    /// All `z` with `y ≤ z ≤ y'` for some `y, y'` in `set`, ascending.
    pub fn convex_hull(&self, set: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| set.iter().any(|&y| self.leq(y, z)) && set.iter().any(|&y| self.leq(z, y)))
            .collect()
    }

    /// Chains `x ⋖ y ⋖ z` of two consecutive covers.
    pub fn minimal_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(x, y) in &self.covers {
            for &(y2, z) in &self.covers {
                if y2 == y {
                    out.push([x, y, z]);
                }
            }
        }
        out.sort();
        out
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: PosetFile = serde_json::from_str(s).map_err(|e| Error::invalid(format!("poset JSON: {e}")))?;
        let covers: Vec<(&str, &str)> = f.covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Poset::new(f.elements, &covers)
    }

    pub fn to_json(&self) -> String {
        let f = PosetFile {
            name: None,
            note: None,
            elements: self.elements.clone(),
            covers: self.covers.iter().map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone())).collect(),
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }

    /// Hasse diagram with edges from lower to upper.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph P {\n  rankdir=TB;\n");
        for e in &self.elements {
            let _ = writeln!(s, "  \"{e}\";");
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.elements[a], self.elements[b]);
        }
        s.push_str("}\n");
        s
    }
}

const GAMMA_M: &str = include_str!("../../data/gamma_m.json");

/// The bundled poset `Γ_M` with elements labelled `"1"` to `"33"`.
pub fn gamma_m() -> Poset {
    Poset::from_json(GAMMA_M).expect("bundled poset is valid")
}

/// Raw JSON of the bundled `Γ_M`, including its transcription note.
pub fn gamma_m_json() -> &'static str {
    GAMMA_M
}
