//! Quivers with relations.
//!
//! Paths are stored in traversal order (first arrow first). Products of
//! algebra elements and relation words are written right to left, so the
//! word `αβ` based at `λ` is the path "β, then α".

mod ade;
mod covering;
pub mod datasets;
mod export;
mod presentation;

pub use ade::{classify_ade, hereditary_type, AdeFamily, AdeType, Multigraph};
pub use covering::{
    find_isomorphism, lift_relations, quotient_by_group, stabilizer_of_subquiver, GroupAction, Projection,
};
pub use presentation::{arrow_type_name, borel2_presentation};

use crate::error::{Error, Result};
use crate::schur::reduce_coef;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub label: String,
    /// Type tag, e.g. `α` for arrows of type `α_0`.
    pub kind: String,
}

/// A finite quiver with labelled vertices and arrows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vindex: HashMap<String, usize>,
    aindex: HashMap<String, usize>,
}

/// Arrow indices in traversal order.
pub type Path = Vec<usize>;

impl Quiver {
    pub fn new<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut q = Quiver::default();
        for v in vertices {
            q.add_vertex(v)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.vindex.contains_key(&label) {
            return Err(Error::invalid(format!("duplicate vertex {label}")));
        }
        self.vindex.insert(label.clone(), self.vertices.len());
        self.vertices.push(label);
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow_by_index(
        &mut self,
        src: usize,
        dst: usize,
        label: impl Into<String>,
        kind: impl Into<String>,
    ) -> Result<usize> {
        let label = label.into();
        if src >= self.vertices.len() || dst >= self.vertices.len() {
            return Err(Error::invalid(format!("arrow {label} has a missing endpoint")));
        }
        if self.aindex.contains_key(&label) {
            return Err(Error::invalid(format!("duplicate arrow label {label}")));
        }
        self.aindex.insert(label.clone(), self.arrows.len());
        self.arrows.push(Arrow { src, dst, label, kind: kind.into() });
        Ok(self.arrows.len() - 1)
    }

    pub fn add_arrow(
        &mut self,
        src: &str,
        dst: &str,
        label: impl Into<String>,
        kind: impl Into<String>,
    ) -> Result<usize> {
        let s = self.vertex(src)?;
        let d = self.vertex(dst)?;
        self.add_arrow_by_index(s, d, label, kind)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vindex.get(label).copied().ok_or_else(|| Error::invalid(format!("no vertex {label}")))
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vindex.get(label).copied()
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.aindex.get(label).copied()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].src == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].dst == v)
    }

    /// Whether the arrows compose head to tail.
    pub fn is_path(&self, path: &[usize]) -> bool {
        path.windows(2).all(|w| self.arrows[w[0]].dst == self.arrows[w[1]].src)
    }

    pub fn path_source(&self, path: &[usize]) -> usize {
        self.arrows[path[0]].src
    }

    pub fn path_target(&self, path: &[usize]) -> usize {
        self.arrows[path[path.len() - 1]].dst
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.num_vertices()];
        for a in &self.arrows {
            indeg[a.dst] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.num_vertices()).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for a in self.out_arrows(v).collect::<Vec<_>>() {
                let d = self.arrows[a].dst;
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push_back(d);
                }
            }
        }
        seen == self.num_vertices()
    }

    /// All paths of length at least 1, grouped by `(source, target)`, for an
    /// acyclic quiver. Fails when there are more than `cap` paths.
    pub fn all_paths(&self, cap: usize) -> Result<BTreeMap<(usize, usize), Vec<Path>>> {
        if !self.is_acyclic() {
            return Err(Error::invalid("path enumeration needs an acyclic quiver"));
        }
        let mut out: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        let mut count = 0usize;
        let mut stack: Vec<Path> = (0..self.num_arrows()).map(|a| vec![a]).collect();
        while let Some(p) = stack.pop() {
            count += 1;
            if count > cap {
                return Err(Error::invalid(format!("more than {cap} paths")));
            }
            let t = self.path_target(&p);
            for a in self.out_arrows(t) {
                let mut q = p.clone();
                q.push(a);
                stack.push(q);
            }
            out.entry((self.path_source(&p), t)).or_default().push(p);
        }
        for v in out.values_mut() {
            v.sort();
        }
        Ok(out)
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                k += 1;
                for a in &self.arrows {
                    for (x, y) in [(a.src, a.dst), (a.dst, a.src)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = id;
                            members.push(y);
                        }
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    /// The full subquiver on `vertices`, re-indexed in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut q = Quiver::new(vertices.iter().map(|&v| self.vertices[v].clone())).expect("distinct labels");
        for a in &self.arrows {
            if let (Some(&s), Some(&d)) = (pos.get(&a.src), pos.get(&a.dst)) {
                q.add_arrow_by_index(s, d, a.label.clone(), a.kind.clone()).expect("distinct labels");
            }
        }
        q
    }

    /// The quiver spanned by a subquiver, keeping its arrows only.
    pub fn restrict_to(&self, sub: &Subquiver) -> Quiver {
        let vs: Vec<usize> = sub.vertices.iter().copied().collect();
        let pos: HashMap<usize, usize> = vs.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut q = Quiver::new(vs.iter().map(|&v| self.vertices[v].clone())).expect("distinct labels");
        for &a in &sub.arrows {
            let ar = &self.arrows[a];
            q.add_arrow_by_index(pos[&ar.src], pos[&ar.dst], ar.label.clone(), ar.kind.clone())
                .expect("distinct labels");
        }
        q
    }

    /// Removes one arrow.
    pub fn without_arrow(&self, a: usize) -> Quiver {
        let mut q = Quiver::new(self.vertices.iter().cloned()).expect("distinct labels");
        for (b, ar) in self.arrows.iter().enumerate() {
            if b != a {
                q.add_arrow_by_index(ar.src, ar.dst, ar.label.clone(), ar.kind.clone()).expect("distinct labels");
            }
        }
        q
    }

    /// `(source label, target label, kind)` for every arrow, sorted.
    pub fn typed_arrow_multiset(&self) -> Vec<(String, String, String)> {
        let mut v: Vec<_> = self
            .arrows
            .iter()
            .map(|a| (self.vertices[a.src].clone(), self.vertices[a.dst].clone(), a.kind.clone()))
            .collect();
        v.sort();
        v
    }

    /// Whether every arrow is determined by its source and type, so that a
    /// path can be written as a word in types.
    fn types_determine_paths(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.arrows.iter().all(|a| !a.kind.is_empty() && seen.insert((a.src, a.kind.clone())))
    }

    /// Right-to-left word of a path: `α^3`, `αβ`; arrow labels joined by `·`
    /// when types do not determine the path.
    pub fn path_word(&self, path: &[usize]) -> String {
        if !self.types_determine_paths() {
            let parts: Vec<&str> = path.iter().rev().map(|&a| self.arrows[a].label.as_str()).collect();
            return parts.join("·");
        }
        let mut out = String::new();
        let kinds: Vec<&str> = path.iter().rev().map(|&a| self.arrows[a].kind.as_str()).collect();
        let mut k = 0;
        while k < kinds.len() {
            let mut run = 1;
            while k + run < kinds.len() && kinds[k + run] == kinds[k] {
                run += 1;
            }
            out.push_str(kinds[k]);
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            k += run;
        }
        out
    }
}

/// A subquiver given by vertex and arrow index sets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Subquiver {
    pub vertices: BTreeSet<usize>,
    pub arrows: BTreeSet<usize>,
}

impl Subquiver {
    pub fn whole(q: &Quiver) -> Self {
        Subquiver { vertices: (0..q.num_vertices()).collect(), arrows: (0..q.num_arrows()).collect() }
    }

    /// The full subquiver on a vertex set.
    pub fn full_on(q: &Quiver, vertices: impl IntoIterator<Item = usize>) -> Self {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        let arrows = (0..q.num_arrows())
            .filter(|&a| vertices.contains(&q.arrow(a).src) && vertices.contains(&q.arrow(a).dst))
            .collect();
        Subquiver { vertices, arrows }
    }

    /// Given by arrow labels; vertices are their endpoints.
    pub fn from_arrow_labels(q: &Quiver, labels: &[&str]) -> Result<Self> {
        let mut s = Subquiver::default();
        for l in labels {
            let a = q.arrow_index(l).ok_or_else(|| Error::invalid(format!("no arrow {l}")))?;
            s.arrows.insert(a);
            s.vertices.insert(q.arrow(a).src);
            s.vertices.insert(q.arrow(a).dst);
        }
        Ok(s)
    }

    pub fn contains_path(&self, path: &[usize]) -> bool {
        path.iter().all(|a| self.arrows.contains(a))
    }

    pub fn is_within(&self, q: &Quiver) -> bool {
        self.vertices.iter().all(|&v| v < q.num_vertices())
            && self.arrows.iter().all(|&a| {
                a < q.num_arrows() && self.vertices.contains(&q.arrow(a).src) && self.vertices.contains(&q.arrow(a).dst)
            })
    }
}

/// A linear combination of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    terms: Vec<(i64, Path)>,
}

impl Relation {
    /// Builds and canonicalises a relation; all paths must be parallel.
    pub fn new(q: &Quiver, terms: Vec<(i64, Path)>, p: u64) -> Result<Self> {
        for (_, path) in &terms {
            if path.is_empty() || !q.is_path(path) {
                return Err(Error::invalid("relation term is not a path"));
            }
        }
        if let Some((_, first)) = terms.first() {
            let (s, t) = (q.path_source(first), q.path_target(first));
            if terms.iter().any(|(_, path)| q.path_source(path) != s || q.path_target(path) != t) {
                return Err(Error::invalid("relation terms are not parallel"));
            }
        }
        Ok(Relation::canonical(q, terms, p))
    }

    /// Merges equal paths, reduces modulo `p`, orders the terms by word and
    /// scales so that the leading coefficient is 1 (`p > 0`) or positive with
    /// trivial content (`p = 0`).
    fn canonical(q: &Quiver, terms: Vec<(i64, Path)>, p: u64) -> Self {
        let mut merged: BTreeMap<Path, i64> = BTreeMap::new();
        for (c, path) in terms {
            let e = merged.entry(path).or_insert(0);
            *e = reduce_coef(*e + c, p);
        }
        let mut v: Vec<(i64, Path)> = merged.into_iter().filter(|&(_, c)| c != 0).map(|(pa, c)| (c, pa)).collect();
        v.sort_by(|a, b| (q.path_word(&a.1), &a.1).cmp(&(q.path_word(&b.1), &b.1)));
        if let Some(&(lead, _)) = v.first() {
            if p == 0 {
                let g = v.iter().fold(0i64, |g, (c, _)| num_integer::gcd(g, *c));
                let s = if lead < 0 { -g } else { g };
                for t in v.iter_mut() {
                    t.0 /= s;
                }
            } else {
                let inv = crate::linalg::Field::inv(&crate::linalg::PrimeField::new(p), &(lead as u64)) as i64;
                for t in v.iter_mut() {
                    t.0 = reduce_coef(t.0 * inv, p);
                }
            }
        }
        Relation { terms: v }
    }

    pub fn terms(&self) -> &[(i64, Path)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn source(&self, q: &Quiver) -> Option<usize> {
        self.terms.first().map(|(_, p)| q.path_source(p))
    }

    pub fn target(&self, q: &Quiver) -> Option<usize> {
        self.terms.first().map(|(_, p)| q.path_target(p))
    }

    /// `(αβ-βα)_6`, `(α^5)_5'`. Coefficients are printed as signed residues.
    pub fn render(&self, q: &Quiver, p: u64) -> String {
        let Some(src) = self.source(q) else {
            return "0".to_string();
        };
        let mut body = String::new();
        for (k, (c, path)) in self.terms.iter().enumerate() {
            let c = if p > 0 && 2 * *c > p as i64 { *c - p as i64 } else { *c };
            let (neg, mag) = (c < 0, c.abs());
            if neg {
                body.push('-');
            } else if k > 0 {
                body.push('+');
            }
            if mag != 1 {
                body.push_str(&mag.to_string());
            }
            body.push_str(&q.path_word(path));
        }
        format!("({body})_{}", q.vertices()[src])
    }

    /// The images of the paths under a map of arrow indices.
    pub(crate) fn map_paths(&self, f: impl Fn(&Path) -> Path) -> Vec<(i64, Path)> {
        self.terms.iter().map(|(c, p)| (*c, f(p))).collect()
    }
}

/// A quiver with a list of relations over a field of characteristic `char`.
#[derive(Debug, Clone)]
pub struct QuiverWithRelations {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub char: u64,
}

impl QuiverWithRelations {
    pub fn rendered_relations(&self) -> BTreeSet<String> {
        self.relations.iter().map(|r| r.render(&self.quiver, self.char)).collect()
    }

    pub fn to_json(&self) -> String {
        export::quiver_json(&self.quiver, &self.relations, self.char)
    }

    pub fn to_dot(&self) -> String {
        export::quiver_dot(&self.quiver, &self.relations, self.char)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            writeln!(f, "  {}: {} -> {}", a.label, self.vertices[a.src], self.vertices[a.dst])?;
        }
        Ok(())
    }
}

/// Restriction of relations to a subquiver: each relation keeps the terms
/// whose paths lie in `sub`; relations losing every term are dropped.
pub fn restrict_relations(q: &Quiver, sub: &Subquiver, rels: &[Relation], p: u64) -> Vec<Relation> {
    let mut out = Vec::new();
    for r in rels {
        let kept: Vec<(i64, Path)> = r.terms().iter().filter(|(_, path)| sub.contains_path(path)).cloned().collect();
        if kept.is_empty() {
            continue;
        }
        let rel = Relation::canonical(q, kept, p);
        if !rel.is_zero() && !out.contains(&rel) {
            out.push(rel);
        }
    }
    out
}

/// A path of `q` that starts and ends in `sub` but leaves it, if any.
pub fn convexity_witness(sub: &Subquiver, q: &Quiver) -> Option<Path> {
    // a path leaving `sub` uses some arrow outside it; look for a path from
    // `sub` to its source and from its target back into `sub`
    let reach_from = |starts: &BTreeSet<usize>, forward: bool| -> Vec<Option<(usize, Option<usize>)>> {
        let n = q.num_vertices();
        let mut parent: Vec<Option<(usize, Option<usize>)>> = vec![None; n];
        let mut queue = VecDeque::new();
        for &s in starts {
            parent[s] = Some((s, None));
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for (a, ar) in q.arrows().iter().enumerate() {
                let (from, to) = if forward { (ar.src, ar.dst) } else { (ar.dst, ar.src) };
                if from == v && parent[to].is_none() {
                    parent[to] = Some((v, Some(a)));
                    queue.push_back(to);
                }
            }
        }
        parent
    };
    let fwd = reach_from(&sub.vertices, true);
    let bwd = reach_from(&sub.vertices, false);
    for (a, ar) in q.arrows().iter().enumerate() {
        if sub.arrows.contains(&a) {
            continue;
        }
        if fwd[ar.src].is_some() && bwd[ar.dst].is_some() {
            let mut head = Vec::new();
            let mut v = ar.src;
            while let Some((prev, Some(b))) = fwd[v] {
                head.push(b);
                v = prev;
            }
            head.reverse();
            head.push(a);
            let mut v = ar.dst;
            while let Some((next, Some(b))) = bwd[v] {
                head.push(b);
                v = next;
            }
            return Some(head);
        }
    }
    None
}

pub fn is_convex(sub: &Subquiver, q: &Quiver) -> bool {
    convexity_witness(sub, q).is_none()
}

/// `sep(Q)`: vertices `v'` and `v''`, and an arrow `v' → w''` for every
/// arrow `v → w`.
pub fn separated(q: &Quiver) -> Quiver {
    let n = q.num_vertices();
    let mut s =
        Quiver::new(q.vertices().iter().map(|v| format!("{v}'")).chain(q.vertices().iter().map(|v| format!("{v}''"))))
            .expect("distinct labels");
    for a in q.arrows() {
        s.add_arrow_by_index(a.src, n + a.dst, a.label.clone(), a.kind.clone()).expect("distinct labels");
    }
    s
}
