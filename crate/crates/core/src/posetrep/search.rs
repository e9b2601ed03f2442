use super::Poset;
use serde::Serialize;
use std::collections::BTreeSet;

/// Backtracking with forward checking: every unplaced pattern element keeps
/// the host elements still compatible with the partial map, and the most
/// constrained one is placed next.
struct Search<'a> {
    host: &'a Poset,
    pat: &'a Poset,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(host: &'a Poset, pat: &'a Poset) -> Self {
        Search { host, pat, map: vec![None; pat.len()], used: vec![false; host.len()] }
    }

    fn initial_domains(&self) -> Vec<Vec<usize>> {
        let host_degree: Vec<usize> = (0..self.host.len()).map(|x| self.host.comparability_degree(x)).collect();
        let mut order: Vec<usize> = (0..self.host.len()).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(host_degree[x]), x));
        (0..self.pat.len())
            .map(|a| {
                let need = self.pat.comparability_degree(a);
                order.iter().copied().filter(|&x| host_degree[x] >= need).collect()
            })
            .collect()
    }

    fn compatible(&self, a: usize, x: usize, b: usize, y: usize) -> bool {
        x != y && self.pat.less(a, b) == self.host.less(x, y) && self.pat.less(b, a) == self.host.less(y, x)
    }

    /// Depth-first search; `visit` returns false to stop.
    fn run(&mut self, domains: &[Vec<usize>], visit: &mut dyn FnMut(&[Option<usize>]) -> bool) -> bool {
        let next = (0..self.pat.len()).filter(|&a| self.map[a].is_none()).min_by_key(|&a| (domains[a].len(), a));
        let Some(a) = next else {
            return visit(&self.map);
        };
        for &x in &domains[a] {
            if self.used[x] {
                continue;
            }
            let mut narrowed = domains.to_vec();
            let mut dead = false;
            for b in (0..self.pat.len()).filter(|&b| b != a && self.map[b].is_none()) {
                narrowed[b].retain(|&y| !self.used[y] && self.compatible(a, x, b, y));
                if narrowed[b].is_empty() {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.map[a] = Some(x);
            self.used[x] = true;
            let go_on = self.run(&narrowed, visit);
            self.map[a] = None;
            self.used[x] = false;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn start(&mut self, visit: &mut dyn FnMut(&[Option<usize>]) -> bool) {
        if self.pat.len() > self.host.len() || width(self.pat).0 > width(self.host).0 {
            return;
        }
        let d = self.initial_domains();
        self.run(&d, visit);
    }
}

/// An order embedding of `pat` onto a full subposet of `host`:
/// `embedding[a]` is the image of pattern element `a`.
pub fn contains_full_subposet(host: &Poset, pat: &Poset) -> Option<Vec<usize>> {
    let mut found = None;
    Search::new(host, pat).start(&mut |m| {
        found = Some(m.iter().map(|x| x.expect("complete")).collect());
        false
    });
    found
}

/// Distinct images of full embeddings of `pat` in `host`.
pub fn full_subposet_images(host: &Poset, pat: &Poset) -> Vec<BTreeSet<usize>> {
    let mut images = BTreeSet::new();
    Search::new(host, pat).start(&mut |m| {
        images.insert(m.iter().map(|x| x.expect("complete")).collect::<BTreeSet<_>>());
        true
    });
    images.into_iter().collect()
}

/// The six minimal wild posets, smallest first.
pub fn nazarova_patterns() -> Vec<(&'static str, Poset)> {
    let mut v = vec![
        ("(1,1,1,1,1)", Poset::chains(&[1, 1, 1, 1, 1])),
        ("(1,1,1,2)", Poset::chains(&[1, 1, 1, 2])),
        ("(2,2,3)", Poset::chains(&[2, 2, 3])),
        ("(1,3,4)", Poset::chains(&[1, 3, 4])),
        ("(1,2,6)", Poset::chains(&[1, 2, 6])),
        ("(N,5)", Poset::disjoint_union(&[Poset::n_shape(), Poset::chain(5)])),
    ];
    v.sort_by_key(|(_, p)| p.len());
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NazarovaReport {
    pub wild: bool,
    /// Name of the first pattern found and the host labels of its image,
    /// listed in pattern order.
    pub pattern: Option<String>,
    pub embedding: Option<Vec<String>>,
}

/// Wild iff one of the six minimal wild posets embeds as a full subposet.
pub fn nazarova_wild(p: &Poset) -> NazarovaReport {
    for (name, pat) in nazarova_patterns() {
        if let Some(emb) = contains_full_subposet(p, &pat) {
            return NazarovaReport { wild: true, pattern: Some(name.to_string()), embedding: Some(p.labels_of(&emb)) };
        }
    }
    NazarovaReport { wild: false, pattern: None, embedding: None }
}

fn augment(adj: &[Vec<usize>], u: usize, seen: &mut [bool], match_r: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if !seen[v] {
            seen[v] = true;
            if match_r[v].is_none_or(|w| augment(adj, w, seen, match_r)) {
                match_r[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// Width and one maximum antichain, via Dilworth's theorem: a maximum
/// matching in the comparability bipartite graph and König's cover.
pub fn width(p: &Poset) -> (usize, Vec<usize>) {
    let n = p.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|a| (0..n).filter(|&b| p.less(a, b)).collect()).collect();
    let mut match_r: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        augment(&adj, u, &mut vec![false; n], &mut match_r);
    }
    let mut match_l: Vec<Option<usize>> = vec![None; n];
    for (v, m) in match_r.iter().enumerate() {
        if let Some(u) = m {
            match_l[*u] = Some(v);
        }
    }
    // alternating reachability from unmatched left vertices
    let (mut zl, mut zr) = (vec![false; n], vec![false; n]);
    let mut stack: Vec<usize> = (0..n).filter(|&u| match_l[u].is_none()).collect();
    for &u in &stack {
        zl[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !zr[v] && match_l[u] != Some(v) {
                zr[v] = true;
                if let Some(w) = match_r[v] {
                    if !zl[w] {
                        zl[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    // König cover is (L \ Z) ∪ (R ∩ Z); the antichain avoids it on both sides
    let antichain: Vec<usize> = (0..n).filter(|&x| zl[x] && !zr[x]).collect();
    let matched = match_r.iter().filter(|m| m.is_some()).count();
    debug_assert_eq!(antichain.len(), n - matched);
    (n - matched, antichain)
}
