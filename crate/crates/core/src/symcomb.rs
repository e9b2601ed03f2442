//! Multi-indices, compositions and Young subgroups of the symmetric group.
//!
//! Conventions:
//! * positions are 0-based internally and printed 1-based;
//! * permutations compose as functions, `(στ)(x) = σ(τ(x))`;
//! * `Σ_r` acts on the right of multi-indices by `(iσ)_s = i_{σ(s)}`, so that
//!   `(iσ)τ = i(στ)`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

/// An element of `I(n,r)`: a sequence of `r` values in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex {
    n: usize,
    entries: Vec<u8>,
}

impl MultiIndex {
    pub fn new(n: usize, entries: Vec<u8>) -> Result<Self> {
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::invalid(format!("n = {n} out of range")));
        }
        if let Some(&e) = entries.iter().find(|&&e| e == 0 || e as usize > n) {
            return Err(Error::invalid(format!("entry {e} not in 1..={n}")));
        }
        Ok(MultiIndex { n, entries })
    }

    pub(crate) fn new_unchecked(n: usize, entries: Vec<u8>) -> Self {
        MultiIndex { n, entries }
    }

    /// Parses either a digit string (`"122"`) or a comma list (`"1,2,2"`).
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| Error::invalid(format!("bad multi-index entry {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::invalid(format!("bad multi-index digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        MultiIndex::new(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn weight(&self) -> Composition {
        let mut parts = vec![0usize; self.n];
        for &e in &self.entries {
            parts[e as usize - 1] += 1;
        }
        Composition { parts }
    }

    /// Componentwise `i_s <= j_s`. Multi-indices of different shape are
    /// never comparable.
    pub fn leq(&self, other: &MultiIndex) -> bool {
        self.n == other.n && self.r() == other.r() && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// The right action `iσ`.
    pub fn act(&self, sigma: &Permutation) -> MultiIndex {
        assert_eq!(sigma.len(), self.r(), "permutation degree mismatch");
        MultiIndex { n: self.n, entries: sigma.images.iter().map(|&x| self.entries[x]).collect() }
    }

    /// `(v, i_1, ..., i_r)`.
    pub fn prepend(&self, v: u8) -> MultiIndex {
        let mut entries = Vec::with_capacity(self.r() + 1);
        entries.push(v);
        entries.extend_from_slice(&self.entries);
        MultiIndex { n: self.n, entries }
    }

    /// The same entries viewed in `I(m,r)` for a larger `m`.
    pub fn widen(&self, m: usize) -> MultiIndex {
        assert!(m >= self.n);
        MultiIndex { n: m, entries: self.entries.clone() }
    }

    /// All of `I(n,r)` in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![1u8; r];
        if n == 0 {
            return out;
        }
        loop {
            out.push(MultiIndex::new_unchecked(n, cur.clone()));
            let mut k = r;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if (cur[k] as usize) < n {
                    cur[k] += 1;
                    for c in cur.iter_mut().skip(k + 1) {
                        *c = 1;
                    }
                    break;
                }
            }
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// An element of `Λ(n,r)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("composition needs at least one part"));
        }
        Ok(Composition { parts })
    }

    /// Parses `"0,3"` or, when every part is a single digit, `"03"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad composition part {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::invalid(format!("bad composition digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Composition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn r(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Dominance: every prefix sum of `self` is at most the matching prefix
    /// sum of `other`.
    pub fn dominance_leq(&self, other: &Composition) -> Result<bool> {
        if self.n() != other.n() || self.r() != other.r() {
            return Err(Error::invalid(format!("cannot compare {self} with {other}: different n or r")));
        }
        let (mut a, mut b) = (0, 0);
        for (x, y) in self.parts.iter().zip(&other.parts) {
            a += x;
            b += y;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All of `Λ(n,r)`, lexicographically descending, so `(r,0,..,0)` first.
    pub fn all(n: usize, r: usize) -> Vec<Composition> {
        fn rec(n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 1 {
                cur.push(r);
                out.push(Composition { parts: cur.clone() });
                cur.pop();
                return;
            }
            for first in (0..=r).rev() {
                cur.push(first);
                rec(n - 1, r - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, r, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }

    /// `ℓ(λ) = (1,..,1, 2,..,2, ..., n,..,n)`.
    pub fn standard_multiindex(&self) -> MultiIndex {
        let mut entries = Vec::with_capacity(self.r());
        for (t, &c) in self.parts.iter().enumerate() {
            entries.extend(std::iter::repeat_n((t + 1) as u8, c));
        }
        MultiIndex::new_unchecked(self.n(), entries)
    }

    /// `ℓ(λ(s,q))`: the standard multi-index with `q` copies of `s+1`
    /// turned into `s`. Here `s` is 1-based.
    pub fn shifted_standard(&self, s: usize, q: usize) -> Result<MultiIndex> {
        if s == 0 || s >= self.n() {
            return Err(Error::invalid(format!("s = {s} not in 1..{}", self.n())));
        }
        if q > self.parts[s] {
            return Err(Error::invalid(format!("cannot move {q} entries from value {} in {self}", s + 1)));
        }
        let mut parts = self.parts.clone();
        parts[s - 1] += q;
        parts[s] -= q;
        Ok(Composition { parts }.standard_multiindex())
    }

    /// `self + q·γ_s` where `γ_s = ε_s − ε_{s+1}` (1-based `s`), if it stays
    /// non-negative.
    pub fn shift(&self, s: usize, q: usize) -> Option<Composition> {
        if s == 0 || s >= self.n() || q > self.parts[s] {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[s - 1] += q;
        parts[s] -= q;
        Some(Composition { parts })
    }

    /// If `other − self = q·γ_s` for some `s` and `q > 0`, returns `(s, q)`.
    pub fn gamma_step_to(&self, other: &Composition) -> Option<(usize, usize)> {
        if self.n() != other.n() {
            return None;
        }
        let diff: Vec<i64> = other.parts.iter().zip(&self.parts).map(|(&a, &b)| a as i64 - b as i64).collect();
        let nz: Vec<usize> = (0..diff.len()).filter(|&t| diff[t] != 0).collect();
        if nz.len() == 2 && nz[1] == nz[0] + 1 && diff[nz[0]] > 0 && diff[nz[0]] == -diff[nz[1]] {
            Some((nz[0] + 1, diff[nz[0]] as usize))
        } else {
            None
        }
    }

    pub fn extend_zeros(&self, n: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts.resize(n.max(self.n()), 0);
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// A permutation of `{0, .., r-1}`, stored by images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { images: (0..r).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::invalid(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The subgroup of `Σ_r` preserving every block of a set partition of the
/// positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungSubgroup {
    r: usize,
    blocks: Vec<Vec<usize>>,
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

impl YoungSubgroup {
    /// Blocks are the level sets of `keys`.
    pub fn from_levels<K: Ord + Clone>(keys: &[K]) -> Self {
        let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        for (pos, k) in keys.iter().enumerate() {
            groups.entry(k.clone()).or_default().push(pos);
        }
        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort();
        YoungSubgroup { r: keys.len(), blocks }
    }

    pub fn from_blocks(r: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut label = vec![usize::MAX; r];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= r || label[x] != usize::MAX {
                    return Err(Error::invalid("blocks must partition the positions"));
                }
                label[x] = b;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(Error::invalid("blocks must cover every position"));
        }
        Ok(YoungSubgroup::from_levels(&label))
    }

    pub fn trivial(r: usize) -> Self {
        YoungSubgroup::from_levels(&(0..r).collect::<Vec<_>>())
    }

    pub fn full(r: usize) -> Self {
        YoungSubgroup::from_levels(&vec![0u8; r])
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn order(&self) -> u128 {
        self.blocks.iter().map(|b| factorial(b.len())).product()
    }

    fn block_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.r];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                label[x] = b;
            }
        }
        label
    }

    /// Whether every block of `self` lies inside a block of `outer`, that is,
    /// whether `self` is a subgroup of `outer`.
    pub fn refines(&self, outer: &YoungSubgroup) -> bool {
        if self.r != outer.r {
            return false;
        }
        let lab = outer.block_labels();
        self.blocks.iter().all(|b| b.iter().all(|&x| lab[x] == lab[b[0]]))
    }

    pub fn intersect(&self, other: &YoungSubgroup) -> YoungSubgroup {
        assert_eq!(self.r, other.r);
        let a = self.block_labels();
        let b = other.block_labels();
        let keys: Vec<(usize, usize)> = a.into_iter().zip(b).collect();
        YoungSubgroup::from_levels(&keys)
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        let lab = self.block_labels();
        sigma.len() == self.r && (0..self.r).all(|x| lab[sigma.apply(x)] == lab[x])
    }

    /// Adjacent transpositions inside each block.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut gens = Vec::new();
        for block in &self.blocks {
            for w in block.windows(2) {
                let mut images: Vec<usize> = (0..self.r).collect();
                images.swap(w[0], w[1]);
                gens.push(Permutation { images });
            }
        }
        gens
    }

    /// Every element, sorted lexicographically by images.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.r)];
        for block in &self.blocks {
            let perms = permutations_of(block);
            let mut next = Vec::with_capacity(out.len() * perms.len());
            for base in &out {
                for p in &perms {
                    let mut images = base.images.clone();
                    for (&src, &dst) in block.iter().zip(p) {
                        images[src] = dst;
                    }
                    next.push(Permutation { images });
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Restriction to the positions of `block`, reindexed to `0..block.len()`.
    fn restrict_to(&self, block: &[usize]) -> YoungSubgroup {
        let lab = self.block_labels();
        let keys: Vec<usize> = block.iter().map(|&x| lab[x]).collect();
        YoungSubgroup::from_levels(&keys)
    }
}

/// All orderings of `items`, lexicographic.
fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let k = match (0..cur.len().saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) {
            Some(k) => k,
            None => return out,
        };
        let l = (k + 1..cur.len()).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
        out.push(cur.clone());
    }
}

pub fn stabilizer(i: &MultiIndex) -> YoungSubgroup {
    YoungSubgroup::from_levels(i.entries())
}

pub fn stabilizer_pair(i: &MultiIndex, j: &MultiIndex) -> YoungSubgroup {
    assert_eq!(i.r(), j.r());
    let keys: Vec<(u8, u8)> = i.entries().iter().copied().zip(j.entries().iter().copied()).collect();
    YoungSubgroup::from_levels(&keys)
}

pub fn stabilizer_triple(i: &MultiIndex, j: &MultiIndex, h: &MultiIndex) -> YoungSubgroup {
    assert!(i.r() == j.r() && j.r() == h.r());
    let keys: Vec<(u8, u8, u8)> = (0..i.r()).map(|s| (i.entries()[s], j.entries()[s], h.entries()[s])).collect();
    YoungSubgroup::from_levels(&keys)
}

/// One representative for each double coset `HσK` in `G`.
///
/// Each representative is the lexicographically smallest element (by images)
/// of its double coset. Since `H` and `K` refine `G`, the double coset space
/// splits as a product over the blocks of `G`; each factor is enumerated by
/// breadth-first search over the elements of the block's symmetric group,
/// and the representatives of the factors are combined.
pub fn double_coset_transversal(h: &YoungSubgroup, g: &YoungSubgroup, k: &YoungSubgroup) -> Result<Vec<Permutation>> {
    for sub in [h, k] {
        if !sub.refines(g) {
            return Err(Error::NotRefinement { inner: format!("{sub}"), outer: format!("{g}") });
        }
    }
    let r = g.degree();
    let mut reps: Vec<Permutation> = vec![Permutation::identity(r)];
    for block in g.blocks() {
        if block.len() < 2 {
            continue;
        }
        let local = block_transversal(&h.restrict_to(block), &k.restrict_to(block), block.len());
        let mut next = Vec::with_capacity(reps.len() * local.len());
        for base in &reps {
            for loc in &local {
                let mut images = base.images.clone();
                for (a, &x) in block.iter().enumerate() {
                    images[x] = block[loc[a]];
                }
                next.push(Permutation { images });
            }
        }
        reps = next;
    }
    reps.sort();
    Ok(reps)
}

/// Transversal of `H \ Σ_m / K` for subgroups given on `0..m`.
fn block_transversal(h: &YoungSubgroup, k: &YoungSubgroup, m: usize) -> Vec<Vec<usize>> {
    let hm = h.order();
    let km = k.order();
    let full = factorial(m);
    if hm == full || km == full {
        return vec![(0..m).collect()];
    }
    let elements = YoungSubgroup::full(m).elements();
    let index: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(n, p)| (p.images(), n)).collect();
    let hg = h.generators();
    let kg = k.generators();
    let mut seen = vec![false; elements.len()];
    let mut reps = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..elements.len() {
        if seen[start] {
            continue;
        }
        reps.push(elements[start].images.clone());
        seen[start] = true;
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            let sigma = &elements[cur];
            let nbrs = hg.iter().map(|t| t.compose(sigma)).chain(kg.iter().map(|t| sigma.compose(t)));
            for nb in nbrs {
                let id = index[nb.images()];
                if !seen[id] {
                    seen[id] = true;
                    queue.push_back(id);
                }
            }
        }
    }
    reps
}

/// `[A : B]` for a Young subgroup `B` of `A`.
pub fn subgroup_index(a: &YoungSubgroup, b: &YoungSubgroup) -> Result<u128> {
    if !b.refines(a) {
        return Err(Error::NotRefinement { inner: format!("{b}"), outer: format!("{a}") });
    }
    Ok(a.order() / b.order())
}

impl fmt::Display for YoungSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| (x + 1).to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "Σ[{}]", parts.join(""))
    }
}

/// The `Σ_r`-orbit of a pair of multi-indices, stored by its canonical
/// representative: column pairs `(i_s, j_s)` sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairOrbit {
    i: MultiIndex,
    j: MultiIndex,
}

impl PairOrbit {
    pub fn canonical(i: &MultiIndex, j: &MultiIndex) -> Result<Self> {
        if i.n() != j.n() || i.r() != j.r() {
            return Err(Error::invalid(format!("pair ({i},{j}) has mismatched shape")));
        }
        let mut cols: Vec<(u8, u8)> = i.entries().iter().copied().zip(j.entries().iter().copied()).collect();
        cols.sort_unstable();
        let (a, b): (Vec<u8>, Vec<u8>) = cols.into_iter().unzip();
        Ok(PairOrbit { i: MultiIndex::new_unchecked(i.n(), a), j: MultiIndex::new_unchecked(i.n(), b) })
    }

    /// Parses the indices as in [`MultiIndex::parse`] and canonicalises.
    pub fn parse(n: usize, i: &str, j: &str) -> Result<Self> {
        PairOrbit::canonical(&MultiIndex::parse(n, i)?, &MultiIndex::parse(n, j)?)
    }

    pub fn diagonal(lambda: &Composition) -> Self {
        let l = lambda.standard_multiindex();
        PairOrbit { i: l.clone(), j: l }
    }

    pub fn i(&self) -> &MultiIndex {
        &self.i
    }

    pub fn j(&self) -> &MultiIndex {
        &self.j
    }

    pub fn n(&self) -> usize {
        self.i.n()
    }

    pub fn r(&self) -> usize {
        self.i.r()
    }

    pub fn is_borel(&self) -> bool {
        self.i.leq(&self.j)
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }

    /// Weight of the left index: the idempotent `ξ_μ` with `ξ_μ·x = x`.
    pub fn left_weight(&self) -> Composition {
        self.i.weight()
    }

    /// Weight of the right index: the idempotent `ξ_λ` with `x·ξ_λ = x`.
    pub fn right_weight(&self) -> Composition {
        self.j.weight()
    }

    /// Whether the canonical `j` is weakly increasing, i.e. the orbit has a
    /// representative whose second index is standard.
    pub fn has_standard_right(&self) -> bool {
        self.j.entries().windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for PairOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ξ_{{{},{}}}", self.i, self.j)
    }
}
