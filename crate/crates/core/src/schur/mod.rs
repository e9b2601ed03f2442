//! Structure-constant algebras, and Schur and Borel-Schur algebras built
//! from the double-coset multiplication rule.

mod build;
mod embed;
mod json;

pub use build::{basis_dimension, borel_basis, build_algebra, full_basis, multiply_orbits, BasisKind, ScaleCap};
pub use embed::{embed_degree, one_point_decompose, truncate_columns, EmbeddingCertificate, OnePointDecomposition};

use crate::error::{Error, Result};
use crate::linalg::is_prime;
use crate::symcomb::{Composition, PairOrbit};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// Name of a basis element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Xi(PairOrbit),
    Name(String),
}

impl Label {
    pub fn as_orbit(&self) -> Option<&PairOrbit> {
        match self {
            Label::Xi(o) => Some(o),
            Label::Name(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Xi(o) => write!(f, "{o}"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

/// Sparse integer combination of basis elements, reduced modulo the
/// characteristic. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearCombo {
    terms: BTreeMap<usize, i64>,
}

pub(crate) fn reduce_coef(c: i64, p: u64) -> i64 {
    if p == 0 {
        c
    } else {
        c.rem_euclid(p as i64)
    }
}

impl LinearCombo {
    pub fn zero() -> Self {
        LinearCombo::default()
    }

    pub fn basis(k: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, 1);
        LinearCombo { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, i64)>, p: u64) -> Self {
        let mut out = LinearCombo::zero();
        for (k, c) in terms {
            out.add_term(k, c, p);
        }
        out
    }

    pub fn add_term(&mut self, k: usize, c: i64, p: u64) {
        let e = self.terms.entry(k).or_insert(0);
        *e = reduce_coef(*e + c, p);
        if *e == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Renders as `2·ξ_{11,33} + ξ_{12,32}`, or `0`.
    pub fn render(&self, basis: &[Label]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (k, c)) in self.terms().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if n == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag != 1 {
                out.push_str(&format!("{mag}·"));
            }
            out.push_str(&basis[k].to_string());
        }
        out
    }
}

/// A finite-dimensional algebra given by a labelled basis, a list of basis
/// elements forming an orthogonal idempotent decomposition of 1, and
/// integer structure constants read modulo `char`.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    shape: Option<(usize, usize)>,
    char: u64,
    basis: Vec<Label>,
    index: HashMap<Label, usize>,
    idempotents: Vec<usize>,
    table: BTreeMap<(usize, usize), Vec<(usize, i64)>>,
    left_idem: Vec<Option<usize>>,
    right_idem: Vec<Option<usize>>,
}

pub(crate) fn check_char(p: u64) -> Result<()> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadCharacteristic(p))
    }
}

impl StructureAlgebra {
    /// Assembles an algebra. Table entries are `(h, l) -> [(k, γ_{hl}^k)]`;
    /// absent pairs multiply to zero.
    pub fn from_parts(
        shape: Option<(usize, usize)>,
        char: u64,
        basis: Vec<Label>,
        idempotents: Vec<usize>,
        table: BTreeMap<(usize, usize), Vec<(usize, i64)>>,
    ) -> Result<Self> {
        check_char(char)?;
        let dim = basis.len();
        let mut index = HashMap::with_capacity(dim);
        for (k, l) in basis.iter().enumerate() {
            if index.insert(l.clone(), k).is_some() {
                return Err(Error::invalid(format!("duplicate basis label {l}")));
            }
        }
        if idempotents.iter().any(|&e| e >= dim) {
            return Err(Error::invalid("idempotent index out of range"));
        }
        let distinct: BTreeSet<_> = idempotents.iter().collect();
        if distinct.len() != idempotents.len() {
            return Err(Error::invalid("repeated idempotent"));
        }
        let mut clean = BTreeMap::new();
        for ((h, l), terms) in table {
            if h >= dim || l >= dim || terms.iter().any(|&(k, _)| k >= dim) {
                return Err(Error::invalid(format!("table entry ({h},{l}) out of range")));
            }
            let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
            for (k, c) in terms {
                *merged.entry(k).or_insert(0) += c;
            }
            let v: Vec<(usize, i64)> = merged.into_iter().filter(|&(_, c)| c != 0).collect();
            if !v.is_empty() {
                clean.insert((h, l), v);
            }
        }
        let mut alg = StructureAlgebra {
            shape,
            char,
            basis,
            index,
            idempotents,
            table: clean,
            left_idem: Vec::new(),
            right_idem: Vec::new(),
        };
        alg.compute_idempotent_sides();
        Ok(alg)
    }

    fn compute_idempotent_sides(&mut self) {
        let dim = self.dim();
        let mut left = vec![None; dim];
        let mut right = vec![None; dim];
        for b in 0..dim {
            let unit = LinearCombo::basis(b);
            for (pos, &e) in self.idempotents.iter().enumerate() {
                if self.product(e, b) == unit {
                    left[b] = Some(pos);
                }
                if self.product(b, e) == unit {
                    right[b] = Some(pos);
                }
            }
        }
        self.left_idem = left;
        self.right_idem = right;
    }

    pub fn shape(&self) -> Option<(usize, usize)> {
        self.shape
    }

    pub fn characteristic(&self) -> u64 {
        self.char
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Label] {
        &self.basis
    }

    pub fn label(&self, k: usize) -> &Label {
        &self.basis[k]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn index_of_orbit(&self, o: &PairOrbit) -> Option<usize> {
        self.index_of(&Label::Xi(o.clone()))
    }

    /// Basis indices of the idempotents, in their listed order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, k: usize) -> bool {
        self.idempotents.contains(&k)
    }

    /// Position (in [`Self::idempotents`]) of the idempotent `e` with `e·b = b`.
    pub fn left_idempotent(&self, b: usize) -> Option<usize> {
        self.left_idem[b]
    }

    /// Position of the idempotent `f` with `b·f = b`.
    pub fn right_idempotent(&self, b: usize) -> Option<usize> {
        self.right_idem[b]
    }

    /// The weight of the `pos`-th idempotent when it is a `ξ_λ`.
    pub fn idempotent_weight(&self, pos: usize) -> Option<Composition> {
        self.basis[self.idempotents[pos]].as_orbit().map(|o| o.left_weight())
    }

    /// Raw integer structure constants.
    pub fn table(&self) -> &BTreeMap<(usize, usize), Vec<(usize, i64)>> {
        &self.table
    }

    pub fn raw_product(&self, h: usize, l: usize) -> &[(usize, i64)] {
        self.table.get(&(h, l)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// `b_h · b_l`, reduced modulo the characteristic.
    pub fn product(&self, h: usize, l: usize) -> LinearCombo {
        LinearCombo::from_terms(self.raw_product(h, l).iter().copied(), self.char)
    }

    pub fn multiply(&self, x: &LinearCombo, y: &LinearCombo) -> LinearCombo {
        let mut out = LinearCombo::zero();
        for (h, a) in x.terms() {
            for (l, b) in y.terms() {
                for &(k, c) in self.raw_product(h, l) {
                    let coef = if self.char == 0 {
                        a.checked_mul(b).and_then(|t| t.checked_mul(c)).expect("coefficient overflow")
                    } else {
                        let p = self.char as i128;
                        ((a as i128 * b as i128 % p) * (c as i128).rem_euclid(p) % p) as i64
                    };
                    out.add_term(k, coef, self.char);
                }
            }
        }
        out
    }

    /// The same constants read in another characteristic.
    pub fn with_characteristic(&self, p: u64) -> Result<StructureAlgebra> {
        check_char(p)?;
        let mut a = self.clone();
        a.char = p;
        a.compute_idempotent_sides();
        Ok(a)
    }

    /// Replaces the table, keeping basis and idempotents.
    pub fn with_table(&self, table: BTreeMap<(usize, usize), Vec<(usize, i64)>>) -> Result<StructureAlgebra> {
        StructureAlgebra::from_parts(self.shape, self.char, self.basis.clone(), self.idempotents.clone(), table)
    }

    /// Pairs `(c, ...)` that can multiply nontrivially after `b`: when both
    /// sides have known idempotents only matching ones are tried.
    fn right_partners(&self, b: usize) -> Vec<usize> {
        match self.right_idem[b] {
            Some(f) if self.left_idem.iter().all(|x| x.is_some()) => {
                (0..self.dim()).filter(|&c| self.left_idem[c] == Some(f)).collect()
            }
            _ => (0..self.dim()).collect(),
        }
    }

    /// Exhaustive `(ab)c = a(bc)` over basis triples. Returns the number of
    /// triples compared.
    pub fn check_associativity(&self) -> Result<usize> {
        let mut checked = 0;
        let partners: Vec<Vec<usize>> = (0..self.dim()).map(|b| self.right_partners(b)).collect();
        for a in 0..self.dim() {
            for &b in &partners[a] {
                let ab = self.product(a, b);
                for &c in &partners[b] {
                    let left = self.multiply(&ab, &LinearCombo::basis(c));
                    let bc = self.product(b, c);
                    let right = self.multiply(&LinearCombo::basis(a), &bc);
                    checked += 1;
                    if left != right {
                        return Err(Error::check(format!(
                            "associativity fails at ({}, {}, {}): {} vs {}",
                            self.basis[a],
                            self.basis[b],
                            self.basis[c],
                            left.render(&self.basis),
                            right.render(&self.basis)
                        )));
                    }
                }
            }
        }
        Ok(checked)
    }

    /// Orthogonality of the listed idempotents and `Σ e` acting as identity.
    pub fn check_idempotents(&self) -> Result<()> {
        for &e in &self.idempotents {
            for &f in &self.idempotents {
                let want = if e == f { LinearCombo::basis(e) } else { LinearCombo::zero() };
                if self.product(e, f) != want {
                    return Err(Error::check(format!(
                        "{} · {} should be {}",
                        self.basis[e],
                        self.basis[f],
                        want.render(&self.basis)
                    )));
                }
            }
        }
        let one = LinearCombo::from_terms(self.idempotents.iter().map(|&e| (e, 1)), self.char);
        for b in 0..self.dim() {
            let unit = LinearCombo::basis(b);
            if self.multiply(&one, &unit) != unit || self.multiply(&unit, &one) != unit {
                return Err(Error::check(format!("sum of idempotents does not act as identity on {}", self.basis[b])));
            }
        }
        Ok(())
    }

    /// `eAe` for `e` the sum of the given idempotents (basis indices).
    pub fn truncate(&self, keep: &[usize]) -> Result<StructureAlgebra> {
        if keep.is_empty() {
            return Err(Error::invalid("truncation needs at least one idempotent"));
        }
        for k in keep {
            if !self.is_idempotent(*k) {
                return Err(Error::invalid(format!("{} is not a listed idempotent", self.basis[*k])));
            }
        }
        let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
        let mut kept = Vec::new();
        for b in 0..self.dim() {
            let unit = LinearCombo::basis(b);
            let inside = keep_set.iter().any(|&e| {
                let eb = self.product(e, b);
                !eb.is_zero() && keep_set.iter().any(|&f| self.multiply(&eb, &LinearCombo::basis(f)) == unit)
            });
            if inside {
                kept.push(b);
            }
        }
        let new_index: HashMap<usize, usize> = kept.iter().enumerate().map(|(n, &b)| (b, n)).collect();
        let mut table = BTreeMap::new();
        for (na, &a) in kept.iter().enumerate() {
            for (nb, &b) in kept.iter().enumerate() {
                let terms = self.raw_product(a, b);
                if terms.is_empty() {
                    continue;
                }
                let mut out = Vec::with_capacity(terms.len());
                for &(k, c) in terms {
                    match new_index.get(&k) {
                        Some(&nk) => out.push((nk, c)),
                        None if reduce_coef(c, self.char) == 0 => {}
                        None => {
                            return Err(Error::check(format!(
                                "{} · {} leaves the truncation",
                                self.basis[a], self.basis[b]
                            )))
                        }
                    }
                }
                table.insert((na, nb), out);
            }
        }
        let idem: Vec<usize> = self.idempotents.iter().filter(|e| keep_set.contains(e)).map(|e| new_index[e]).collect();
        let basis = kept.iter().map(|&b| self.basis[b].clone()).collect();
        StructureAlgebra::from_parts(self.shape, self.char, basis, idem, table)
    }

    /// Truncation by idempotents named by weight.
    pub fn truncate_by_weights(&self, weights: &[Composition]) -> Result<StructureAlgebra> {
        let keep = weights
            .iter()
            .map(|w| {
                self.index_of_orbit(&PairOrbit::diagonal(w))
                    .filter(|k| self.is_idempotent(*k))
                    .ok_or_else(|| Error::invalid(format!("no idempotent ξ_{w}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.truncate(&keep)
    }

    /// Renders a product for display.
    pub fn render(&self, x: &LinearCombo) -> String {
        x.render(&self.basis)
    }

    pub fn to_json(&self) -> String {
        json::to_json(self)
    }

    pub fn from_json(s: &str) -> Result<StructureAlgebra> {
        json::from_json(s)
    }
}
