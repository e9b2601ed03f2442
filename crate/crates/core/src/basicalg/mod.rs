//! Radical filtrations, Ext-quivers and relations of basic algebras whose
//! basis is adapted to the radical: the non-idempotent basis elements span
//! the radical and each lies in a single corner `f·A·e`.

mod biserial;
mod degenerate;

pub use biserial::{is_special_biserial, BiserialReport, BiserialWitness};
pub use degenerate::{degenerate, Degeneration, GradingFunction};

use crate::error::{Error, Result};
use crate::linalg::{integer_vector, kernel, Field, Subspace};
use crate::quiverkit::{arrow_type_name, Path, Quiver, QuiverWithRelations, Relation};
use crate::schur::{Label, StructureAlgebra};
use crate::with_field;
use std::collections::BTreeMap;

/// `x · y` for coordinate vectors.
fn mul_vec<F: Field>(f: &F, a: &StructureAlgebra, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); a.dim()];
    for (h, xh) in x.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
        for (l, yl) in y.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            let xy = f.mul(xh, yl);
            for &(k, c) in a.raw_product(h, l) {
                out[k] = f.add(&out[k], &f.mul(&xy, &f.of_int(c)));
            }
        }
    }
    out
}

fn unit<F: Field>(f: &F, dim: usize, k: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); dim];
    v[k] = f.one();
    v
}

fn to_ints<F: Field>(f: &F, v: &[F::Elem]) -> Vec<i64> {
    integer_vector(&v.iter().map(|x| f.to_scalar(x)).collect::<Vec<_>>())
}

/// Non-idempotent basis elements, after checking that the basis is adapted.
fn radical_basis(a: &StructureAlgebra) -> Result<Vec<usize>> {
    let p = a.characteristic();
    for b in 0..a.dim() {
        if a.left_idempotent(b).is_none() || a.right_idempotent(b).is_none() {
            return Err(Error::NotAdapted(format!("{} lies in no single corner", a.label(b))));
        }
    }
    for (&(h, l), terms) in a.table() {
        if a.is_idempotent(h) && a.is_idempotent(l) {
            continue;
        }
        for &(k, c) in terms {
            if a.is_idempotent(k) && crate::schur::reduce_coef(c, p) != 0 {
                return Err(Error::NotAdapted(format!(
                    "{} · {} has a component on {}",
                    a.label(h),
                    a.label(l),
                    a.label(k)
                )));
            }
        }
    }
    Ok((0..a.dim()).filter(|&b| !a.is_idempotent(b)).collect())
}

fn layers_in<F: Field>(f: &F, a: &StructureAlgebra) -> Result<Vec<Subspace<F>>> {
    let rad = radical_basis(a)?;
    let dim = a.dim();
    let mut layers = vec![Subspace::spanned_by(f.clone(), dim, rad.iter().map(|&b| unit(f, dim, b)))];
    while layers.last().expect("nonempty").rank() > 0 {
        if layers.len() > dim + 1 {
            return Err(Error::NotAdapted("radical is not nilpotent".into()));
        }
        let prev = layers.last().expect("nonempty");
        let mut next = Subspace::new(f.clone(), dim);
        for row in prev.rows() {
            for &b in &rad {
                let v = mul_vec(f, a, row, &unit(f, dim, b));
                next.insert(v);
            }
        }
        if next.rank() >= prev.rank() {
            return Err(Error::NotAdapted("radical is not nilpotent".into()));
        }
        layers.push(next);
    }
    Ok(layers)
}

/// One power `rad^k`: an integer echelon basis and, when it is spanned by
/// basis elements, their indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalLayer {
    pub rows: Vec<Vec<i64>>,
    pub support: Option<Vec<usize>>,
}

impl RadicalLayer {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `rad^1 ⊇ rad^2 ⊇ … ⊇ 0`; `layers[k]` is `rad^{k+1}`, ending with zero.
#[derive(Debug, Clone)]
pub struct RadicalFiltration {
    pub layers: Vec<RadicalLayer>,
    basis: Vec<Label>,
}

impl RadicalFiltration {
    /// Basis labels of `rad^k` (`k ≥ 1`) when it is spanned by basis elements.
    pub fn labels(&self, k: usize) -> Option<Vec<Label>> {
        let layer = self.layers.get(k.checked_sub(1)?)?;
        layer.support.as_ref().map(|s| s.iter().map(|&b| self.basis[b].clone()).collect())
    }

    /// Smallest `k` with `rad^k = 0`.
    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }
}

pub fn radical_layers(a: &StructureAlgebra) -> Result<RadicalFiltration> {
    with_field!(a.characteristic(), f => {
        let layers = layers_in(&f, a)?;
        Ok(RadicalFiltration {
            layers: layers
                .iter()
                .map(|s| RadicalLayer {
                    rows: s.rows().iter().map(|r| to_ints(&f, r)).collect(),
                    support: s.coordinate_support(),
                })
                .collect(),
            basis: a.basis().to_vec(),
        })
    })
}

/// The quiver of a basic algebra with a chosen basis element for every
/// vertex and arrow.
#[derive(Debug, Clone)]
pub struct ExtQuiver {
    pub quiver: Quiver,
    /// Basis index of the idempotent at each vertex.
    pub vertex_idempotent: Vec<usize>,
    /// Basis index of the element chosen for each arrow.
    pub arrow_element: Vec<usize>,
}

fn vertex_label(a: &StructureAlgebra, pos: usize) -> String {
    match (a.shape(), a.idempotent_weight(pos)) {
        (Some((2, _)), Some(w)) => w.parts()[1].to_string(),
        (_, Some(w)) => w.to_string(),
        _ => a.label(a.idempotents()[pos]).to_string(),
    }
}

/// Type tag of a `ξ` arrow from weight `λ` to `μ = λ + q·γ_s`.
fn arrow_kind(a: &StructureAlgebra, b: usize) -> String {
    let Some(o) = a.label(b).as_orbit() else {
        return String::new();
    };
    let Some((s, q)) = o.right_weight().gamma_step_to(&o.left_weight()) else {
        return "ξ".into();
    };
    let p = a.characteristic();
    if o.n() == 2 {
        if p == 0 && q == 1 {
            return arrow_type_name(0);
        }
        if p > 0 {
            let mut pd = 1usize;
            let mut d = 0;
            while pd < q {
                pd = pd.saturating_mul(p as usize);
                d += 1;
            }
            if pd == q {
                return arrow_type_name(d);
            }
        }
    }
    format!("γ_{s}^({q})")
}

fn ext_quiver_in<F: Field>(f: &F, a: &StructureAlgebra, rad2: &Subspace<F>) -> Result<ExtQuiver> {
    let dim = a.dim();
    let labels: Vec<String> = (0..a.idempotents().len()).map(|pos| vertex_label(a, pos)).collect();
    let mut q = Quiver::new(labels.clone())?;
    let mut rad: Vec<usize> = radical_basis(a)?;
    // prefer ξ with a standard second index, then the smaller label
    rad.sort_by_key(|&b| (!a.label(b).as_orbit().is_some_and(|o| o.has_standard_right()), a.label(b).clone()));
    let mut span = rad2.clone();
    let mut chosen: Vec<usize> = Vec::new();
    for &b in &rad {
        if span.insert(unit(f, dim, b)) {
            chosen.push(b);
        }
    }
    chosen.sort_by_key(|&b| (a.right_idempotent(b), a.left_idempotent(b), a.label(b).clone()));
    let kinds: Vec<String> = chosen.iter().map(|&b| arrow_kind(a, b)).collect();
    let mut per_source: BTreeMap<(usize, &str), usize> = BTreeMap::new();
    for (&b, k) in chosen.iter().zip(&kinds) {
        *per_source.entry((a.right_idempotent(b).expect("adapted"), k.as_str())).or_insert(0) += 1;
    }
    for (&b, kind) in chosen.iter().zip(&kinds) {
        let src = a.right_idempotent(b).expect("adapted");
        let dst = a.left_idempotent(b).expect("adapted");
        let letter = a.shape().is_some_and(|s| s.0 == 2) && !kind.starts_with('γ') && kind != "ξ";
        let label = if letter && per_source[&(src, kind.as_str())] == 1 {
            format!("{kind}_{}", labels[src])
        } else {
            a.label(b).to_string()
        };
        q.add_arrow_by_index(src, dst, label, kind.clone())?;
    }
    Ok(ExtQuiver { quiver: q, vertex_idempotent: a.idempotents().to_vec(), arrow_element: chosen })
}

/// Vertices are the listed idempotents; arrows `e → f` are basis elements
/// of `f·A·e` that are independent modulo `rad²`.
pub fn ext_quiver(a: &StructureAlgebra) -> Result<ExtQuiver> {
    with_field!(a.characteristic(), f => {
        let layers = layers_in(&f, a)?;
        let rad2 = layers.get(1).cloned().unwrap_or_else(|| Subspace::new(f, a.dim()));
        ext_quiver_in(&f, a, &rad2)
    })
}

/// An Ext-quiver together with a minimal set of relations.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub ext: ExtQuiver,
    pub quiver: QuiverWithRelations,
    /// Number of paths whose images were computed.
    pub paths: usize,
}

impl Presentation {
    pub fn is_hereditary(&self) -> bool {
        self.quiver.relations.is_empty()
    }
}

fn path_image<F: Field>(f: &F, a: &StructureAlgebra, ext: &ExtQuiver, path: &[usize]) -> Vec<F::Elem> {
    let dim = a.dim();
    let mut v = unit(f, dim, ext.arrow_element[path[0]]);
    for &arr in &path[1..] {
        v = mul_vec(f, a, &unit(f, dim, ext.arrow_element[arr]), &v);
    }
    v
}

fn presentation_in<F: Field>(f: &F, a: &StructureAlgebra, path_cap: usize) -> Result<Presentation> {
    let layers = layers_in(f, a)?;
    let dim = a.dim();
    let rad1 = layers[0].clone();
    let rad2 = layers.get(1).cloned().unwrap_or_else(|| Subspace::new(f.clone(), dim));
    let ext = ext_quiver_in(f, a, &rad2)?;
    let q = &ext.quiver;
    let p = a.characteristic();
    let paths = q.all_paths(path_cap)?;
    let npaths = paths.values().map(Vec::len).sum();

    // arrows generate: path images span the radical
    let mut spanned = Subspace::new(f.clone(), dim);
    let mut images: BTreeMap<(usize, usize), Vec<Vec<F::Elem>>> = BTreeMap::new();
    for (&key, list) in &paths {
        let imgs: Vec<Vec<F::Elem>> = list.iter().map(|pa| path_image(f, a, &ext, pa)).collect();
        for v in &imgs {
            spanned.insert(v.clone());
        }
        images.insert(key, imgs);
    }
    if spanned.rank() != rad1.rank() {
        return Err(Error::check(format!("paths span {} of the {} radical dimensions", spanned.rank(), rad1.rank())));
    }

    let longest = |list: &[Path]| list.iter().map(Vec::len).max().unwrap_or(0);
    let mut keys: Vec<(usize, usize)> = paths.keys().copied().collect();
    keys.sort_by_key(|k| (longest(&paths[k]), *k));
    let mut found: Vec<Relation> = Vec::new();
    for key in keys {
        let mut cols: Vec<Path> = paths[&key].clone();
        cols.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| (q.path_word(x), x).cmp(&(q.path_word(y), y))));
        let col_of: BTreeMap<&Path, usize> = cols.iter().enumerate().map(|(c, pa)| (pa, c)).collect();
        let imgs: Vec<Vec<F::Elem>> = {
            let by_path: BTreeMap<&Path, &Vec<F::Elem>> = paths[&key].iter().zip(&images[&key]).collect();
            cols.iter().map(|pa| by_path[pa].clone()).collect()
        };
        let ker = kernel(f, &imgs, dim);
        if ker.is_empty() {
            continue;
        }
        // consequences of relations already found, as path combinations
        let mut consequences = Subspace::new(f.clone(), cols.len());
        for r in &found {
            let (rs, rt) = (r.source(q).expect("nonzero"), r.target(q).expect("nonzero"));
            let heads: Vec<Path> =
                if rt == key.1 { vec![Vec::new()] } else { paths.get(&(rt, key.1)).cloned().unwrap_or_default() };
            let tails: Vec<Path> =
                if rs == key.0 { vec![Vec::new()] } else { paths.get(&(key.0, rs)).cloned().unwrap_or_default() };
            for tail in &tails {
                for head in &heads {
                    if tail.is_empty() && head.is_empty() {
                        continue;
                    }
                    let mut v = vec![f.zero(); cols.len()];
                    for (c, pa) in r.terms() {
                        let full: Path = tail.iter().chain(pa).chain(head).copied().collect();
                        let col = col_of[&full];
                        v[col] = f.add(&v[col], &f.of_int(*c));
                    }
                    consequences.insert(v);
                }
            }
        }
        let mut minimal = Subspace::new(f.clone(), cols.len());
        for k in ker {
            minimal.insert(consequences.reduce(k));
        }
        for row in minimal.rows() {
            let ints = to_ints(f, row);
            let terms: Vec<(i64, Path)> =
                ints.into_iter().zip(&cols).filter(|(c, _)| *c != 0).map(|(c, pa)| (c, pa.clone())).collect();
            found.push(Relation::new(q, terms, p)?);
        }
    }
    Ok(Presentation {
        quiver: QuiverWithRelations { quiver: ext.quiver.clone(), relations: found, char: p },
        ext,
        paths: npaths,
    })
}

/// Ext-quiver and a minimal generating set of the relation ideal, read off
/// the kernel of the map from paths to the algebra.
pub fn presentation(a: &StructureAlgebra, path_cap: usize) -> Result<Presentation> {
    with_field!(a.characteristic(), f => presentation_in(&f, a, path_cap))
}


#[cfg(test)]
mod dataset_tests {
    use super::*;
    use crate::quiverkit::datasets;
    use crate::schur::{build_algebra, BasisKind, ScaleCap};
    use crate::symcomb::Composition;
    use std::collections::BTreeSet;

    fn arrows(e: &ExtQuiver) -> BTreeSet<(String, String, String)> {
        let q = &e.quiver;
        q.arrows().iter().map(|a| (a.label.clone(), q.vertices()[a.src].clone(), q.vertices()[a.dst].clone())).collect()
    }

    fn expected(v: Vec<(&str, &str, &str)>) -> BTreeSet<(String, String, String)> {
        v.into_iter().map(|(a, b, c)| (a.into(), b.into(), c.into())).collect()
    }

    #[test]
    fn s32_arrows_match() {
        for p in [0, 2, 3, 5] {
            let a = build_algebra(3, 2, p, BasisKind::Borel, &ScaleCap::default()).unwrap();
            let want = datasets::s32_arrows(if p == 2 { 2 } else { 3 });
            assert_eq!(arrows(&ext_quiver(&a).unwrap()), expected(want), "p = {p}");
        }
    }

    #[test]
    fn s33_truncation_arrows_match() {
        let w: Vec<Composition> = datasets::XSET_S33.iter().map(|s| Composition::parse(s).unwrap()).collect();
        for p in [2, 3, 5] {
            let a = build_algebra(3, 3, p, BasisKind::Borel, &ScaleCap::default()).unwrap();
            let t = a.truncate_by_weights(&w).unwrap();
            assert_eq!(arrows(&ext_quiver(&t).unwrap()), expected(datasets::s33_truncation_arrows(p)), "p = {p}");
        }
    }

    #[test]
    fn degenerate_s32_is_special_biserial() {
        for p in [0, 2, 3] {
            let a = build_algebra(3, 2, p, BasisKind::Borel, &ScaleCap::default()).unwrap();
            let b = degenerate(&a, &GradingFunction::preset_s32(&a).unwrap()).unwrap().algebra;
            let r2: BTreeSet<String> =
                radical_layers(&b).unwrap().labels(2).unwrap().iter().map(|l| l.to_string()).collect();
            let want: BTreeSet<String> = ["11,23", "12,23", "12,33", "13,33", "11,33", "11,13", "12,32"]
                .iter()
                .map(|s| format!("ξ_{{{s}}}"))
                .collect();
            assert_eq!(r2, want, "p = {p}");
            assert_eq!(arrows(&ext_quiver(&b).unwrap()), expected(datasets::s32_arrows(2)));
            let rep = is_special_biserial(&b).unwrap();
            assert!(rep.special_biserial, "{:?}", rep.witness);
            let orig = is_special_biserial(&a).unwrap();
            assert!(matches!(orig.witness, Some(BiserialWitness::Predecessors { .. })));
        }
    }
}
