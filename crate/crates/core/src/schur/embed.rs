use super::{build_algebra, BasisKind, Label, LinearCombo, ScaleCap, StructureAlgebra};
use crate::error::{Error, Result};
use crate::symcomb::{Composition, PairOrbit};
use std::collections::{BTreeMap, BTreeSet};

/// A checked algebra map `source → e·target·e` given on basis elements.
#[derive(Debug, Clone)]
pub struct EmbeddingCertificate {
    pub source: (usize, usize),
    pub target: (usize, usize),
    pub char: u64,
    /// `map[k]` is the target basis index of the image of source basis `k`.
    pub map: Vec<usize>,
    /// Target basis indices of the idempotents summing to `e`.
    pub idempotent: Vec<usize>,
    /// Number of basis pairs whose products were compared.
    pub pairs_checked: usize,
}

fn image(map: &[usize], x: &LinearCombo, p: u64) -> LinearCombo {
    LinearCombo::from_terms(x.terms().map(|(k, c)| (map[k], c)), p)
}

/// Compares `φ(ab)` with `φ(a)φ(b)` on all basis pairs and checks that the
/// image is spanned by the basis of `e·target·e` and `φ(1) = e`.
fn certify(
    source: &StructureAlgebra,
    target: &StructureAlgebra,
    map: Vec<usize>,
    e: Vec<usize>,
) -> Result<EmbeddingCertificate> {
    let p = source.characteristic();
    let img: BTreeSet<usize> = map.iter().copied().collect();
    if img.len() != map.len() {
        return Err(Error::check("label map is not injective"));
    }
    let corner = target.truncate(&e)?;
    let corner_set: BTreeSet<usize> =
        corner.basis().iter().map(|l| target.index_of(l).expect("corner basis from target")).collect();
    if corner_set != img {
        return Err(Error::check(format!("image has {} elements but e·S·e has {}", img.len(), corner_set.len())));
    }
    let unit_src: BTreeSet<usize> = source.idempotents().iter().map(|&k| map[k]).collect();
    let unit_tgt: BTreeSet<usize> = e.iter().copied().collect();
    if unit_src != unit_tgt {
        return Err(Error::check("φ(1) differs from e"));
    }
    let mut pairs = 0;
    for a in 0..source.dim() {
        for b in 0..source.dim() {
            let lhs = image(&map, &source.product(a, b), p);
            let rhs = target.product(map[a], map[b]);
            pairs += 1;
            if lhs != rhs {
                return Err(Error::check(format!(
                    "φ({} · {}) = {} but φ({})·φ({}) = {}",
                    source.label(a),
                    source.label(b),
                    target.render(&lhs),
                    source.label(a),
                    source.label(b),
                    target.render(&rhs)
                )));
            }
        }
    }
    Ok(EmbeddingCertificate {
        source: source.shape().expect("schur shape"),
        target: target.shape().expect("schur shape"),
        char: p,
        map,
        idempotent: e,
        pairs_checked: pairs,
    })
}

fn idempotents_where(alg: &StructureAlgebra, pred: impl Fn(&Composition) -> bool) -> Vec<usize> {
    (0..alg.idempotents().len())
        .filter(|&pos| pred(&alg.idempotent_weight(pos).expect("ξ idempotent")))
        .map(|pos| alg.idempotents()[pos])
        .collect()
}

/// `S⁺(n,s) → S⁺(n,s+1)`, `ξ_{i,j} ↦ ξ_{(1,i),(1,j)}`, onto `e S⁺(n,s+1) e`
/// with `e = Σ_{λ_1 ≥ 1} ξ_λ`.
pub fn embed_degree(n: usize, s: usize, p: u64, cap: &ScaleCap) -> Result<EmbeddingCertificate> {
    let source = build_algebra(n, s, p, BasisKind::Borel, cap)?;
    let target = build_algebra(n, s + 1, p, BasisKind::Borel, cap)?;
    embed_degree_between(&source, &target)
}

pub(crate) fn embed_degree_between(
    source: &StructureAlgebra,
    target: &StructureAlgebra,
) -> Result<EmbeddingCertificate> {
    let map = source
        .basis()
        .iter()
        .map(|l| {
            let o = l.as_orbit().expect("ξ basis");
            let lifted = PairOrbit::canonical(&o.i().prepend(1), &o.j().prepend(1))?;
            target.index_of_orbit(&lifted).ok_or_else(|| Error::check(format!("{lifted} missing from target")))
        })
        .collect::<Result<Vec<_>>>()?;
    let e = idempotents_where(target, |w| w.parts()[0] >= 1);
    certify(source, target, map, e)
}

/// `S⁺(m,r) ≅ e S⁺(n,r) e` with `e = Σ ξ_λ` over `λ` vanishing after
/// position `m`.
pub fn truncate_columns(n: usize, m: usize, r: usize, p: u64, cap: &ScaleCap) -> Result<EmbeddingCertificate> {
    if m == 0 || m > n {
        return Err(Error::invalid(format!("need 1 ≤ m ≤ n, got m = {m}, n = {n}")));
    }
    let source = build_algebra(m, r, p, BasisKind::Borel, cap)?;
    let target = build_algebra(n, r, p, BasisKind::Borel, cap)?;
    truncate_columns_between(&source, &target)
}

pub(crate) fn truncate_columns_between(
    source: &StructureAlgebra,
    target: &StructureAlgebra,
) -> Result<EmbeddingCertificate> {
    let (m, _) = source.shape().expect("schur shape");
    let (n, _) = target.shape().expect("schur shape");
    let map = source
        .basis()
        .iter()
        .map(|l| {
            let o = l.as_orbit().expect("ξ basis");
            let wide = PairOrbit::canonical(&o.i().widen(n), &o.j().widen(n))?;
            target.index_of_orbit(&wide).ok_or_else(|| Error::check(format!("{wide} missing from target")))
        })
        .collect::<Result<Vec<_>>>()?;
    let e = idempotents_where(target, |w| w.parts()[m..].iter().all(|&x| x == 0));
    certify(source, target, map, e)
}

/// `S⁺(2,r)` split at `e = ξ_{(0,r)}`.
#[derive(Debug, Clone)]
pub struct OnePointDecomposition {
    pub r: usize,
    pub char: u64,
    /// `ē S ē`.
    pub algebra: StructureAlgebra,
    /// Certificate that `S⁺(2,r-1)` maps isomorphically onto `ē S ē`.
    pub isomorphism: EmbeddingCertificate,
    /// Basis of `M = ē S e`.
    pub module_basis: Vec<Label>,
    /// Left action of `ē S ē` on `M`: `(a, m) -> a·m` in module coordinates.
    pub action: BTreeMap<(usize, usize), Vec<(usize, i64)>>,
    /// Number of products `e·b·f` (with `f ≠ e`) checked to vanish.
    pub vanishing_checked: usize,
}

pub fn one_point_decompose(r: usize, p: u64, cap: &ScaleCap) -> Result<OnePointDecomposition> {
    if r == 0 {
        return Err(Error::invalid("one-point decomposition needs r ≥ 1"));
    }
    let s = build_algebra(2, r, p, BasisKind::Borel, cap)?;
    let smaller = build_algebra(2, r - 1, p, BasisKind::Borel, cap)?;
    let vertex = Composition::new(vec![0, r]).expect("two parts");
    let e = s.index_of_orbit(&PairOrbit::diagonal(&vertex)).expect("ξ_(0,r) is a basis element");
    let rest: Vec<usize> = s.idempotents().iter().copied().filter(|&f| f != e).collect();

    let mut checked = 0;
    for b in 0..s.dim() {
        let eb = s.product(e, b);
        for &f in &rest {
            checked += 1;
            let ebf = s.multiply(&eb, &LinearCombo::basis(f));
            if !ebf.is_zero() {
                return Err(Error::check(format!("e·{}·{} ≠ 0", s.label(b), s.label(f))));
            }
        }
    }

    let algebra = s.truncate(&rest)?;
    let iso = embed_degree_between(&smaller, &s)?;
    let iso_image: BTreeSet<&Label> = iso.map.iter().map(|&k| s.label(k)).collect();
    let corner: BTreeSet<&Label> = algebra.basis().iter().collect();
    if iso_image != corner || smaller.dim() != algebra.dim() {
        return Err(Error::check("ē S ē is not the image of S⁺(2,r-1)"));
    }

    let module: Vec<usize> =
        (0..s.dim()).filter(|&b| s.right_idempotent(b).map(|pos| s.idempotents()[pos]) == Some(e) && b != e).collect();
    let mod_pos: BTreeMap<usize, usize> = module.iter().enumerate().map(|(n, &b)| (b, n)).collect();
    let mut action = BTreeMap::new();
    for (na, label) in algebra.basis().iter().enumerate() {
        let a = s.index_of(label).expect("corner label");
        for (nm, &m) in module.iter().enumerate() {
            let prod = s.product(a, m);
            if prod.is_zero() {
                continue;
            }
            let terms = prod
                .terms()
                .map(|(k, c)| {
                    mod_pos
                        .get(&k)
                        .map(|&nk| (nk, c))
                        .ok_or_else(|| Error::check(format!("{} · {} leaves M", s.label(a), s.label(m))))
                })
                .collect::<Result<Vec<_>>>()?;
            action.insert((na, nm), terms);
        }
    }
    Ok(OnePointDecomposition {
        r,
        char: p,
        algebra,
        isomorphism: iso,
        module_basis: module.iter().map(|&b| s.label(b).clone()).collect(),
        action,
        vanishing_checked: checked,
    })
}
