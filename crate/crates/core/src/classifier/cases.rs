//! Checks for each base case of the classification.

use super::Check;
use crate::basicalg::{
    degenerate, ext_quiver, is_special_biserial, presentation, radical_layers, ExtQuiver, GradingFunction,
};
use crate::error::{Error, Result};
use crate::posetrep::{gamma_m, nazarova_wild, width};
use crate::quiverkit::{
    borel2_presentation, classify_ade, datasets, find_isomorphism, hereditary_type, is_convex, lift_relations,
    quotient_by_group, restrict_relations, separated, stabilizer_of_subquiver, AdeType, Multigraph, Quiver, Relation,
    Subquiver,
};
use crate::reptype::RepType;
use crate::schur::{build_algebra, one_point_decompose, BasisKind, ScaleCap, StructureAlgebra};
use crate::symcomb::{Composition, PairOrbit};
use serde_json::json;
use std::collections::BTreeSet;

const PATH_CAP: usize = 100_000;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::check(what()))
    }
}

fn orbit_index(a: &StructureAlgebra, i: &str, j: &str) -> Result<usize> {
    let n = a.shape().map_or(0, |s| s.0);
    let o = PairOrbit::parse(n, i, j)?;
    a.index_of_orbit(&o).ok_or_else(|| Error::invalid(format!("{o} is not a basis element")))
}

fn weights(list: &[&str]) -> Result<Vec<Composition>> {
    list.iter().map(|s| Composition::parse(s)).collect()
}

fn arrow_triples(e: &ExtQuiver) -> BTreeSet<(String, String, String)> {
    let q = &e.quiver;
    q.arrows().iter().map(|a| (a.label.clone(), q.vertices()[a.src].clone(), q.vertices()[a.dst].clone())).collect()
}

fn expected_triples(v: &[(&str, &str, &str)]) -> BTreeSet<(String, String, String)> {
    v.iter().map(|&(a, b, c)| (a.into(), b.into(), c.into())).collect()
}

pub(super) fn run(n: usize, r: usize, p: u64, cap: &ScaleCap) -> Result<Vec<Check>> {
    match (n, r) {
        (3, 3) => s33(p, cap),
        (4, 2) => s42(p, cap),
        (3, 2) => s32(p, cap),
        (2, 4) if p == 2 => s24_char2(cap),
        (2, 5) if p == 3 => s25_char3(cap),
        (2, 6) if p == 3 || p == 5 => s26_covering(p, cap),
        (2, r) if p >= 7 && r as u64 == p + 1 => s2_p_plus_1(p, cap),
        _ => Err(Error::invalid(format!("no base-case checks for S⁺({n},{r}) at p = {p}"))),
    }
}

fn s33(p: u64, cap: &ScaleCap) -> Result<Vec<Check>> {
    const BASIS: &str = "wild truncation of S⁺(3,3)";
    let a = build_algebra(3, 3, p, BasisKind::Borel, cap)?;
    let mut out = Vec::new();

    let whole = ext_quiver(&a)?;
    let xs: Vec<usize> = datasets::XSET_S33.iter().map(|w| whole.quiver.vertex(w)).collect::<Result<_>>()?;
    let sub = Subquiver::full_on(&whole.quiver, xs);
    ensure(is_convex(&sub, &whole.quiver), || "the X-set subquiver is not convex".into())?;
    out.push(Check::pass("x_set_convex", BASIS, json!({ "vertices": datasets::XSET_S33 })));

    let t = a.truncate_by_weights(&weights(&datasets::XSET_S33)?)?;
    let pres = presentation(&t, PATH_CAP)?;
    let got = arrow_triples(&pres.ext);
    let want = expected_triples(&datasets::s33_truncation_arrows(p));
    ensure(got == want, || format!("truncated quiver has arrows {got:?}"))?;
    out.push(Check::pass("truncated_quiver", BASIS, json!({ "arrows": got.len() })));

    let prod = |h: (&str, &str), l: (&str, &str)| -> Result<_> {
        Ok(a.product(orbit_index(&a, h.0, h.1)?, orbit_index(&a, l.0, l.1)?))
    };
    let left = prod(("122", "123"), ("123", "223"))?;
    let right = prod(("122", "222"), ("222", "223"))?;
    ensure(left != right, || "the two products through 120 agree".into())?;
    out.push(Check::pass(
        "square_does_not_commute",
        BASIS,
        json!({ "ξ122,123·ξ123,223": a.render(&left), "ξ122,222·ξ222,223": a.render(&right) }),
    ));

    let q = &pres.quiver.quiver;
    let hereditary_part = if p == 2 {
        let zero = prod(("113", "123"), ("123", "223"))?;
        ensure(zero.is_zero(), || format!("ξ113,123·ξ123,223 = {}", a.render(&zero)))?;
        out.push(Check::pass("zero_product", BASIS, json!({ "ξ113,123·ξ123,223": "0" })));
        let rels = pres.quiver.rendered_relations();
        let drop = q.arrow_index("ξ_{113,123}").ok_or_else(|| Error::check("arrow ξ_{113,123} missing"))?;
        ensure(pres.quiver.relations.len() == 1 && pres.quiver.relations[0].terms().len() == 1, || {
            format!("expected one monomial relation, got {rels:?}")
        })?;
        out.push(Check::pass("single_zero_relation", BASIS, json!({ "relations": rels })));
        q.without_arrow(drop)
    } else {
        ensure(pres.is_hereditary(), || format!("unexpected relations {:?}", pres.quiver.rendered_relations()))?;
        out.push(Check::pass("hereditary", BASIS, json!({ "relations": 0 })));
        q.clone()
    };
    let ty = hereditary_type(&hereditary_part)?;
    ensure(ty == RepType::Wild, || format!("hereditary part is {ty}"))?;
    let ade = classify_ade(&Multigraph::underlying(
        &hereditary_part,
        &(0..hereditary_part.num_vertices()).collect::<Vec<_>>(),
    ));
    out.push(Check::pass(
        "hereditary_type",
        BASIS,
        json!({ "arrows": hereditary_part.num_arrows(), "ade": ade.to_string(), "type": ty }),
    ));
    Ok(out)
}

fn s42(p: u64, cap: &ScaleCap) -> Result<Vec<Check>> {
    const BASIS: &str = "three-vertex truncation of S⁺(4,2)";
    let a = build_algebra(4, 2, p, BasisKind::Borel, cap)?;
    let t = a.truncate_by_weights(&weights(&datasets::S42_TRUNCATION)?)?;
    let layers = radical_layers(&t)?;
    let names = |k| -> Vec<String> {
        let mut v: Vec<String> = layers.labels(k).unwrap_or_default().iter().map(|l| l.to_string()).collect();
        v.sort();
        v
    };
    let rad = names(1);
    let rad2 = names(2);
    ensure(rad.len() == 5 && rad2 == ["ξ_{12,24}", "ξ_{12,42}"], || format!("rad = {rad:?}, rad² = {rad2:?}"))?;
    let mut out = vec![Check::pass("radical_layers", BASIS, json!({ "rad": rad, "rad2": rad2, "rad3": names(3) }))];
    let pres = presentation(&t, PATH_CAP)?;
    let got = arrow_triples(&pres.ext);
    ensure(got == expected_triples(&datasets::S42_TRUNCATION_ARROWS), || format!("quiver arrows {got:?}"))?;
    ensure(pres.is_hereditary(), || "truncation has relations".into())?;
    out.push(Check::pass("relation_free_quiver", BASIS, json!({ "arrows": got.len() })));
    let ty = hereditary_type(&pres.quiver.quiver)?;
    ensure(ty == RepType::Wild, || format!("hereditary type {ty}"))?;
    out.push(Check::pass("hereditary_type", BASIS, json!({ "type": ty })));
    Ok(out)
}

fn s32(p: u64, cap: &ScaleCap) -> Result<Vec<Check>> {
    const BASIS: &str = "degeneration of S⁺(3,2) to a special biserial algebra";
    let a = build_algebra(3, 2, p, BasisKind::Borel, cap)?;
    let phi = GradingFunction::preset_s32(&a)?;
    phi.check_admissible(&a)?;
    let d = degenerate(&a, &phi)?;
    let b = &d.algebra;
    let mut out = vec![
        Check::pass("grading_admissible", BASIS, json!({ "nonzero_degrees": 10 })),
        Check::pass("associative", BASIS, json!({ "triples": d.triples_checked })),
    ];
    let idx = |i, j| orbit_index(b, i, j);
    let vanishing = [
        (("22", "23"), ("23", "33")),
        (("12", "22"), ("22", "33")),
        (("11", "22"), ("22", "23")),
        (("11", "12"), ("12", "22")),
    ];
    for (h, l) in vanishing {
        let v = b.product(idx(h.0, h.1)?, idx(l.0, l.1)?);
        ensure(v.is_zero(), || format!("ξ{},{}·ξ{},{} = {} after degenerating", h.0, h.1, l.0, l.1, b.render(&v)))?;
    }
    out.push(Check::pass("vanishing_products", BASIS, json!({ "count": vanishing.len() })));
    let long = b.product(idx("12", "22")?, idx("22", "23")?);
    ensure(long == crate::schur::LinearCombo::basis(idx("12", "32")?), || {
        format!("ξ12,22·ξ22,23 degenerates to {}", b.render(&long))
    })?;
    out.push(Check::pass("long_product", BASIS, json!({ "ξ12,22·ξ22,23": b.render(&long) })));
    let sb = is_special_biserial(b)?;
    ensure(sb.special_biserial, || format!("not special biserial: {:?}", sb.witness))?;
    out.push(Check::pass("special_biserial", BASIS, json!({ "arrows": ext_quiver(b)?.quiver.num_arrows() })));
    out.push(Check::external(
        "special_biserial_not_wild",
        "special biserial algebras are tame or of finite type (Wald-Waschbüsch)",
    ));
    out.push(Check::external(
        "degeneration_transfers_tameness",
        "an algebra degenerating to a tame algebra is not wild (Geiss)",
    ));
    out.push(Check::external("infinite_type", "S⁺(3,2) has infinite type by the finite-type classification"));
    Ok(out)
}

fn s24_char2(cap: &ScaleCap) -> Result<Vec<Check>> {
    const BASIS: &str = "separated quiver of S⁺(2,4) in characteristic 2";
    let a = build_algebra(2, 4, 2, BasisKind::Borel, cap)?;
    let q = ext_quiver(&a)?.quiver;
    let sep = separated(&q);
    let comps: Vec<(Vec<String>, AdeType)> = sep
        .components()
        .into_iter()
        .map(|c| {
            let t = classify_ade(&Multigraph::underlying(&sep, &c));
            (c.iter().map(|&v| sep.vertices()[v].clone()).collect(), t)
        })
        .collect();
    let bad = comps.iter().find(|c| c.1 == AdeType::Neither);
    ensure(bad.is_some(), || "every separated component is Dynkin or extended Dynkin".into())?;
    let payload: Vec<_> = comps.iter().map(|(vs, t)| json!({ "vertices": vs, "type": t.to_string() })).collect();
    Ok(vec![
        Check::pass("separated_components", BASIS, json!(payload)),
        Check::external(
            "separated_quiver_criterion",
            "a tame quiver with relations has a separated quiver of Dynkin and extended Dynkin components (Gabriel)",
        ),
    ])
}

fn s25_char3(cap: &ScaleCap) -> Result<Vec<Check>> {
    const BASIS: &str = "one-point extension of S⁺(2,4) and its poset";
    let d = one_point_decompose(5, 3, cap)?;
    let smaller = build_algebra(2, 4, 3, BasisKind::Borel, cap)?;
    ensure(d.algebra.dim() == smaller.dim(), || "corner dimension differs from S⁺(2,4)".into())?;
    let mut out = vec![Check::pass(
        "one_point_decomposition",
        BASIS,
        json!({
            "vanishing_checked": d.vanishing_checked,
            "corner_dim": d.algebra.dim(),
            "module_dim": d.module_basis.len(),
            "pairs_checked": d.isomorphism.pairs_checked,
        }),
    )];
    let g = gamma_m();
    let nz = nazarova_wild(&g);
    ensure(!nz.wild, || format!("Γ_M contains {:?}", nz.pattern))?;
    let (w, anti) = width(&g);
    out.push(Check::pass(
        "nazarova_wild(Γ_M)=false",
        BASIS,
        json!({ "elements": g.len(), "width": w, "max_antichain": g.labels_of(&anti) }),
    ));
    out.push(Check::external(
        "poset_from_ar_quiver",
        "Γ_M is read off the AR-quiver of S⁺(2,4), which is not recomputed",
    ));
    out.push(Check::external(
        "nazarova_criterion",
        "Nazarova: a poset is wild iff it contains one of six minimal wild posets",
    ));
    Ok(out)
}

fn map_relations(rels: &[Relation], to: &Quiver, amap: &[usize], p: u64) -> Result<Vec<Relation>> {
    rels.iter().map(|r| Relation::new(to, r.map_paths(|path| path.iter().map(|&a| amap[a]).collect()), p)).collect()
}

fn s26_covering(p: u64, cap: &ScaleCap) -> Result<Vec<Check>> {
    const BASIS: &str = "Σ₂-covering of the quiver of S⁺(2,6)";
    let (cover, act, wild, entry) = if p == 5 {
        let (c, a) = datasets::covering_s26_p5()?;
        (c, a, datasets::WILD_SUBQUIVER_S26_P5.to_vec(), "XVIII")
    } else {
        let (c, a) = datasets::covering_s26_p3()?;
        (c, a, datasets::WILD_SUBQUIVER_S26_P3.to_vec(), "XXIX")
    };
    let base = borel2_presentation(6, p)?;
    let alg = presentation(&build_algebra(2, 6, p, BasisKind::Borel, cap)?, PATH_CAP)?;
    ensure(
        alg.quiver.quiver.typed_arrow_multiset() == base.quiver.typed_arrow_multiset()
            && alg.quiver.rendered_relations() == base.rendered_relations(),
        || "computed presentation of S⁺(2,6) differs from the closed form".into(),
    )?;
    let mut out = vec![Check::pass("presentation", BASIS, json!({ "relations": base.rendered_relations() }))];

    ensure(act.is_free(), || "swap action is not free".into())?;
    let (quot, proj) = quotient_by_group(&cover, &act)?;
    let (_, amap) = find_isomorphism(&base.quiver, &quot)
        .ok_or_else(|| Error::check("quotient is not isomorphic to the quiver of S⁺(2,6)"))?;
    out.push(Check::pass(
        "quotient_isomorphic",
        BASIS,
        json!({ "vertices": quot.num_vertices(), "arrows": quot.num_arrows() }),
    ));

    let on_quot = map_relations(&base.relations, &quot, &amap, p)?;
    let lifted = lift_relations(&cover, &proj, &quot, &on_quot, p)?;
    ensure(lifted.len() == act.order() * on_quot.len(), || {
        format!("{} lifted relations from {}", lifted.len(), on_quot.len())
    })?;
    let rendered: BTreeSet<String> = lifted.iter().map(|r| r.render(&cover, p)).collect();
    out.push(Check::pass("lifted_relations", BASIS, json!({ "relations": rendered })));

    let sub = datasets::subquiver(&cover, &wild)?;
    let restricted: BTreeSet<String> =
        restrict_relations(&cover, &sub, &lifted, p).iter().map(|r| r.render(&cover, p)).collect();
    ensure(restricted.len() == 1 && restricted.iter().all(|s| s.starts_with("(αβ-βα)")), || {
        format!("restricted relations {restricted:?}")
    })?;
    out.push(Check::pass("restricted_relations", BASIS, json!({ "relations": restricted })));
    let stab = stabilizer_of_subquiver(&act, &sub);
    ensure(stab == [0], || format!("stabilizer {stab:?}"))?;
    out.push(Check::pass("trivial_stabilizer", BASIS, json!({ "stabilizer_order": 1 })));
    out.push(Check::external(
        "minimal_wild",
        &format!("entry {entry} of Ringel's list of minimal wild quivers with one relation"),
    ));
    out.push(Check::external(
        "covering_criterion",
        "a wild Galois cover with a free action and trivial stabilizer makes the quotient wild",
    ));
    Ok(out)
}

fn s2_p_plus_1(p: u64, cap: &ScaleCap) -> Result<Vec<Check>> {
    const BASIS: &str = "wild subquiver of the quiver of S⁺(2,p+1)";
    let r = p as usize + 1;
    let base = borel2_presentation(r, p)?;
    let mut out = Vec::new();
    match build_algebra(2, r, p, BasisKind::Borel, cap) {
        Ok(a) => {
            let alg = presentation(&a, PATH_CAP)?;
            ensure(alg.quiver.rendered_relations() == base.rendered_relations(), || {
                "computed relations differ from the closed form".into()
            })?;
            out.push(Check::pass("presentation", BASIS, json!({ "relations": base.rendered_relations() })));
        }
        Err(Error::ScaleCap { .. }) => {}
        Err(e) => return Err(e),
    }
    let sub = datasets::subquiver(&base.quiver, &datasets::wild_subquiver_s2_p_plus_1(p))?;
    let restricted: BTreeSet<String> =
        restrict_relations(&base.quiver, &sub, &base.relations, p).iter().map(|x| x.render(&base.quiver, p)).collect();
    let want: BTreeSet<String> = [format!("(αβ-βα)_{r}")].into();
    ensure(restricted == want, || format!("restricted relations {restricted:?}"))?;
    out.push(Check::pass(
        "restricted_relations",
        BASIS,
        json!({ "vertices": sub.vertices.len(), "relations": restricted }),
    ));
    out.push(Check::external(
        "minimal_wild",
        "entry XXVIII of Ringel's list of minimal wild quivers with one relation",
    ));
    Ok(out)
}
