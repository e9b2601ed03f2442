//! Acceptance gate: one line per criterion, exit status 1 if any fails.
//!
//! Runs without the libtest harness so the lines always reach stdout.

use bsk_core::basicalg::{degenerate, ext_quiver, is_special_biserial, presentation, radical_layers, GradingFunction};
use bsk_core::classifier::classify;
use bsk_core::posetrep::{gamma_m, nazarova_patterns, nazarova_wild, width, Poset};
use bsk_core::quiverkit::{
    borel2_presentation, classify_ade, datasets, find_isomorphism, hereditary_type, is_convex, lift_relations,
    quotient_by_group, restrict_relations, separated, stabilizer_of_subquiver, AdeType, Multigraph, Quiver, Relation,
    Subquiver,
};
use bsk_core::schur::{
    build_algebra, embed_degree, one_point_decompose, truncate_columns, BasisKind, LinearCombo, ScaleCap,
    StructureAlgebra,
};
use bsk_core::symcomb::{Composition, PairOrbit};
use bsk_core::RepType;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

/// Wall-clock budgets per criterion. Criteria without a stated budget share
/// the overall one.
const BUDGET_TABLE: Duration = Duration::from_secs(1);
const BUDGET_BOREL2: Duration = Duration::from_secs(10);
const BUDGET_POSETS: Duration = Duration::from_secs(5);
const BUDGET_DEFAULT: Duration = Duration::from_secs(30);
const BUDGET_TOTAL: Duration = Duration::from_secs(60);

/// Characteristics exercised by the algebra-level criteria.
const CHARS: [u64; 4] = [0, 2, 3, 5];

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn cap() -> ScaleCap {
    ScaleCap::default()
}

fn borel(n: usize, r: usize, p: u64) -> Result<StructureAlgebra, String> {
    build_algebra(n, r, p, BasisKind::Borel, &cap()).map_err(|e| e.to_string())
}

fn idx(a: &StructureAlgebra, i: &str, j: &str) -> Result<usize, String> {
    let n = a.shape().unwrap().0;
    let o = PairOrbit::parse(n, i, j).map_err(|e| e.to_string())?;
    a.index_of_orbit(&o).ok_or_else(|| format!("ξ_{{{i},{j}}} missing"))
}

/// `c·ξ_{i,j} + …` as a combination in `a`.
fn combo(a: &StructureAlgebra, terms: &[(i64, &str, &str)]) -> Result<LinearCombo, String> {
    let mut v = Vec::new();
    for &(c, i, j) in terms {
        v.push((idx(a, i, j)?, c));
    }
    Ok(LinearCombo::from_terms(v, a.characteristic()))
}

fn product(a: &StructureAlgebra, h: (&str, &str), l: (&str, &str)) -> Result<LinearCombo, String> {
    Ok(a.product(idx(a, h.0, h.1)?, idx(a, l.0, l.1)?))
}

fn strings<S: ToString>(v: impl IntoIterator<Item = S>) -> BTreeSet<String> {
    v.into_iter().map(|s| s.to_string()).collect()
}

fn weights(list: &[&str]) -> Vec<Composition> {
    list.iter().map(|s| Composition::parse(s).unwrap()).collect()
}

fn arrows(q: &Quiver) -> BTreeSet<(String, String, String)> {
    q.arrows().iter().map(|a| (a.label.clone(), q.vertices()[a.src].clone(), q.vertices()[a.dst].clone())).collect()
}

fn triples(v: &[(&str, &str, &str)]) -> BTreeSet<(String, String, String)> {
    v.iter().map(|&(a, b, c)| (a.into(), b.into(), c.into())).collect()
}

/// The multiplication table of `S⁺(3,2)` as printed, without the products
/// involving idempotents.
type Pair = (&'static str, &'static str);
type TableRow = (Pair, Pair, &'static [(i64, &'static str, &'static str)]);

const S32_TABLE: [TableRow; 18] = [
    (("11", "13"), ("13", "23"), &[(1, "11", "23")]),
    (("11", "13"), ("13", "33"), &[(2, "11", "33")]),
    (("12", "13"), ("13", "23"), &[(1, "12", "23")]),
    (("12", "13"), ("13", "33"), &[(1, "12", "33")]),
    (("11", "23"), ("23", "33"), &[(2, "11", "33")]),
    (("12", "32"), ("23", "33"), &[(1, "12", "33")]),
    (("12", "23"), ("23", "33"), &[(1, "12", "33")]),
    (("13", "23"), ("23", "33"), &[(1, "13", "33")]),
    (("22", "23"), ("23", "33"), &[(2, "22", "33")]),
    (("11", "22"), ("22", "33"), &[(1, "11", "33")]),
    (("11", "22"), ("22", "23"), &[(1, "11", "23")]),
    (("12", "22"), ("22", "33"), &[(1, "12", "33")]),
    (("12", "22"), ("22", "23"), &[(1, "12", "23"), (1, "12", "32")]),
    (("11", "12"), ("12", "23"), &[(1, "11", "23")]),
    (("11", "12"), ("12", "33"), &[(2, "11", "33")]),
    (("11", "12"), ("12", "13"), &[(1, "11", "13")]),
    (("11", "12"), ("12", "22"), &[(2, "11", "22")]),
    (("11", "12"), ("12", "32"), &[(1, "11", "23")]),
];

fn criterion_1() -> Outcome {
    let a = borel(3, 2, 0)?;
    for (h, l, want) in S32_TABLE {
        let got = product(&a, h, l)?;
        ensure!(got == combo(&a, want)?, "ξ{},{}·ξ{},{} = {}", h.0, h.1, l.0, l.1, a.render(&got));
    }
    // The table is complete: every other product of non-idempotents vanishes.
    let listed: BTreeSet<(usize, usize)> = S32_TABLE
        .iter()
        .map(|(h, l, _)| Ok((idx(&a, h.0, h.1)?, idx(&a, l.0, l.1)?)))
        .collect::<Result<_, String>>()?;
    let mut others = 0;
    for h in 0..a.dim() {
        for l in 0..a.dim() {
            if a.is_idempotent(h) || a.is_idempotent(l) || listed.contains(&(h, l)) {
                continue;
            }
            ensure!(a.product(h, l).is_zero(), "unlisted product {}·{} is nonzero", a.label(h), a.label(l));
            others += 1;
        }
    }
    Ok(format!("18 printed products reproduced, {others} other products vanish"))
}

fn criterion_2() -> Outcome {
    let a = borel(4, 2, 3)?;
    let t = a.truncate_by_weights(&weights(&["0101", "0110", "1100"])).map_err(|e| e.to_string())?;
    let layers = radical_layers(&t).map_err(|e| e.to_string())?;
    let rad = |k| strings(layers.labels(k).unwrap_or_default());
    ensure!(rad(1) == strings(["ξ_{23,24}", "ξ_{12,24}", "ξ_{12,42}", "ξ_{12,23}", "ξ_{12,32}"]), "rad = {:?}", rad(1));
    ensure!(rad(2) == strings(["ξ_{12,24}", "ξ_{12,42}"]), "rad² = {:?}", rad(2));
    ensure!(rad(3).is_empty(), "rad³ = {:?}", rad(3));
    ensure!(product(&t, ("12", "23"), ("23", "24"))? == combo(&t, &[(1, "12", "24")])?, "ξ12,23·ξ23,24");
    ensure!(product(&t, ("12", "32"), ("23", "24"))? == combo(&t, &[(1, "12", "42")])?, "ξ12,32·ξ23,24");
    let pres = presentation(&t, 10_000).map_err(|e| e.to_string())?;
    ensure!(pres.is_hereditary(), "relations {:?}", pres.quiver.rendered_relations());
    let want = triples(&[("ξ_{23,24}", "0101", "0110"), ("ξ_{12,23}", "0110", "1100"), ("ξ_{12,32}", "0110", "1100")]);
    let q = &pres.quiver.quiver;
    ensure!(arrows(q) == want, "arrows {:?}", arrows(q));
    let ty = hereditary_type(q).map_err(|e| e.to_string())?;
    ensure!(ty == RepType::Wild, "hereditary type {ty}");
    Ok("rad has 5 elements, rad² = {ξ12,24, ξ12,42}, quiver •→•⇉• without relations is wild".into())
}

const XSET: [&str; 5] = ["030", "120", "021", "111", "201"];

fn criterion_3() -> Outcome {
    for p in [2, 3, 5] {
        let a = borel(3, 3, p)?;
        if p == 2 {
            let z = product(&a, ("113", "123"), ("123", "223"))?;
            ensure!(z.is_zero(), "ξ113,123·ξ123,223 = {}", a.render(&z));
        }
        let l = product(&a, ("122", "123"), ("123", "223"))?;
        let r = product(&a, ("122", "222"), ("222", "223"))?;
        ensure!(l != r, "p = {p}: the two paths 021 → 120 agree");

        let whole = ext_quiver(&a).map_err(|e| e.to_string())?.quiver;
        let xs: Vec<usize> = XSET.iter().map(|w| whole.vertex_index(w).unwrap()).collect();
        ensure!(is_convex(&Subquiver::full_on(&whole, xs), &whole), "p = {p}: X not convex");

        let t = a.truncate_by_weights(&weights(&XSET)).map_err(|e| e.to_string())?;
        let pres = presentation(&t, 10_000).map_err(|e| e.to_string())?;
        let mut want = vec![
            ("ξ_{122,222}", "030", "120"),
            ("ξ_{122,123}", "111", "120"),
            ("ξ_{113,123}", "111", "201"),
            ("ξ_{123,223}", "021", "111"),
            ("ξ_{222,223}", "021", "030"),
        ];
        if p == 2 {
            want.push(("ξ_{113,223}", "021", "201"));
        }
        let got = arrows(&pres.quiver.quiver);
        ensure!(got == triples(&want), "p = {p}: arrows {got:?}");
    }
    Ok("zero product and non-commuting square hold, X convex, quivers match for p = 2, 3, 5".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for p in CHARS {
        for r in 0..=6 {
            let a = borel(2, r, p)?;
            let got = presentation(&a, 100_000).map_err(|e| e.to_string())?;
            let want = borel2_presentation(r, p).map_err(|e| e.to_string())?;
            ensure!(
                got.quiver.quiver.typed_arrow_multiset() == want.quiver.typed_arrow_multiset(),
                "(2,{r},{p}): arrows differ"
            );
            ensure!(
                got.quiver.rendered_relations() == want.rendered_relations(),
                "(2,{r},{p}): {:?} vs {:?}",
                got.quiver.rendered_relations(),
                want.rendered_relations()
            );
            cases += 1;
        }
    }
    let printed: [(u64, &[&str]); 2] = [
        (5, &["(α^5)_6", "(α^5)_5", "(αβ-βα)_6"]),
        (3, &["(α^3)_6", "(α^3)_5", "(α^3)_4", "(α^3)_3", "(αβ-βα)_6", "(αβ-βα)_5", "(αβ-βα)_4"]),
    ];
    for (p, want) in printed {
        let got = presentation(&borel(2, 6, p)?, 100_000).map_err(|e| e.to_string())?;
        ensure!(
            got.quiver.rendered_relations() == strings(want.iter()),
            "(2,6,{p}): {:?}",
            got.quiver.rendered_relations()
        );
    }
    let dt = start.elapsed();
    ensure!(dt < BUDGET_BOREL2, "took {dt:?}");
    Ok(format!("{cases} presentations agree, printed relation sets for p = 3, 5 match"))
}

struct CoverRun {
    lifted: BTreeSet<String>,
    restricted: BTreeSet<String>,
    stabilizer: Vec<usize>,
}

fn lifted_and_restricted(p: u64) -> Result<CoverRun, String> {
    let (cover, act, wild) = if p == 5 {
        let (c, a) = datasets::covering_s26_p5().map_err(|e| e.to_string())?;
        (c, a, datasets::WILD_SUBQUIVER_S26_P5.to_vec())
    } else {
        let (c, a) = datasets::covering_s26_p3().map_err(|e| e.to_string())?;
        (c, a, datasets::WILD_SUBQUIVER_S26_P3.to_vec())
    };
    let base = borel2_presentation(6, p).map_err(|e| e.to_string())?;
    ensure!(act.is_free() && act.order() == 2, "action is not a free involution");
    let (quot, proj) = quotient_by_group(&cover, &act).map_err(|e| e.to_string())?;
    let (_, amap) = find_isomorphism(&base.quiver, &quot).ok_or("quotient not isomorphic to the quiver")?;
    let moved: Vec<Relation> = base
        .relations
        .iter()
        .map(|r| {
            let terms = r.terms().iter().map(|(c, path)| (*c, path.iter().map(|&a| amap[a]).collect())).collect();
            Relation::new(&quot, terms, p)
        })
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let lifted = lift_relations(&cover, &proj, &quot, &moved, p).map_err(|e| e.to_string())?;
    let sub = datasets::subquiver(&cover, &wild).map_err(|e| e.to_string())?;
    let restricted = restrict_relations(&cover, &sub, &lifted, p);
    let stab = stabilizer_of_subquiver(&act, &sub);
    Ok(CoverRun {
        lifted: strings(lifted.iter().map(|r| r.render(&cover, p))),
        restricted: strings(restricted.iter().map(|r| r.render(&cover, p))),
        stabilizer: stab,
    })
}

fn criterion_5() -> Outcome {
    let mut want5 = Vec::new();
    for v in ["6'", "6''", "5'", "5''"] {
        want5.push(format!("(α^5)_{v}"));
    }
    want5.extend(["(αβ-βα)_6'".to_string(), "(αβ-βα)_6''".to_string()]);
    let mut want3 = Vec::new();
    for s in 3..=6 {
        want3.push(format!("(α^3)_{s}'"));
        want3.push(format!("(α^3)_{s}''"));
    }
    for t in 4..=6 {
        want3.push(format!("(αβ-βα)_{t}'"));
        want3.push(format!("(αβ-βα)_{t}''"));
    }
    for (p, want, restricted_to) in [(5, want5, "(αβ-βα)_6''"), (3, want3, "(αβ-βα)_6'")] {
        let CoverRun { lifted, restricted, stabilizer: stab } = lifted_and_restricted(p)?;
        ensure!(lifted == strings(&want), "p = {p}: lifted {lifted:?}");
        ensure!(restricted == strings([restricted_to]), "p = {p}: restricted {restricted:?}");
        ensure!(stab == [0], "p = {p}: stabilizer {stab:?}");
    }
    Ok("quotients isomorphic, R_Σ₂ sets match, one commutativity relation survives, stabilizers trivial".into())
}

fn criterion_6() -> Outcome {
    let q = ext_quiver(&borel(2, 4, 2)?).map_err(|e| e.to_string())?.quiver;
    let sep = separated(&q);
    let comps = sep.components();
    ensure!(comps.len() == 3, "{} components", comps.len());
    let mut seen = BTreeSet::new();
    for c in &comps {
        let names = strings(c.iter().map(|&v| sep.vertices()[v].clone()));
        let ty = classify_ade(&Multigraph::underlying(&sep, c));
        match c.len() {
            1 => {}
            8 => {
                ensure!(
                    names == strings(["1'", "2'", "3'", "4'", "0''", "1''", "2''", "3''"]),
                    "large component {names:?}"
                );
                ensure!(ty == AdeType::Neither, "large component is {ty}");
            }
            k => return Err(format!("component of size {k}")),
        }
        seen.extend(names.into_iter().filter(|_| c.len() == 1));
    }
    ensure!(seen == strings(["0'", "4''"]), "isolated vertices {seen:?}");
    Ok("components {0'}, {4''} and an 8-vertex component that is neither Dynkin nor extended Dynkin".into())
}

fn criterion_7() -> Outcome {
    for p in CHARS {
        let a = borel(3, 2, p)?;
        let phi = GradingFunction::preset_s32(&a).map_err(|e| e.to_string())?;
        phi.check_admissible(&a).map_err(|e| format!("p = {p}: {e}"))?;
        let d = degenerate(&a, &phi).map_err(|e| format!("p = {p}: {e}"))?;
        let b = &d.algebra;
        let triples = b.check_associativity().map_err(|e| format!("p = {p}: {e}"))?;
        ensure!(triples == d.triples_checked && triples > 0, "p = {p}: {triples} triples");
        for (h, l) in [
            (("22", "23"), ("23", "33")),
            (("12", "22"), ("22", "33")),
            (("11", "22"), ("22", "23")),
            (("11", "12"), ("12", "22")),
        ] {
            let v = product(b, h, l)?;
            ensure!(v.is_zero(), "p = {p}: ξ{},{}·ξ{},{} = {}", h.0, h.1, l.0, l.1, b.render(&v));
        }
        let long = product(b, ("12", "22"), ("22", "23"))?;
        ensure!(long == combo(b, &[(1, "12", "32")])?, "p = {p}: long product {}", b.render(&long));
        let sb = is_special_biserial(b).map_err(|e| e.to_string())?;
        ensure!(sb.special_biserial, "p = {p}: {:?}", sb.witness);
    }
    Ok("admissible, associative, four products vanish, long product → ξ12,32, special biserial (p = 0, 2, 3, 5)".into())
}

fn labels(p: &Poset, ks: &[u32]) -> Vec<usize> {
    p.indices_of(&ks.iter().map(|k| k.to_string()).collect::<Vec<_>>()).unwrap()
}

/// The sets `C_X` drawn for the minimal triples (and four-element hulls) of
/// `Γ_M` whose complement has width at least 2.
const C_X: [(&[u32], &[u32]); 16] = [
    (&[5, 8, 11], &[4, 6, 7, 10]),
    (&[6, 9, 12], &[7, 11, 14]),
    (&[7, 10, 13], &[8, 11, 12, 14, 15, 18]),
    (&[8, 11, 14], &[4, 6, 7, 9, 10, 13, 17]),
    (&[9, 12, 15], &[7, 10, 14]),
    (&[10, 13, 16], &[11, 14, 15, 18]),
    (&[15, 19, 21], &[14, 22, 24]),
    (&[16, 20, 22], &[11, 14, 15, 18]),
    (&[20, 22, 24], &[11, 14, 15, 18, 19]),
    (&[19, 21, 23], &[14, 18, 24]),
    (&[10, 13, 17], &[8, 11, 12, 14, 15, 18]),
    (&[17, 20, 22], &[11, 14, 15, 18, 19]),
    (&[21, 23, 25], &[14, 18, 24]),
    (&[11, 14, 15, 18], &[7, 10, 13, 16, 17, 20, 22, 24]),
    (&[13, 16, 17, 20], &[11, 14, 15, 18]),
    (&[12, 15, 16, 19], &[14, 17]),
];

fn criterion_8() -> Outcome {
    let start = Instant::now();
    for (name, pat) in nazarova_patterns() {
        let rep = nazarova_wild(&pat);
        ensure!(rep.wild && rep.embedding.is_some(), "pattern {name} not detected in itself");
    }
    let g = gamma_m();
    let rep = nazarova_wild(&g);
    ensure!(!rep.wild, "Γ_M contains {:?} at {:?}", rep.pattern, rep.embedding);

    let (w, anti) = width(&g);
    ensure!(w == 4 && anti == labels(&g, &[14, 15, 16, 17]), "width {w}, antichain {:?}", g.labels_of(&anti));
    // Uniqueness of the maximum antichain by exhaustive search over 4-sets.
    let n = g.len();
    let mut maximum = 0;
    for a in 0..n {
        for b in a + 1..n {
            if g.comparable(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.comparable(a, c) || g.comparable(b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if !g.comparable(a, d) && !g.comparable(b, d) && !g.comparable(c, d) {
                        maximum += 1;
                    }
                }
            }
        }
    }
    ensure!(maximum == 1, "{maximum} antichains of size 4");

    for (x, want) in C_X {
        let got = g.incomparable_complement(&labels(&g, x));
        ensure!(got == labels(&g, want), "C_{x:?} = {:?}", g.labels_of(&got));
        ensure!(width(&g.induced(&got)).0 >= 2, "C_{x:?} has width < 2");
    }
    // The list is exhaustive: a minimal triple with a wide complement is one
    // of the convex triples above or lies in one of the three hulls.
    let listed: BTreeSet<Vec<usize>> = C_X.iter().map(|(x, _)| labels(&g, x)).collect();
    for t in g.minimal_triples() {
        let c = g.incomparable_complement(&t);
        if width(&g.induced(&c)).0 >= 2 {
            let hull = g.convex_hull(&t);
            ensure!(listed.contains(&hull), "unlisted triple {:?}", g.labels_of(&t));
            ensure!(c == g.incomparable_complement(&hull), "C_X ≠ C_hull for {:?}", g.labels_of(&t));
        }
    }
    for (n_set, want) in [(&[14u32, 15, 18, 19][..], &[17u32, 20, 22, 24][..]), (&[11, 12, 14, 15], &[7, 10, 13, 17])] {
        let got = g.incomparable_complement(&labels(&g, n_set));
        ensure!(got == labels(&g, want), "C_{n_set:?} = {:?}", g.labels_of(&got));
    }
    let dt = start.elapsed();
    ensure!(dt < BUDGET_POSETS, "took {dt:?}");
    Ok("six patterns detected, Γ_M not wild, width 4 with unique antichain {14,15,16,17}, 16 C_X sets and C_N1, C_N2 match".into())
}

fn criterion_9() -> Outcome {
    let d = one_point_decompose(5, 3, &cap()).map_err(|e| e.to_string())?;
    let smaller = borel(2, 4, 3)?;
    ensure!(d.vanishing_checked > 0, "no products e·S·ē checked");
    ensure!(d.algebra.dim() == smaller.dim(), "dim ēSē = {} vs {}", d.algebra.dim(), smaller.dim());
    ensure!(
        d.isomorphism.pairs_checked == smaller.dim() * smaller.dim(),
        "{} structure-constant pairs compared",
        d.isomorphism.pairs_checked
    );
    Ok(format!(
        "e·S·ē = 0 on {} products, ēSē ≅ S⁺(2,4) (dim {}) on {} pairs",
        d.vanishing_checked,
        smaller.dim(),
        d.isomorphism.pairs_checked
    ))
}

/// Region rows for `n = 2..=6`, columns `r = 1..=12`, read off the four
/// diagrams (the last one for a prime `p ≥ 5`).
fn region_rows(p: u64) -> [&'static str; 5] {
    match p {
        0 => ["FFFFFFFFFFFF", "FTWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW"],
        2 => ["FFFWWWWWWWWW", "FTWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW"],
        3 => ["FFFFTWWWWWWW", "FTWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW"],
        5 => ["FFFFFWWWWWWW", "FTWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW"],
        7 => ["FFFFFFFWWWWW", "FTWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW", "FWWWWWWWWWWW"],
        _ => unreachable!(),
    }
}

fn criterion_10() -> Outcome {
    let letter = |t: RepType| match t {
        RepType::Finite => 'F',
        RepType::Tame => 'T',
        RepType::Wild => 'W',
    };
    let mut cells = 0;
    for p in [0, 2, 3, 5, 7] {
        for (row, n) in region_rows(p).iter().zip(2..) {
            let got: String = (1..=12).map(|r| letter(classify(n, r, p).unwrap())).collect();
            ensure!(got == *row, "p = {p}, n = {n}: {got} vs {row}");
        }
        for n in 1..=6 {
            for r in 0..=12 {
                let t = classify(n, r, p).map_err(|e| e.to_string())?;
                if n == 1 || r == 0 {
                    ensure!(t == RepType::Finite, "({n},{r},{p}) is {t}");
                }
                if n < 6 {
                    ensure!(t <= classify(n + 1, r, p).unwrap(), "not monotone in n at ({n},{r},{p})");
                }
                if r < 12 {
                    ensure!(t <= classify(n, r + 1, p).unwrap(), "not monotone in r at ({n},{r},{p})");
                }
                cells += 1;
            }
        }
    }
    Ok(format!("four region diagrams reproduced, monotone on {cells} cells"))
}

fn criterion_11() -> Outcome {
    let mut algebras = 0;
    let mut pairs = 0;
    for n in 1..=3 {
        for r in 0..=4 {
            for kind in [BasisKind::Borel, BasisKind::Full] {
                // S(3,4) alone would take most of the budget in a debug build.
                if kind == BasisKind::Full && r > 3 {
                    continue;
                }
                let zero = build_algebra(n, r, 0, kind, &cap()).map_err(|e| e.to_string())?;
                for p in CHARS {
                    let a = build_algebra(n, r, p, kind, &cap()).map_err(|e| e.to_string())?;
                    a.check_associativity().map_err(|e| format!("({n},{r},{p}): {e}"))?;
                    let reduced = zero.with_characteristic(p).map_err(|e| e.to_string())?;
                    ensure!(reduced.table() == a.table(), "({n},{r},{p}): table differs from the 0-table mod p");
                    algebras += 1;
                }
            }
        }
    }
    for p in CHARS {
        for n in 1..=3 {
            for s in 0..=4 {
                pairs += embed_degree(n, s, p, &cap()).map_err(|e| e.to_string())?.pairs_checked;
                for m in 1..n {
                    pairs += truncate_columns(n, m, s, p, &cap()).map_err(|e| e.to_string())?.pairs_checked;
                }
            }
        }
    }
    Ok(format!("{algebras} algebras (S⁺ for r ≤ 4, S for r ≤ 3) associative and reduce from characteristic 0, certificates on {pairs} pairs"))
}

fn main() {
    let criteria: [(fn() -> Outcome, Duration); 11] = [
        (criterion_1, BUDGET_TABLE),
        (criterion_2, BUDGET_DEFAULT),
        (criterion_3, BUDGET_DEFAULT),
        (criterion_4, BUDGET_BOREL2),
        (criterion_5, BUDGET_DEFAULT),
        (criterion_6, BUDGET_DEFAULT),
        (criterion_7, BUDGET_DEFAULT),
        (criterion_8, BUDGET_POSETS),
        (criterion_9, BUDGET_DEFAULT),
        (criterion_10, BUDGET_DEFAULT),
        (criterion_11, BUDGET_DEFAULT),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (k, (run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let dt = start.elapsed();
        let outcome = match outcome {
            Ok(_) if dt > budget => Err(format!("over budget: {dt:?} > {budget:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS ({:.2?}) {msg}", k + 1, dt),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({:.2?}) {msg}", k + 1, dt);
            }
        }
    }
    let dt = total.elapsed();
    if dt > BUDGET_TOTAL {
        failed += 1;
        println!("total: FAIL {dt:.2?} > {BUDGET_TOTAL:?}");
    } else {
        println!("total: {dt:.2?}");
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
