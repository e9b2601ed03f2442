use bsk_core::classifier::classify;
use bsk_core::posetrep::{contains_full_subposet, gamma_m, nazarova_wild, Poset};
use bsk_core::schur::{build_algebra, BasisKind, LinearCombo, ScaleCap};
use bsk_core::RepType;
use proptest::prelude::*;

fn poset_from_mask(n: usize, mask: &[bool]) -> Poset {
    let mut rel = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask[k] {
                rel.push((i, j));
            }
            k += 1;
        }
    }
    Poset::from_relations((0..n).map(|i| format!("x{i}")).collect(), &rel).unwrap()
}

fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(proptest::bool::weighted(0.3), n * (n - 1) / 2)))
        .prop_map(|(n, m)| poset_from_mask(n, &m))
}

fn is_order_embedding(host: &Poset, pat: &Poset, f: &[usize]) -> bool {
    let distinct = f.iter().collect::<std::collections::BTreeSet<_>>().len() == f.len();
    distinct && (0..pat.len()).all(|a| (0..pat.len()).all(|b| pat.less(a, b) == host.less(f[a], f[b])))
}

/// Tries every injective map.
fn brute_contains(host: &Poset, pat: &Poset) -> bool {
    fn go(host: &Poset, pat: &Poset, f: &mut Vec<usize>) -> bool {
        if f.len() == pat.len() {
            return is_order_embedding(host, pat, f);
        }
        for x in 0..host.len() {
            if !f.contains(&x) {
                f.push(x);
                if go(host, pat, f) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    go(host, pat, &mut Vec::new())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poset_contains_itself(p in poset(9)) {
        let f = contains_full_subposet(&p, &p).expect("identity embedding");
        prop_assert!(is_order_embedding(&p, &p, &f));
    }

    #[test]
    fn search_agrees_with_brute_force(host in poset(6), pat in poset(4)) {
        let found = contains_full_subposet(&host, &pat);
        if let Some(f) = &found {
            prop_assert!(is_order_embedding(&host, &pat, f));
        }
        prop_assert_eq!(found.is_some(), brute_contains(&host, &pat));
    }

    #[test]
    fn nazarova_is_monotone(host in poset(10), keep in proptest::collection::vec(any::<bool>(), 10)) {
        let sub: Vec<usize> = (0..host.len()).filter(|&i| keep[i]).collect();
        let part = host.induced(&sub);
        if nazarova_wild(&part).wild {
            prop_assert!(nazarova_wild(&host).wild);
        }
        let rep = nazarova_wild(&host);
        if let Some(emb) = rep.embedding {
            prop_assert!(rep.wild);
            prop_assert!(host.indices_of(&emb).is_ok());
        }
    }

    #[test]
    fn complement_of_hull(ys in proptest::collection::btree_set(0usize..33, 1..6)) {
        let g = gamma_m();
        let y: Vec<usize> = ys.into_iter().collect();
        prop_assert_eq!(g.incomparable_complement(&y), g.incomparable_complement(&g.convex_hull(&y)));
    }

    #[test]
    fn random_combinations_associate(
        n in 1usize..=3,
        r in 0usize..=3,
        p in prop::sample::select(vec![0u64, 2, 3, 5, 7]),
        seed in proptest::collection::vec((0usize..1000, -3i64..=3), 1..12),
    ) {
        let a = build_algebra(n, r, p, BasisKind::Borel, &ScaleCap::default()).unwrap();
        let d = a.dim();
        let pick = |off: usize| LinearCombo::from_terms(seed.iter().map(|&(k, c)| ((k + off) % d, c)), p);
        let (x, y, z) = (pick(0), pick(7), pick(13));
        prop_assert_eq!(a.multiply(&a.multiply(&x, &y), &z), a.multiply(&x, &a.multiply(&y, &z)));
    }

    #[test]
    fn prime_tables_reduce_from_zero(
        n in 1usize..=3,
        r in 0usize..=4,
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
        full in any::<bool>(),
    ) {
        let kind = if full && r <= 3 { BasisKind::Full } else { BasisKind::Borel };
        let cap = ScaleCap::default();
        let zero = build_algebra(n, r, 0, kind, &cap).unwrap();
        let modp = build_algebra(n, r, p, kind, &cap).unwrap();
        let reduced = zero.with_characteristic(p).unwrap();
        prop_assert_eq!(reduced.table(), modp.table());
        prop_assert!(modp.check_associativity().is_ok());
    }
}

#[test]
fn classification_is_monotone() {
    for p in [0, 2, 3, 5, 7, 11] {
        for n in 1..=8 {
            for r in 0..=20 {
                let t = classify(n, r, p).unwrap();
                assert!(t <= classify(n + 1, r, p).unwrap(), "n-step at ({n},{r},{p})");
                assert!(t <= classify(n, r + 1, p).unwrap(), "r-step at ({n},{r},{p})");
            }
        }
    }
}

#[test]
fn tame_cases_are_exactly_the_two_families() {
    for p in [0, 2, 3, 5, 7, 11] {
        for n in 1..=8 {
            for r in 0..=20 {
                let tame = classify(n, r, p).unwrap() == RepType::Tame;
                assert_eq!(tame, (n, r, p) == (2, 5, 3) || (n, r) == (3, 2), "({n},{r},{p})");
            }
        }
    }
}
