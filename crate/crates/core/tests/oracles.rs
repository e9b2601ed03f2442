//! Independent brute-force oracles for the structure constants and the
//! symmetric-group combinatorics.

use bsk_core::schur::{build_algebra, full_basis, BasisKind, Label, ScaleCap};
use bsk_core::symcomb::{
    double_coset_transversal, stabilizer, stabilizer_pair, Composition, MultiIndex, PairOrbit, Permutation,
    YoungSubgroup,
};
use std::collections::{BTreeMap, BTreeSet, HashSet};

fn orbit(i: &MultiIndex, j: &MultiIndex) -> PairOrbit {
    PairOrbit::canonical(i, j).unwrap()
}

/// Coefficient of `ξ_{p,q}` in `ξ_x ξ_y` is the number of `s` with
/// `(p,s) ~ x` and `(s,q) ~ y`.
fn green_coefficient(x: &PairOrbit, y: &PairOrbit, z: &PairOrbit) -> i64 {
    let (n, r) = (x.n(), x.r());
    MultiIndex::all(n, r).iter().filter(|s| orbit(z.i(), s) == *x && orbit(s, z.j()) == *y).count() as i64
}

fn check_against_green(n: usize, r: usize, kind: BasisKind) {
    let a = build_algebra(n, r, 0, kind, &ScaleCap::default()).unwrap();
    let orbits: Vec<&PairOrbit> = a.basis().iter().map(|l| l.as_orbit().unwrap()).collect();
    for (h, x) in orbits.iter().enumerate() {
        for (l, y) in orbits.iter().enumerate() {
            let prod = a.product(h, l);
            for (k, z) in orbits.iter().enumerate() {
                if z.left_weight() != x.left_weight() || z.right_weight() != y.right_weight() {
                    assert_eq!(prod.coefficient(k), 0);
                    continue;
                }
                let want = green_coefficient(x, y, z);
                assert_eq!(prod.coefficient(k), want, "S({n},{r}) {x}·{y} at {z}");
            }
            // the product never has support outside the basis
            let outside: i64 = MultiIndex::all(n, r)
                .iter()
                .filter(|p| p.weight() == x.left_weight())
                .flat_map(|p| {
                    MultiIndex::all(n, r)
                        .into_iter()
                        .filter(|q| q.weight() == y.right_weight())
                        .map(move |q| orbit(p, &q))
                })
                .collect::<BTreeSet<_>>()
                .iter()
                .filter(|z| a.index_of_orbit(z).is_none())
                .map(|z| green_coefficient(x, y, z))
                .sum();
            assert_eq!(outside, 0, "{x}·{y} leaves the basis span");
        }
    }
}

#[test]
fn green_formula_full_schur_small() {
    check_against_green(2, 1, BasisKind::Full);
    check_against_green(2, 2, BasisKind::Full);
    check_against_green(2, 3, BasisKind::Full);
    check_against_green(3, 2, BasisKind::Full);
}

#[test]
fn green_formula_borel() {
    check_against_green(2, 4, BasisKind::Borel);
    check_against_green(3, 2, BasisKind::Borel);
    check_against_green(3, 3, BasisKind::Borel);
    check_against_green(4, 2, BasisKind::Borel);
}

#[test]
fn borel_dimension_brute_force() {
    for n in 1..=3 {
        for r in 0..=4 {
            let mut seen = HashSet::new();
            for i in MultiIndex::all(n, r) {
                for j in MultiIndex::all(n, r) {
                    if i.leq(&j) {
                        seen.insert(orbit(&i, &j));
                    }
                }
            }
            let a = build_algebra(n, r, 0, BasisKind::Borel, &ScaleCap::default()).unwrap();
            assert_eq!(a.dim(), seen.len(), "S⁺({n},{r})");
            let mut all = HashSet::new();
            for i in MultiIndex::all(n, r) {
                for j in MultiIndex::all(n, r) {
                    all.insert(orbit(&i, &j));
                }
            }
            assert_eq!(full_basis(n, r).len(), all.len(), "S({n},{r})");
        }
    }
    let a = build_algebra(2, 4, 0, BasisKind::Borel, &ScaleCap::default()).unwrap();
    assert_eq!(a.idempotents().len(), 5);
}

#[test]
fn double_coset_transversal_partitions_g() {
    // for every Σ_j with j ∈ I(2,r), r ≤ 5, and stabilizer subgroups H, K:
    // the double cosets of the representatives are disjoint and cover Σ_j
    for r in 0..=5 {
        for j in MultiIndex::all(2, r) {
            let g = stabilizer(&j);
            let elements: Vec<Permutation> = g.elements();
            let mut subgroups: Vec<YoungSubgroup> = Vec::new();
            for i in MultiIndex::all(2, r) {
                let s = stabilizer_pair(&i, &j);
                if !subgroups.contains(&s) {
                    subgroups.push(s);
                }
            }
            for h in &subgroups {
                for k in &subgroups {
                    let reps = double_coset_transversal(h, &g, k).unwrap();
                    let hs = h.elements();
                    let ks = k.elements();
                    let mut covered: BTreeMap<Permutation, usize> = BTreeMap::new();
                    for (n, s) in reps.iter().enumerate() {
                        assert!(g.contains(s));
                        for a in &hs {
                            for b in &ks {
                                let x = a.compose(s).compose(b);
                                if let Some(prev) = covered.insert(x, n) {
                                    assert_eq!(prev, n, "representatives share a double coset");
                                }
                            }
                        }
                    }
                    assert_eq!(covered.len(), elements.len());
                    // each representative is the smallest element of its coset
                    for (n, s) in reps.iter().enumerate() {
                        let min = covered.iter().find(|(_, &m)| m == n).unwrap().0;
                        assert_eq!(min, s);
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_pair_separates_orbits() {
    for n in 1..=3 {
        for r in 0..=4 {
            let perms = YoungSubgroup::full(r).elements();
            let all = MultiIndex::all(n, r);
            let mut classes: BTreeMap<PairOrbit, BTreeSet<(MultiIndex, MultiIndex)>> = BTreeMap::new();
            for i in &all {
                for j in &all {
                    let c = orbit(i, j);
                    assert_eq!(orbit(c.i(), c.j()), c, "idempotent");
                    for s in &perms {
                        assert_eq!(orbit(&i.act(s), &j.act(s)), c);
                    }
                    classes.entry(c).or_default().insert((i.clone(), j.clone()));
                }
            }
            // distinct canonical forms are never related by a permutation
            for (c, members) in &classes {
                let (i, j) = members.iter().next().unwrap();
                let orbit_set: BTreeSet<_> = perms.iter().map(|s| (i.act(s), j.act(s))).collect();
                assert_eq!(&orbit_set, members, "class of {c}");
            }
        }
    }
}

#[test]
fn dominance_and_weights() {
    for n in 1..=4 {
        for r in 0..=4 {
            for i in MultiIndex::all(n, r) {
                for j in MultiIndex::all(n, r) {
                    if i.leq(&j) {
                        assert!(j.weight().dominance_leq(&i.weight()).unwrap());
                    }
                }
            }
            for lam in Composition::all(n, r) {
                for s in 1..n {
                    for q in 0..=lam.parts()[s] {
                        let w = lam.shifted_standard(s, q).unwrap().weight();
                        let mut want = lam.parts().to_vec();
                        want[s - 1] += q;
                        want[s] -= q;
                        assert_eq!(w.parts(), want.as_slice());
                    }
                }
            }
        }
    }
}

#[test]
fn labels_are_xi() {
    let a = build_algebra(2, 2, 0, BasisKind::Borel, &ScaleCap::default()).unwrap();
    assert!(a.basis().iter().all(|l| matches!(l, Label::Xi(_))));
}
