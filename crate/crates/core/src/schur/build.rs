use super::{check_char, Label, StructureAlgebra};
use crate::error::{Error, Result};
use crate::symcomb::{
    double_coset_transversal, stabilizer_pair, stabilizer_triple, subgroup_index, Composition, MultiIndex, PairOrbit,
    Permutation,
};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// Which basis to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// `ξ_{i,j}` with `i ≤ j`: the Borel-Schur algebra `S⁺(n,r)`.
    Borel,
    /// All `ξ_{i,j}`: the Schur algebra `S(n,r)`.
    Full,
}

/// Guard against constructions that would take too long.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScaleCap {
    pub max_r: usize,
    pub max_dim: u128,
}

impl Default for ScaleCap {
    fn default() -> Self {
        ScaleCap { max_r: 8, max_dim: 20_000 }
    }
}

impl ScaleCap {
    pub const ENV: &'static str = "BSK_SCALE_CAP";

    pub fn unlimited() -> Self {
        ScaleCap { max_r: usize::MAX, max_dim: u128::MAX }
    }

    /// `"R,DIM"` sets both limits; a single number sets the dimension limit.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("bad scale cap {s:?}, expected \"R,DIM\" or \"DIM\""));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        match parts.as_slice() {
            [d] => Ok(ScaleCap { max_dim: d.parse().map_err(|_| bad())?, ..ScaleCap::default() }),
            [r, d] => Ok(ScaleCap { max_r: r.parse().map_err(|_| bad())?, max_dim: d.parse().map_err(|_| bad())? }),
            _ => Err(bad()),
        }
    }

    /// Default cap, overridden by `BSK_SCALE_CAP` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV) {
            Ok(s) if !s.trim().is_empty() => ScaleCap::parse(&s),
            _ => Ok(ScaleCap::default()),
        }
    }

    pub fn check(&self, n: usize, r: usize, kind: BasisKind) -> Result<()> {
        if r > self.max_r {
            return Err(Error::ScaleCap { what: "r", value: r as u128, cap: self.max_r as u128 });
        }
        let d = basis_dimension(n, r, kind);
        if d > self.max_dim {
            return Err(Error::ScaleCap { what: "dim", value: d, cap: self.max_dim });
        }
        Ok(())
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.saturating_mul(n - t) / (t + 1);
    }
    acc
}

fn columns(n: usize, kind: BasisKind) -> Vec<(u8, u8)> {
    let mut cols = Vec::new();
    for a in 1..=n as u8 {
        for b in 1..=n as u8 {
            if kind == BasisKind::Full || a <= b {
                cols.push((a, b));
            }
        }
    }
    cols
}

/// Number of orbits: multisets of size `r` of admissible columns.
pub fn basis_dimension(n: usize, r: usize, kind: BasisKind) -> u128 {
    let c = columns(n, kind).len() as u128;
    if c == 0 {
        return 0;
    }
    binomial(c + r as u128 - 1, r as u128)
}

fn enumerate_basis(n: usize, r: usize, kind: BasisKind) -> Vec<PairOrbit> {
    let cols = columns(n, kind);
    let mut out = Vec::new();
    let mut pick = vec![0usize; r];
    loop {
        let (i, j): (Vec<u8>, Vec<u8>) = pick.iter().map(|&c| cols[c]).unzip();
        let o = PairOrbit::canonical(&MultiIndex::new_unchecked(n, i), &MultiIndex::new_unchecked(n, j))
            .expect("same shape");
        out.push(o);
        // next non-decreasing sequence of column indices
        let mut k = r;
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            if pick[k] + 1 < cols.len() {
                let v = pick[k] + 1;
                for x in pick.iter_mut().skip(k) {
                    *x = v;
                }
                break;
            }
        }
    }
}

/// Canonical orbits `ξ_{i,j}` with `i ≤ j`, sorted.
pub fn borel_basis(n: usize, r: usize) -> Vec<PairOrbit> {
    enumerate_basis(n, r, BasisKind::Borel)
}

/// All canonical orbits `ξ_{i,j}`, sorted.
pub fn full_basis(n: usize, r: usize) -> Vec<PairOrbit> {
    enumerate_basis(n, r, BasisKind::Full)
}

/// `ξ_x · ξ_y` with integer coefficients, sorted by label.
///
/// The second factor is first re-aligned so that its left index equals the
/// right index `j` of `x` literally: positions are matched stably, each
/// entry of `j` taking the next unused position of `y.i` with the same value.
/// The product is then `Σ_σ [Σ_{iσ,h} : Σ_{iσ,j,h}] ξ_{iσ,h}` over a
/// transversal of `Σ_{i,j} \ Σ_j / Σ_{j,h}`.
pub fn multiply_orbits(x: &PairOrbit, y: &PairOrbit) -> Vec<(PairOrbit, i64)> {
    assert!(x.n() == y.n() && x.r() == y.r(), "factors of different shape");
    if x.right_weight() != y.left_weight() {
        return Vec::new();
    }
    if x.is_diagonal() {
        return vec![(y.clone(), 1)];
    }
    if y.is_diagonal() {
        return vec![(x.clone(), 1)];
    }
    let (i, j) = (x.i(), x.j());
    let r = x.r();
    let mut used = vec![false; r];
    let mut pi = Vec::with_capacity(r);
    for &v in j.entries() {
        let t = (0..r).find(|&t| !used[t] && y.i().entries()[t] == v).expect("equal weights");
        used[t] = true;
        pi.push(t);
    }
    let pi = Permutation::from_images(pi).expect("bijection");
    let h = y.j().act(&pi);

    let g = crate::symcomb::stabilizer(j);
    let left = stabilizer_pair(i, j);
    let right = stabilizer_pair(j, &h);
    let reps = double_coset_transversal(&left, &g, &right).expect("stabilizers refine Σ_j");
    let mut acc: BTreeMap<PairOrbit, i64> = BTreeMap::new();
    for sigma in reps {
        let is = i.act(&sigma);
        let outer = stabilizer_pair(&is, &h);
        let inner = stabilizer_triple(&is, j, &h);
        let idx = subgroup_index(&outer, &inner).expect("intersection refines");
        let label = PairOrbit::canonical(&is, &h).expect("same shape");
        *acc.entry(label).or_insert(0) += i64::try_from(idx).expect("index fits i64");
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

type TableEntry = ((usize, usize), Vec<(usize, i64)>);

/// Builds `S⁺(n,r)` or `S(n,r)` with its full multiplication table.
pub fn build_algebra(n: usize, r: usize, p: u64, kind: BasisKind, cap: &ScaleCap) -> Result<StructureAlgebra> {
    check_char(p)?;
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    cap.check(n, r, kind)?;
    let orbits = enumerate_basis(n, r, kind);
    let index: HashMap<&PairOrbit, usize> = orbits.iter().enumerate().map(|(k, o)| (o, k)).collect();
    let mut by_left: HashMap<Composition, Vec<usize>> = HashMap::new();
    for (k, o) in orbits.iter().enumerate() {
        by_left.entry(o.left_weight()).or_default().push(k);
    }
    let rows: Vec<Vec<TableEntry>> = (0..orbits.len())
        .into_par_iter()
        .map(|h| {
            let x = &orbits[h];
            let mut row = Vec::new();
            if let Some(partners) = by_left.get(&x.right_weight()) {
                for &l in partners {
                    let prod = multiply_orbits(x, &orbits[l]);
                    if prod.is_empty() {
                        continue;
                    }
                    let terms = prod
                        .into_iter()
                        .map(|(o, c)| (*index.get(&o).expect("basis closed under products"), c))
                        .collect();
                    row.push(((h, l), terms));
                }
            }
            row
        })
        .collect();
    let table: BTreeMap<(usize, usize), Vec<(usize, i64)>> = rows.into_iter().flatten().collect();
    let mut idem: Vec<(Composition, usize)> =
        orbits.iter().enumerate().filter(|(_, o)| o.is_diagonal()).map(|(k, o)| (o.left_weight(), k)).collect();
    idem.sort_by(|a, b| b.0.cmp(&a.0));
    let idempotents = idem.into_iter().map(|(_, k)| k).collect();
    let basis = orbits.into_iter().map(Label::Xi).collect();
    StructureAlgebra::from_parts(Some((n, r)), p, basis, idempotents, table)
}
